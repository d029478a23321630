"""Parking functions, trees, paths and the Γ graphs."""
