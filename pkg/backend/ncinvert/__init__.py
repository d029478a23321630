"""ncinvert: noncommutative Lagrange inversion and parking-function characteristics."""

__version__ = "1.0.0"
