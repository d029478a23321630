"""Coefficients, compositions and noncommutative symmetric functions."""
