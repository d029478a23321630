"""Truncated power series in one variable with exact rational coefficients.

A series is a list [a_0, a_1, ..., a_N]; products and powers keep the length
of the shorter operand.
"""
from fractions import Fraction
from typing import List, Sequence

from ..exceptions import NonUnitError, ValidationError

Series = List[Fraction]


def as_series(values: Sequence, length: int) -> Series:
    """Pad or cut to the given length."""
    result = [Fraction(v) for v in values[:length]]
    return result + [Fraction(0)] * (length - len(result))


def mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Series:
    n = min(len(a), len(b))
    return [sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0)) for m in range(n)]


def inverse(a: Sequence[Fraction]) -> Series:
    """1/a for a with nonzero constant term."""
    if not a or a[0] == 0:
        raise NonUnitError("Inverting a series with zero constant term")
    result = [1 / Fraction(a[0])]
    for m in range(1, len(a)):
        total = sum((a[j] * result[m - j] for j in range(1, m + 1)), Fraction(0))
        result.append(-total / a[0])
    return result


def power(a: Sequence[Fraction], exponent: int) -> Series:
    """Integer power by repeated squaring; negative exponents go through inverse."""
    if exponent < 0:
        return power(inverse(a), -exponent)
    result = as_series([1], len(a))
    base = list(a)
    while exponent > 0:
        if exponent % 2 == 1:
            result = mul(result, base)
        base = mul(base, base)
        exponent //= 2
    return result


def exp(a: Sequence[Fraction]) -> Series:
    """exp(a) for a with zero constant term, from n e_n = sum k a_k e_(n-k)."""
    if a and a[0] != 0:
        raise ValidationError("exp needs a series without constant term")
    result = [Fraction(1)]
    for n in range(1, len(a)):
        total = sum((k * a[k] * result[n - k] for k in range(1, n + 1)), Fraction(0))
        result.append(total / n)
    return result


def shift(a: Sequence[Fraction], places: int = 1) -> Series:
    """Multiply by the variable^places, keeping the length."""
    return as_series([Fraction(0)] * places + list(a), len(a))


def scale_variable(a: Sequence[Fraction], factor) -> Series:
    """a(factor·z)."""
    factor = Fraction(factor)
    return [v * factor ** m for m, v in enumerate(a)]
