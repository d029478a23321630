"""Exact coefficient arithmetic.

Coefficient is an element of Q[x][q, 1/q]: a sparse mapping
(q exponent, x exponent) -> Fraction with no zero values stored. The x slot
also carries the variable t (or z) of the scalar specializations.

QSeriesTrunc is a truncated Laurent series in q, kept separate from
Coefficient; it is only needed for the infinite-alphabet quotient.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import sympy

from ..exceptions import NonUnitError, ValidationError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]

Q_SYMBOL = sympy.Symbol("q")
X_SYMBOL = sympy.Symbol("x")


def binomial(top: int, bottom: int) -> int:
    """Integer binomial coefficient, defined for any integer top (binom(-1, m) = (-1)^m)."""
    if bottom < 0:
        return 0
    if top >= 0:
        return comb(top, bottom)
    return (-1) ** bottom * comb(bottom - top - 1, bottom)


def _format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(q_exp: int, x_exp: int) -> str:
    factors = []
    if q_exp == 1:
        factors.append("q")
    elif q_exp != 0:
        factors.append(f"q^{q_exp}")
    if x_exp == 1:
        factors.append("x")
    elif x_exp != 0:
        factors.append(f"x^{x_exp}")
    return "·".join(factors)


class Coefficient:
    """Element of Q[x][q, 1/q] with eager normalization."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for (q_exp, x_exp), value in (terms or {}).items():
            if x_exp < 0:
                raise ValidationError(f"x exponent must be nonnegative, got {x_exp}")
            value = Fraction(value)
            if value:
                clean[(int(q_exp), int(x_exp))] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "Coefficient":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "Coefficient":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "Coefficient":
        return cls._wrap({(0, 0): Fraction(1)})

    @classmethod
    def constant(cls, value: Scalar) -> "Coefficient":
        value = Fraction(value)
        return cls._wrap({(0, 0): value} if value else {})

    @classmethod
    def monomial(cls, q_exp: int = 0, x_exp: int = 0, value: Scalar = 1) -> "Coefficient":
        return cls({(q_exp, x_exp): value})

    @classmethod
    def q(cls, exponent: int = 1) -> "Coefficient":
        return cls._wrap({(exponent, 0): Fraction(1)})

    @classmethod
    def x(cls, exponent: int = 1) -> "Coefficient":
        return cls.monomial(0, exponent)

    @classmethod
    def from_q_polynomial(cls, coefficients: Mapping[int, Scalar]) -> "Coefficient":
        """Build an x-free coefficient from {q exponent: value}."""
        return cls({(e, 0): v for e, v in coefficients.items()})

    @classmethod
    def coerce(cls, value: Any) -> Optional["Coefficient"]:
        """Convert ints and Fractions to constants; None for unsupported types."""
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.constant(value)
        return None

    # Views

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms sorted by (q exponent, x exponent)."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def coefficient(self, q_exp: int = 0, x_exp: int = 0) -> Fraction:
        return self._terms.get((q_exp, x_exp), Fraction(0))

    def is_x_free(self) -> bool:
        return all(x_exp == 0 for _, x_exp in self._terms)

    def min_q_exponent(self) -> Optional[int]:
        return min((q_exp for q_exp, _ in self._terms), default=None)

    def max_q_exponent(self) -> Optional[int]:
        return max((q_exp for q_exp, _ in self._terms), default=None)

    def q_coefficients(self) -> Dict[int, Fraction]:
        """{q exponent: value} for an x-free coefficient."""
        if not self.is_x_free():
            raise ValidationError("q_coefficients needs an x-free coefficient")
        return {q_exp: v for (q_exp, _), v in sorted(self._terms.items())}

    def x_coefficients(self) -> Dict[int, Fraction]:
        """{x exponent: value} for a q-free coefficient."""
        if any(q_exp != 0 for q_exp, _ in self._terms):
            raise ValidationError("x_coefficients needs a q-free coefficient")
        return {x_exp: v for (_, x_exp), v in sorted(self._terms.items(), key=lambda t: t[0][1])}

    # Arithmetic

    def __add__(self, other: Any) -> "Coefficient":
        other = Coefficient.coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for mono, value in other._terms.items():
            total = result.get(mono, 0) + value
            if total:
                result[mono] = total
            else:
                result.pop(mono, None)
        return Coefficient._wrap(result)

    __radd__ = __add__

    def __neg__(self) -> "Coefficient":
        return Coefficient._wrap({m: -v for m, v in self._terms.items()})

    def __sub__(self, other: Any) -> "Coefficient":
        other = Coefficient.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Coefficient":
        other = Coefficient.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "Coefficient":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Coefficient):
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for (qa, xa), va in self._terms.items():
            for (qb, xb), vb in other._terms.items():
                mono = (qa + qb, xa + xb)
                result[mono] = result.get(mono, 0) + va * vb
        return Coefficient._wrap({m: v for m, v in result.items() if v})

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Coefficient":
        factor = Fraction(factor)
        if not factor:
            return Coefficient.zero()
        return Coefficient._wrap({m: v * factor for m, v in self._terms.items()})

    def __truediv__(self, divisor: Scalar) -> "Coefficient":
        if not isinstance(divisor, (int, Fraction)) or isinstance(divisor, bool):
            return NotImplemented
        if divisor == 0:
            raise ZeroDivisionError("Coefficient division by zero")
        return self.scale(1 / Fraction(divisor))

    def __pow__(self, exponent: int) -> "Coefficient":
        if exponent < 0:
            if len(self._terms) == 1:
                ((q_exp, x_exp), value), = self._terms.items()
                if x_exp == 0:
                    return Coefficient._wrap({(q_exp * exponent, 0): value ** exponent})
            raise NonUnitError(f"Cannot invert {self}")
        result = Coefficient.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift_q(self, exponent: int) -> "Coefficient":
        """Multiply by q^exponent."""
        if exponent == 0:
            return self
        return Coefficient._wrap({(q + exponent, x): v for (q, x), v in self._terms.items()})

    def shift_x(self, exponent: int) -> "Coefficient":
        """Multiply by x^exponent."""
        return Coefficient._wrap({(q, x + exponent): v for (q, x), v in self._terms.items()})

    # Substitutions

    def sub_q_inverse(self) -> "Coefficient":
        """Replace q by 1/q."""
        return Coefficient._wrap({(-q, x): v for (q, x), v in self._terms.items()})

    def eval_q_one(self) -> "Coefficient":
        """Set q = 1, leaving a polynomial in x."""
        result: Dict[Monomial, Fraction] = {}
        for (_, x_exp), value in self._terms.items():
            result[(0, x_exp)] = result.get((0, x_exp), 0) + value
        return Coefficient._wrap({m: v for m, v in result.items() if v})

    def eval_x(self, value: Scalar) -> "Coefficient":
        """Substitute a rational number for x."""
        value = Fraction(value)
        result: Dict[Monomial, Fraction] = {}
        for (q_exp, x_exp), coeff in self._terms.items():
            result[(q_exp, 0)] = result.get((q_exp, 0), 0) + coeff * value ** x_exp
        return Coefficient._wrap({m: v for m, v in result.items() if v})

    def evaluate(self, q_value: Scalar = 1, x_value: Scalar = 0) -> Fraction:
        """Numeric value at rational q (nonzero when negative exponents occur) and x."""
        q_value, x_value = Fraction(q_value), Fraction(x_value)
        return sum(
            (v * q_value ** q_exp * x_value ** x_exp for (q_exp, x_exp), v in self._terms.items()),
            Fraction(0),
        )

    # Comparison and hashing

    def __eq__(self, other: Any) -> bool:
        other = Coefficient.coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Serialization

    def to_json(self) -> List[List[Any]]:
        """[[qExp, xExp, "num", "den"], ...] sorted by (qExp, xExp)."""
        return [
            [q_exp, x_exp, str(v.numerator), str(v.denominator)]
            for (q_exp, x_exp), v in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[Any]]) -> "Coefficient":
        terms = {}
        for q_exp, x_exp, num, den in data:
            terms[(int(q_exp), int(x_exp))] = Fraction(int(num), int(den))
        return cls(terms)

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(*[
            sympy.Rational(v.numerator, v.denominator) * Q_SYMBOL ** q_exp * X_SYMBOL ** x_exp
            for (q_exp, x_exp), v in self.items()
        ])

    @classmethod
    def from_sympy(cls, expr: Any) -> "Coefficient":
        """
        Convert a Laurent polynomial expression in q and x.

        Args:
            expr: sympy expression using only the symbols q and x

        Returns:
            The expanded expression as a Coefficient

        Raises:
            ValidationError: If the expression is not a Laurent polynomial in q, x
        """
        expanded = sympy.expand(sympy.sympify(expr))
        terms: Dict[Monomial, Fraction] = {}
        for term in sympy.Add.make_args(expanded):
            if term == 0:
                continue
            scalar, rest = term.as_coeff_Mul()
            powers = rest.as_powers_dict()
            q_exp = sympy.sympify(powers.pop(Q_SYMBOL, 0))
            x_exp = sympy.sympify(powers.pop(X_SYMBOL, 0))
            leftovers = {b: e for b, e in powers.items() if b != 1}
            if leftovers or not scalar.is_Rational or not q_exp.is_integer or not x_exp.is_integer:
                raise ValidationError(f"Not a Laurent polynomial in q and x: {expr}")
            mono = (int(q_exp), int(x_exp))
            terms[mono] = terms.get(mono, 0) + Fraction(int(scalar.p), int(scalar.q))
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (q_exp, x_exp), value in self.items():
            mono = _format_monomial(q_exp, x_exp)
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            if not mono:
                body = _format_scalar(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{_format_scalar(magnitude)}·{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Coefficient({self})"


def q_integer(n: int) -> Coefficient:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return Coefficient.from_q_polynomial({e: 1 for e in range(n)})


@lru_cache(maxsize=None)
def binomial_poly(m: int) -> Coefficient:
    """binom(x, m) = x(x-1)...(x-m+1)/m! as a polynomial in x."""
    if m < 0:
        raise ValidationError(f"binomial_poly needs m >= 0, got {m}")
    result = Coefficient.one()
    for j in range(m):
        result = result * (Coefficient.x() - j)
    return result / factorial(m)


@lru_cache(maxsize=None)
def rising_poly(k: int) -> Coefficient:
    """x(x+1)...(x+k-1)/k!, i.e. S_k evaluated on the alphabet x."""
    if k < 0:
        raise ValidationError(f"rising_poly needs k >= 0, got {k}")
    result = Coefficient.one()
    for j in range(k):
        result = result * (Coefficient.x() + j)
    return result / factorial(k)


class QSeriesTrunc:
    """Laurent series in q known below a truncation order."""

    __slots__ = ("order", "_terms")

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None, order: int = 0):
        self.order = int(order)
        self._terms: Dict[int, Fraction] = {}
        for exp, value in (terms or {}).items():
            value = Fraction(value)
            if value and exp < self.order:
                self._terms[int(exp)] = value

    @classmethod
    def one(cls, order: int) -> "QSeriesTrunc":
        return cls({0: 1}, order)

    @classmethod
    def from_coefficient(cls, coeff: Coefficient, order: int) -> "QSeriesTrunc":
        if not coeff.is_x_free():
            raise ValidationError("Only x-free coefficients convert to q-series")
        return cls(coeff.q_coefficients(), order)

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> Fraction:
        if exponent >= self.order:
            raise ValidationError(f"q^{exponent} is beyond the truncation order {self.order}")
        return self._terms.get(exponent, Fraction(0))

    def valuation(self) -> int:
        """Lowest exponent present; the order itself for the zero series."""
        return min(self._terms, default=self.order)

    def truncate(self, order: int) -> "QSeriesTrunc":
        return QSeriesTrunc(self._terms, min(order, self.order))

    def __add__(self, other: "QSeriesTrunc") -> "QSeriesTrunc":
        order = min(self.order, other.order)
        result = dict(self._terms)
        for exp, value in other._terms.items():
            result[exp] = result.get(exp, 0) + value
        return QSeriesTrunc(result, order)

    def __neg__(self) -> "QSeriesTrunc":
        return QSeriesTrunc({e: -v for e, v in self._terms.items()}, self.order)

    def __sub__(self, other: "QSeriesTrunc") -> "QSeriesTrunc":
        return self + (-other)

    def __mul__(self, other: Any) -> "QSeriesTrunc":
        if isinstance(other, (int, Fraction)):
            return QSeriesTrunc({e: v * other for e, v in self._terms.items()}, self.order)
        if not isinstance(other, QSeriesTrunc):
            return NotImplemented
        order = min(self.order + other.valuation(), other.order + self.valuation())
        result: Dict[int, Fraction] = {}
        for ea, va in self._terms.items():
            for eb, vb in other._terms.items():
                if ea + eb < order:
                    result[ea + eb] = result.get(ea + eb, 0) + va * vb
        return QSeriesTrunc(result, order)

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "QSeriesTrunc":
        """Multiply by q^exponent."""
        return QSeriesTrunc({e + exponent: v for e, v in self._terms.items()}, self.order + exponent)

    def reciprocal(self) -> "QSeriesTrunc":
        """
        Inverse of a series with invertible constant term.

        Raises:
            NonUnitError: If negative exponents occur or the constant term is zero
        """
        if self.valuation() != 0 or 0 not in self._terms:
            raise NonUnitError("q-series reciprocal needs a nonzero constant term and no negative powers")
        inverse_constant = 1 / self._terms[0]
        result: Dict[int, Fraction] = {0: inverse_constant}
        for k in range(1, self.order):
            total = sum(
                (self._terms[j] * result.get(k - j, 0) for j in self._terms if 0 < j <= k),
                Fraction(0),
            )
            if total:
                result[k] = -inverse_constant * total
        return QSeriesTrunc(result, self.order)

    def agrees_with(self, other: "QSeriesTrunc") -> bool:
        """Equality of all coefficients below the smaller order."""
        order = min(self.order, other.order)
        return self.truncate(order)._terms == other.truncate(order)._terms

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QSeriesTrunc):
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def __str__(self) -> str:
        body = str(Coefficient.from_q_polynomial(self._terms))
        return f"{body} + O(q^{self.order})"

    def __repr__(self) -> str:
        return f"QSeriesTrunc({self})"


def q_pochhammer(n: int, order: int) -> QSeriesTrunc:
    """(q)_n = (1-q)(1-q^2)...(1-q^n) truncated at the given order."""
    result = QSeriesTrunc.one(order)
    for i in range(1, n + 1):
        result = result * QSeriesTrunc({0: 1, i: -1}, order)
    return result
