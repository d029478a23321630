"""Noncommutative symmetric functions.

Elements are finite combinations of keys (tuples of ints) in one of the S, R
or Λ bases. All products are computed in the S basis; R and Λ are views
reached through linear basis changes. Zero letters are allowed in S keys
only (they stand for S_0 in the generalized inversion equation).
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .coeff import Coefficient, binomial
from .comp import Parts, coarsenings, compositions, conjugate, near_concatenation
from ..exceptions import BasisError, NonUnitError, ValidationError

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    """Basis tag; Λ is written L in keys and JSON."""

    S = "S"
    R = "R"
    L = "L"


def _text_order(key: Parts) -> Tuple[int, int, Tuple[int, ...]]:
    # degree, then length, then reverse lexicographic
    return (sum(key), len(key), tuple(-p for p in key))


def _format_key(key: Parts, letter: str) -> str:
    if not key:
        return "1"
    return f"{letter}[{','.join(map(str, key))}]"


class NcsfElement:
    """Finite linear combination of basis keys with Coefficient values."""

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(
        self,
        terms: Optional[Mapping[Sequence[int], Any]] = None,
        basis: Basis = Basis.S
    ):
        self.basis = Basis(basis)
        clean: Dict[Parts, Coefficient] = {}
        for key, value in (terms or {}).items():
            key = tuple(int(p) for p in key)
            if any(p < 0 for p in key):
                raise ValidationError(f"Keys must have nonnegative letters: {list(key)}")
            if self.basis is not Basis.S and 0 in key:
                raise BasisError(
                    f"Zero letters are only allowed in the S basis, got {self.basis.value}{list(key)}"
                )
            coeff = Coefficient.coerce(value)
            if coeff is None:
                raise ValidationError(f"Unsupported coefficient type: {type(value).__name__}")
            previous = clean.get(key)
            clean[key] = coeff if previous is None else previous + coeff
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Parts, Coefficient], basis: Basis) -> "NcsfElement":
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, basis: Basis = Basis.S) -> "NcsfElement":
        return cls._wrap({}, Basis(basis))

    @classmethod
    def one(cls, basis: Basis = Basis.S) -> "NcsfElement":
        return cls._wrap({(): Coefficient.one()}, Basis(basis))

    @classmethod
    def monomial(
        cls,
        key: Sequence[int],
        coeff: Any = 1,
        basis: Basis = Basis.S
    ) -> "NcsfElement":
        return cls({tuple(key): coeff}, basis)

    @classmethod
    def generator(cls, n: int) -> "NcsfElement":
        """S_n (S_0 is the zero-letter key, not the unit)."""
        return cls._wrap({(n,): Coefficient.one()}, Basis.S)

    # Views

    @property
    def terms(self) -> Dict[Parts, Coefficient]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Parts, Coefficient]]:
        """Terms with keys sorted lexicographically."""
        return sorted(self._terms.items())

    def keys(self) -> List[Parts]:
        return sorted(self._terms)

    def coefficient(self, key: Sequence[int]) -> Coefficient:
        return self._terms.get(tuple(key), Coefficient.zero())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> List[int]:
        return sorted({sum(key) for key in self._terms})

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = self.degrees()
        if degree is None:
            return len(degrees) <= 1
        return all(d == degree for d in degrees)

    def homogeneous_component(self, degree: int) -> "NcsfElement":
        return NcsfElement._wrap(
            {k: v for k, v in self._terms.items() if sum(k) == degree}, self.basis
        )

    def has_zero_letters(self) -> bool:
        return any(0 in key for key in self._terms)

    # Arithmetic

    def _check_basis(self, other: "NcsfElement") -> None:
        if other.basis is not self.basis:
            raise BasisError(f"Cannot combine {self.basis.value} and {other.basis.value} elements")

    def __add__(self, other: "NcsfElement") -> "NcsfElement":
        if not isinstance(other, NcsfElement):
            return NotImplemented
        self._check_basis(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            previous = result.get(key)
            total = value if previous is None else previous + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return NcsfElement._wrap(result, self.basis)

    def __neg__(self) -> "NcsfElement":
        return NcsfElement._wrap({k: -v for k, v in self._terms.items()}, self.basis)

    def __sub__(self, other: "NcsfElement") -> "NcsfElement":
        if not isinstance(other, NcsfElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> "NcsfElement":
        if isinstance(other, NcsfElement):
            if self.basis is Basis.R and other.basis is Basis.R:
                return ribbon_mul(self, other)
            return mul(self, other)
        coeff = Coefficient.coerce(other)
        if coeff is None:
            return NotImplemented
        return self.scale(coeff)

    def __rmul__(self, other: Any) -> "NcsfElement":
        coeff = Coefficient.coerce(other)
        if coeff is None:
            return NotImplemented
        return self.scale(coeff)

    def scale(self, coeff: Any) -> "NcsfElement":
        coeff = Coefficient.coerce(coeff)
        return self.map_coefficients(lambda c: c * coeff)

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient]) -> "NcsfElement":
        result = {}
        for key, value in self._terms.items():
            mapped = fn(value)
            if mapped:
                result[key] = mapped
        return NcsfElement._wrap(result, self.basis)

    def shift_q(self, exponent: int) -> "NcsfElement":
        return self.map_coefficients(lambda c: c.shift_q(exponent))

    def sub_q_inverse(self) -> "NcsfElement":
        return self.map_coefficients(Coefficient.sub_q_inverse)

    def eval_q_one(self) -> "NcsfElement":
        return self.map_coefficients(Coefficient.eval_q_one)

    def eval_x(self, value: Any) -> "NcsfElement":
        return self.map_coefficients(lambda c: c.eval_x(value))

    # Comparison

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, NcsfElement):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.basis is other.basis and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.basis, frozenset(self._terms.items())))
        return self._hash

    # Rendering and serialization

    def to_text(self, letter: Optional[str] = None) -> str:
        """Render as e.g. 'S[2] + q·S[1,1]'; the letter defaults to the basis tag."""
        if not self._terms:
            return "0"
        letter = letter or self.basis.value
        pieces = []
        for key in sorted(self._terms, key=_text_order):
            coeff = self._terms[key]
            negative = False
            if len(coeff) == 1 and next(iter(coeff.terms.values())) < 0:
                negative = True
                coeff = -coeff
            key_text = _format_key(key, letter)
            if coeff == 1:
                body = key_text
            elif not key:
                body = str(coeff)
            elif len(coeff) == 1:
                body = f"{coeff}·{key_text}"
            else:
                body = f"({coeff})·{key_text}"
            pieces.append((negative, body))
        text = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            text += f" {'-' if negative else '+'} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"NcsfElement({self})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "basis": self.basis.value,
            "terms": [{"key": list(key), "coeff": coeff.to_json()} for key, coeff in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "NcsfElement":
        return cls(
            {tuple(term["key"]): Coefficient.from_json(term["coeff"]) for term in data["terms"]},
            Basis(data["basis"]),
        )


def mul(a: NcsfElement, b: NcsfElement) -> NcsfElement:
    """
    Product in the S basis (bilinear key concatenation).

    Raises:
        BasisError: If either factor is not in the S basis
    """
    if a.basis is not Basis.S or b.basis is not Basis.S:
        raise BasisError("Products are computed in the S basis; convert the factors first")
    result: Dict[Parts, Coefficient] = {}
    for key_a, coeff_a in a._terms.items():
        for key_b, coeff_b in b._terms.items():
            key = key_a + key_b
            value = coeff_a * coeff_b
            previous = result.get(key)
            result[key] = value if previous is None else previous + value
    return NcsfElement._wrap({k: v for k, v in result.items() if v}, Basis.S)


def _require(a: NcsfElement, basis: Basis, operation: str) -> None:
    if a.basis is not basis:
        raise BasisError(f"{operation} expects the {basis.value} basis, got {a.basis.value}")
    if a.has_zero_letters():
        raise BasisError(f"{operation} is undefined on keys with zero letters")


def _linear_map(
    a: NcsfElement,
    image: Callable[[Parts], Iterable[Tuple[Parts, int]]],
    target: Basis
) -> NcsfElement:
    result: Dict[Parts, Coefficient] = {}
    for key, coeff in a._terms.items():
        for new_key, sign in image(key):
            value = coeff.scale(sign)
            previous = result.get(new_key)
            result[new_key] = value if previous is None else previous + value
    return NcsfElement._wrap({k: v for k, v in result.items() if v}, target)


def _ribbon_image(key: Parts) -> List[Tuple[Parts, int]]:
    return [(coarse, 1) for coarse in coarsenings(key)]


def _ribbon_inverse_image(key: Parts) -> List[Tuple[Parts, int]]:
    return [(coarse, (-1) ** (len(key) - len(coarse))) for coarse in coarsenings(key)]


def to_ribbon(a: NcsfElement) -> NcsfElement:
    """S^I = sum of R_J over D(J) ⊆ D(I)."""
    _require(a, Basis.S, "to_ribbon")
    return _linear_map(a, _ribbon_image, Basis.R)


def from_ribbon(a: NcsfElement) -> NcsfElement:
    """R_J = sum over D(I) ⊆ D(J) of (-1)^(l(J)-l(I)) S^I."""
    _require(a, Basis.R, "from_ribbon")
    return _linear_map(a, _ribbon_inverse_image, Basis.S)


def ribbon_mul(a: NcsfElement, b: NcsfElement) -> NcsfElement:
    """
    Product in the R basis: R_I R_J = R_(I·J) + R_(I▷J), and R_() is the unit.

    Raises:
        BasisError: If either factor is not in the R basis
    """
    _require(a, Basis.R, "ribbon_mul")
    _require(b, Basis.R, "ribbon_mul")
    result: Dict[Parts, Coefficient] = {}
    for key_a, coeff_a in a._terms.items():
        for key_b, coeff_b in b._terms.items():
            value = coeff_a * coeff_b
            keys = [key_a + key_b]
            if key_a and key_b:
                keys.append(near_concatenation(key_a, key_b))
            for key in keys:
                previous = result.get(key)
                result[key] = value if previous is None else previous + value
    return NcsfElement._wrap({k: v for k, v in result.items() if v}, Basis.R)


# Multiplicative maps: defined on generators, extended to keys by concatenation.

@lru_cache(maxsize=None)
def _generator_image(kind: str, n: int, param: int) -> Tuple[Tuple[Parts, Coefficient], ...]:
    image = []
    for parts in compositions(n):
        length = len(parts)
        if kind == "elementary":
            value = Coefficient.constant((-1) ** (n - length))
        elif kind == "negate":
            value = Coefficient.constant((-1) ** length)
        elif kind == "multiple":
            value = Coefficient.constant(binomial(param, length))
        elif kind == "q_interval":
            value = monomial_q_eval(parts, param)
        else:
            raise ValueError(f"Unknown generator image {kind}")
        if value:
            image.append((parts, value))
    return tuple(image)


@lru_cache(maxsize=8192)
def _key_image(kind: str, key: Parts, param: int) -> Tuple[Tuple[Parts, Coefficient], ...]:
    current: Dict[Parts, Coefficient] = {(): Coefficient.one()}
    for letter in key:
        expanded: Dict[Parts, Coefficient] = {}
        for prefix, coeff in current.items():
            for parts, value in _generator_image(kind, letter, param):
                new_key = prefix + parts
                term = coeff * value
                previous = expanded.get(new_key)
                expanded[new_key] = term if previous is None else previous + term
        current = {k: v for k, v in expanded.items() if v}
    return tuple(current.items())


def _multiplicative_map(a: NcsfElement, kind: str, param: int, target: Basis) -> NcsfElement:
    result: Dict[Parts, Coefficient] = {}
    for key, coeff in a._terms.items():
        for new_key, value in _key_image(kind, key, param):
            term = coeff * value
            previous = result.get(new_key)
            result[new_key] = term if previous is None else previous + term
    return NcsfElement._wrap({k: v for k, v in result.items() if v}, target)


def to_lambda(a: NcsfElement) -> NcsfElement:
    """S_n = sum over J ⊨ n of (-1)^(n-l(J)) Λ^J, extended multiplicatively."""
    _require(a, Basis.S, "to_lambda")
    return _multiplicative_map(a, "elementary", 0, Basis.L)


def from_lambda(a: NcsfElement) -> NcsfElement:
    """Λ_n = sum over J ⊨ n of (-1)^(n-l(J)) S^J, extended multiplicatively."""
    _require(a, Basis.L, "from_lambda")
    return _multiplicative_map(a, "elementary", 0, Basis.S)


def nu_involution(a: NcsfElement) -> NcsfElement:
    """ν: S^I -> S^(I~), coefficients unchanged."""
    _require(a, Basis.S, "nu_involution")
    return NcsfElement._wrap({conjugate(k): v for k, v in a._terms.items()}, Basis.S)


def alphabet_negate(a: NcsfElement) -> NcsfElement:
    """A -> -A: S_n(-A) = sum over I ⊨ n of (-1)^l(I) S^I."""
    _require(a, Basis.S, "alphabet_negate")
    return _multiplicative_map(a, "negate", 0, Basis.S)


def alphabet_multiple(a: NcsfElement, n: int) -> NcsfElement:
    """A -> nA: S_m(nA) = sum over I ⊨ m of binom(n, l(I)) S^I, any integer n."""
    _require(a, Basis.S, "alphabet_multiple")
    return _multiplicative_map(a, "multiple", int(n), Basis.S)


def alphabet_q_interval(a: NcsfElement, n: int) -> NcsfElement:
    """A -> [n]_q A: S_m([n]_q A) = sum over I ⊨ m of M_I(1, q, ..., q^(n-1)) S^I."""
    if n < 0:
        raise ValidationError(f"q-interval length must be nonnegative, got {n}")
    _require(a, Basis.S, "alphabet_q_interval")
    return _multiplicative_map(a, "q_interval", int(n), Basis.S)


def generator_image(kind: str, n: int, param: int = 0) -> NcsfElement:
    """Image of S_n under one of the multiplicative maps ('negate', 'multiple', 'q_interval')."""
    return NcsfElement._wrap(dict(_generator_image(kind, n, param)), Basis.S)


@lru_cache(maxsize=None)
def monomial_q_eval(parts: Parts, n: int) -> Coefficient:
    """
    M_I(1, q, ..., q^(n-1)).

    Sum over 0 <= j_1 < ... < j_l <= n-1 of q^(i_1 j_1 + ... + i_l j_l).

    Args:
        parts: The composition I
        n: Number of letters of the q-interval alphabet

    Returns:
        A q-polynomial with nonnegative integer coefficients (zero if l(I) > n)
    """
    if n < 0:
        raise ValidationError(f"Alphabet size must be nonnegative, got {n}")
    length = len(parts)
    table = [Coefficient.one()] + [Coefficient.zero()] * length
    for j in range(n):
        for k in range(length, 0, -1):
            if table[k - 1]:
                table[k] = table[k] + table[k - 1].shift_q(parts[k - 1] * j)
    return table[length]


# Scalar specializations

def specialize_one(a: NcsfElement) -> Coefficient:
    """A = 1: every S^I (zero letters included) maps to 1."""
    if a.basis is not Basis.S:
        raise BasisError("specialize_one expects the S basis")
    total = Coefficient.zero()
    for coeff in a._terms.values():
        total = total + coeff
    return total


def specialize_exp(a: NcsfElement) -> Coefficient:
    """A = t𝔼: S^I -> t^n / (i_1! ... i_l!), t stored in the x slot."""
    if a.basis is not Basis.S:
        raise BasisError("specialize_exp expects the S basis")
    total = Coefficient.zero()
    for key, coeff in a._terms.items():
        weight = Fraction(1, prod(factorial(p) for p in key))
        total = total + (coeff * weight).shift_x(sum(key))
    return total


def specialize_binomial_int(a: NcsfElement, alpha: int) -> Coefficient:
    """A = zα: S_n -> binom(α+n-1, n) z^n, z stored in the x slot."""
    if a.basis is not Basis.S:
        raise BasisError("specialize_binomial_int expects the S basis")
    total = Coefficient.zero()
    for key, coeff in a._terms.items():
        weight = prod(binomial(alpha + p - 1, p) for p in key)
        if weight:
            total = total + (coeff * weight).shift_x(sum(key))
    return total


def commutative_image(a: NcsfElement) -> Dict[Parts, Coefficient]:
    """Let the S_i commute: sum coefficients over keys with equal part multisets."""
    _require(a, Basis.S, "commutative_image")
    result: Dict[Parts, Coefficient] = {}
    for key, coeff in a._terms.items():
        partition = tuple(sorted(key, reverse=True))
        result[partition] = result.get(partition, Coefficient.zero()) + coeff
    return {k: v for k, v in sorted(result.items(), key=lambda kv: _text_order(kv[0])) if v}


class XSeries:
    """Truncated series in a central variable x with NcsfElement coefficients."""

    __slots__ = ("order", "_entries")

    def __init__(self, entries: Sequence[NcsfElement], order: Optional[int] = None):
        entries = list(entries)
        if order is None:
            order = len(entries) - 1
        if order < 0:
            raise ValidationError("XSeries needs a nonnegative truncation order")
        padded = entries[: order + 1] + [NcsfElement.zero()] * (order + 1 - len(entries))
        for entry in padded:
            if entry.basis is not Basis.S:
                raise BasisError("XSeries entries must be in the S basis")
        self.order = order
        self._entries = tuple(padded)

    @classmethod
    def one(cls, order: int) -> "XSeries":
        return cls([NcsfElement.one()], order)

    @property
    def entries(self) -> Tuple[NcsfElement, ...]:
        return self._entries

    def __getitem__(self, degree: int) -> NcsfElement:
        if degree < 0 or degree > self.order:
            raise ValidationError(f"x^{degree} is beyond the truncation order {self.order}")
        return self._entries[degree]

    def __add__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        return XSeries([self._entries[m] + other._entries[m] for m in range(order + 1)], order)

    def __neg__(self) -> "XSeries":
        return XSeries([-e for e in self._entries], self.order)

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + (-other)

    def __mul__(self, other: "XSeries") -> "XSeries":
        if not isinstance(other, XSeries):
            return NotImplemented
        return series_mul(self, other)

    def left_multiply(self, element: NcsfElement) -> "XSeries":
        """element · T, coefficientwise from the left."""
        return XSeries([mul(element, e) if e else e for e in self._entries], self.order)

    def truncate(self, order: int) -> "XSeries":
        return XSeries(self._entries[: order + 1], min(order, self.order))

    def inverse(self) -> "XSeries":
        return series_inverse(self)

    def subst_x_scale(self, exponent: int) -> "XSeries":
        return series_subst_x_scale(self, exponent)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self._entries == other._entries

    def to_text(self, letter: Optional[str] = None) -> str:
        pieces = []
        for degree, entry in enumerate(self._entries):
            if not entry:
                continue
            body = entry.to_text(letter)
            if degree == 0:
                pieces.append(body)
            else:
                power = "x" if degree == 1 else f"x^{degree}"
                pieces.append(f"{power}·({body})")
        text = " + ".join(pieces) if pieces else "0"
        return f"{text} + O(x^{self.order + 1})"

    def __str__(self) -> str:
        return self.to_text()


def series_mul(a: XSeries, b: XSeries) -> XSeries:
    """Cauchy product; the order of the NCSF factors is preserved."""
    order = min(a.order, b.order)
    entries = []
    for m in range(order + 1):
        total = NcsfElement.zero()
        for i in range(m + 1):
            left, right = a._entries[i], b._entries[m - i]
            if left and right:
                total = total + mul(left, right)
        entries.append(total)
    return XSeries(entries, order)


def series_inverse(t: XSeries) -> XSeries:
    """
    Two-sided inverse of a series whose x^0 entry is the unit.

    Raises:
        NonUnitError: If the constant entry is not 1·S^()
    """
    if t._entries[0] != NcsfElement.one():
        raise NonUnitError("Series inversion needs constant term 1")
    inverse = [NcsfElement.one()]
    for m in range(1, t.order + 1):
        total = NcsfElement.zero()
        for j in range(1, m + 1):
            left, right = t._entries[j], inverse[m - j]
            if left and right:
                total = total + mul(left, right)
        inverse.append(-total)
    return XSeries(inverse, t.order)


def series_subst_x_scale(t: XSeries, exponent: int) -> XSeries:
    """x -> q^exponent x: the x^m entry is multiplied by q^(exponent·m)."""
    return XSeries([e.shift_q(exponent * m) for m, e in enumerate(t._entries)], t.order)
