"""Parking-function families, statistics, parkization and the characteristic oracle."""
import logging
from enum import Enum
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..algebra.coeff import Coefficient
from ..algebra.comp import Parts, evaluation, packed_evaluation
from ..algebra.ncsf import NcsfElement
from ..config import settings
from ..exceptions import CapExceededError, NotParkingError, ValidationError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class FamilyKind(str, Enum):
    """Parking-function family kinds."""

    CLASSIC = "classic"
    SHIFTED = "shifted"
    ARITHMETIC = "arithmetic"


class ParkingFamily(BaseModel):
    """Family of words whose sorted version satisfies a_i <= l + (i-1)k."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    k: int = Field(1, ge=1)
    l: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _check_parameters(self) -> "ParkingFamily":
        if self.kind is FamilyKind.CLASSIC and (self.k, self.l) != (1, 1):
            raise ValueError("the classic family has k = l = 1")
        if self.kind is FamilyKind.SHIFTED and self.k != 1:
            raise ValueError("shifted families have k = 1")
        return self

    @classmethod
    def classic(cls) -> "ParkingFamily":
        return cls(kind=FamilyKind.CLASSIC)

    @classmethod
    def shifted(cls, r: int) -> "ParkingFamily":
        return cls(kind=FamilyKind.SHIFTED, k=1, l=r)

    @classmethod
    def arithmetic(cls, k: int, l: int) -> "ParkingFamily":
        return cls(kind=FamilyKind.ARITHMETIC, k=k, l=l)

    @classmethod
    def parse(cls, text: str) -> "ParkingFamily":
        """
        Parse the CLI syntax: 'classic', 'r=R' or 'k,l=K,L'.

        Raises:
            ValidationError: On malformed text or invalid parameters
        """
        text = text.strip()
        try:
            if text == "classic":
                return cls.classic()
            if text.startswith("r="):
                return cls.shifted(int(text[2:]))
            if text.startswith("k,l="):
                k, l = text[4:].split(",")
                return cls.arithmetic(int(k), int(l))
        except ValueError as e:
            raise ValidationError(f"Invalid parking family {text!r}: {e}")
        raise ValidationError(f"Unknown parking family {text!r}; use classic, r=R or k,l=K,L")

    @property
    def r(self) -> int:
        return self.l

    def bound(self, i: int) -> int:
        """Largest value allowed at (1-based) position i of the sorted word."""
        return self.l + (i - 1) * self.k

    def bounds(self, n: int) -> Tuple[int, ...]:
        return tuple(self.bound(i) for i in range(1, n + 1))

    def label(self) -> str:
        if self.kind is FamilyKind.CLASSIC:
            return "classic"
        if self.kind is FamilyKind.SHIFTED:
            return f"shifted(r={self.l})"
        return f"arithmetic(k={self.k}, l={self.l})"


CLASSIC = ParkingFamily.classic()


def _check_cap(n: int, cap_name: str, what: str) -> None:
    if n < 0:
        raise ValidationError(f"{what} needs n >= 0, got {n}")
    cap = settings.effective_cap(cap_name)
    if n > cap:
        raise CapExceededError(
            f"{what} with n={n} exceeds the cap {cap} ({cap_name}); raise it with --cap or NCINVERT_CAP",
            details={"n": n, "cap": cap, "cap_name": cap_name}
        )


def is_member(word: Sequence[int], family: ParkingFamily = CLASSIC) -> bool:
    """Sort the word and test a_i <= l + (i-1)k at every position."""
    if any(a < 1 for a in word):
        return False
    return all(a <= family.bound(i) for i, a in enumerate(sorted(word), start=1))


def is_parking(word: Sequence[int]) -> bool:
    return is_member(word, CLASSIC)


def _nondecreasing(family: ParkingFamily, n: int, prefix: List[int]) -> Iterator[Word]:
    position = len(prefix) + 1
    if position > n:
        yield tuple(prefix)
        return
    start = prefix[-1] if prefix else 1
    for value in range(start, family.bound(position) + 1):
        prefix.append(value)
        yield from _nondecreasing(family, n, prefix)
        prefix.pop()


def enumerate_nondecreasing(family: ParkingFamily, n: int) -> List[Word]:
    """
    Nondecreasing members of length n, in lexicographic order.

    Raises:
        CapExceededError: If n exceeds the NDPF cap
    """
    _check_cap(n, "ndpf_cap", "enumerate_nondecreasing")
    return list(_nondecreasing(family, n, []))


def enumerate_all(family: ParkingFamily, n: int) -> Iterator[Word]:
    """All members of length n by brute force over [l+(n-1)k]^n."""
    _check_cap(n, "pf_brute_force_cap", "enumerate_all")
    if n == 0:
        yield ()
        return
    top = family.bound(n)
    for word in product(range(1, top + 1), repeat=n):
        if is_member(word, family):
            yield word


def sum_statistic(word: Sequence[int]) -> int:
    """‖w‖ = sum of (a_i - 1)."""
    return sum(a - 1 for a in word)


def char_q(family: ParkingFamily, n: int) -> NcsfElement:
    """
    q-characteristic: sum over nondecreasing members v of q^‖v‖ S^pEv(v).

    Args:
        family: Parking-function family
        n: Length of the words

    Returns:
        Homogeneous NcsfElement of degree n with q-polynomial coefficients
    """
    terms: Dict[Parts, Dict[int, int]] = {}
    for word in enumerate_nondecreasing(family, n):
        key = packed_evaluation(word)
        stat = sum_statistic(word)
        bucket = terms.setdefault(key, {})
        bucket[stat] = bucket.get(stat, 0) + 1
    logger.debug(f"char_q({family.label()}, {n}): {len(terms)} orbit types")
    return NcsfElement({key: Coefficient.from_q_polynomial(q) for key, q in terms.items()})


def count_closed_form(family: ParkingFamily, n: int) -> int:
    """|PF^(k,l)_n| = l (l + kn)^(n-1)."""
    if n == 0:
        return 1
    return family.l * (family.l + family.k * n) ** (n - 1)


def count_all(family: ParkingFamily, n: int, brute_force: bool = True) -> int:
    """
    Number of members of length n.

    Args:
        family: Parking-function family
        n: Length of the words
        brute_force: Enumerate and cross-check against the closed form

    Raises:
        CapExceededError: If brute force is requested beyond the cap
        ValidationError: If the two computations disagree
    """
    closed = count_closed_form(family, n)
    if not brute_force:
        return closed
    counted = sum(1 for _ in enumerate_all(family, n))
    if counted != closed:
        raise ValidationError(
            f"Brute-force count {counted} disagrees with l(l+kn)^(n-1) = {closed}",
            details={"family": family.model_dump(mode="json"), "n": n}
        )
    return counted


def q_sum_enumerator(n: int) -> Coefficient:
    """Sum over all classic parking functions of length n of q^‖a‖."""
    counts: Dict[int, int] = {}
    for word in enumerate_all(CLASSIC, n):
        stat = sum_statistic(word)
        counts[stat] = counts.get(stat, 0) + 1
    return Coefficient.from_q_polynomial(counts)


def parkize(word: Sequence[int]) -> Word:
    """
    Park(w): while some k has fewer than k letters <= k, take the smallest
    such k and decrement every letter > k.
    """
    current = list(word)
    n = len(current)
    while True:
        for k in range(1, n + 1):
            if sum(1 for a in current if a <= k) < k:
                current = [a - 1 if a > k else a for a in current]
                break
        else:
            return tuple(current)


def connected_factor_count(word: Sequence[int]) -> int:
    """
    Number of factors of the maximal factorization into connected NDPFs.

    c(b) = 1 + #{j in [1, n-1] : b_(j+1) = j+1}

    Raises:
        NotParkingError: If the word is not a nondecreasing parking function
    """
    word = tuple(word)
    if list(word) != sorted(word) or not is_parking(word):
        raise NotParkingError(f"Not a nondecreasing parking function: {list(word)}")
    return 1 + sum(1 for j in range(1, len(word)) if word[j] == j + 1)


def parking_type_evaluations(n: int) -> List[Parts]:
    """Evaluations over [n+1] of the nondecreasing parking functions of length n."""
    return sorted(evaluation(word, n + 1) for word in enumerate_nondecreasing(CLASSIC, n))
