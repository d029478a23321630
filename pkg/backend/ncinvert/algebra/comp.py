"""Compositions, generalized compositions, words, descent sets and conjugation.

Hot paths in the other modules work on plain tuples of ints; the frozen
dataclasses below are the value objects used at the API and CLI boundary.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from ..exceptions import ValidationError

Parts = Tuple[int, ...]


def as_composition(parts: Iterable[int]) -> Parts:
    """Validate and normalize a composition (every part ≥ 1)."""
    result = tuple(int(p) for p in parts)
    if any(p < 1 for p in result):
        raise ValidationError(
            f"Composition parts must be positive: {list(result)}",
            details={"parts": list(result)}
        )
    return result


def as_generalized(parts: Iterable[int]) -> Parts:
    """Validate and normalize a generalized composition (every part ≥ 0)."""
    result = tuple(int(p) for p in parts)
    if any(p < 0 for p in result):
        raise ValidationError(
            f"Generalized composition parts must be nonnegative: {list(result)}",
            details={"parts": list(result)}
        )
    return result


def descent_set(parts: Sequence[int]) -> FrozenSet[int]:
    """Partial sums of the parts, excluding the total."""
    total = 0
    descents = []
    for part in parts[:-1]:
        total += part
        descents.append(total)
    return frozenset(descents)


def composition_from_descent_set(n: int, descents: Iterable[int]) -> Parts:
    """
    Rebuild the composition of n with the given descent set.

    Args:
        n: Weight of the composition
        descents: Subset of {1, ..., n-1}

    Returns:
        The unique composition I of n with D(I) = descents

    Raises:
        ValidationError: If a descent lies outside {1, ..., n-1}
    """
    if n == 0:
        if any(True for _ in descents):
            raise ValidationError("The empty composition has no descents")
        return ()
    cuts = sorted(set(descents))
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValidationError(f"Descents must lie in [1, {n - 1}]: {cuts}")
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@lru_cache(maxsize=None)
def conjugate(parts: Parts) -> Parts:
    """Conjugate composition: D(I~) = {n - i : i in [1, n-1] minus D(I)}."""
    n = sum(parts)
    descents = descent_set(parts)
    mirrored = {n - i for i in range(1, n) if i not in descents}
    return composition_from_descent_set(n, mirrored)


@lru_cache(maxsize=None)
def coarsenings(parts: Parts) -> Tuple[Parts, ...]:
    """All J with D(J) ⊆ D(I), starting with I itself and ending with (n)."""
    n = sum(parts)
    descents = sorted(descent_set(parts))
    result = []
    for size in range(len(descents) + 1):
        for removed in combinations(descents, size):
            kept = [d for d in descents if d not in removed]
            result.append(composition_from_descent_set(n, kept))
    return tuple(result)


def compositions(n: int) -> Iterator[Parts]:
    """Compositions of n in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def near_concatenation(left: Parts, right: Parts) -> Parts:
    """I ▷ J: glue the last part of I to the first part of J."""
    if not left or not right:
        raise ValidationError("Near concatenation needs two nonempty compositions")
    return left[:-1] + (left[-1] + right[0],) + right[1:]


def packed_evaluation(word: Sequence[int]) -> Parts:
    """Multiplicities of the distinct letters of a word, in increasing letter order."""
    counts = Counter(word)
    return tuple(counts[letter] for letter in sorted(counts))


def evaluation(word: Sequence[int], alphabet_size: int) -> Parts:
    """Multiplicities of the letters 1..alphabet_size (zeros kept)."""
    counts = Counter(word)
    return tuple(counts.get(letter, 0) for letter in range(1, alphabet_size + 1))


def corresponding_composition(parts: Sequence[int]) -> Parts:
    """Drop the zero parts of a generalized composition."""
    return tuple(p for p in parts if p != 0)


def is_parking_type(parts: Sequence[int]) -> bool:
    """Length is weight+1 and every prefix of k parts sums to at least k."""
    n = sum(parts)
    if len(parts) != n + 1:
        return False
    total = 0
    for k, part in enumerate(parts[:n], start=1):
        total += part
        if total < k:
            return False
    return True


@dataclass(frozen=True, order=True)
class Composition:
    """A composition, ordered lexicographically by its parts."""

    parts: Parts

    def __post_init__(self):
        object.__setattr__(self, "parts", as_composition(self.parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse '3,3,1' (or '331' when every part is a single digit)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        try:
            if "," in text:
                return cls(tuple(int(p) for p in text.split(",")))
            return cls(tuple(int(ch) for ch in text))
        except ValueError:
            raise ValidationError(f"Cannot parse composition: {text!r}")

    @classmethod
    def from_descent_set(cls, n: int, descents: Iterable[int]) -> "Composition":
        return cls(composition_from_descent_set(n, descents))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def descent_set(self) -> FrozenSet[int]:
        return descent_set(self.parts)

    def conjugate(self) -> "Composition":
        return Composition(conjugate(self.parts))

    def coarsenings(self) -> List["Composition"]:
        return [Composition(p) for p in coarsenings(self.parts)]

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class GeneralizedComposition:
    """A composition with zero parts allowed; trailing zeros are significant."""

    parts: Parts

    def __post_init__(self):
        object.__setattr__(self, "parts", as_generalized(self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def corresponding_composition(self) -> Composition:
        return Composition(corresponding_composition(self.parts))

    def is_parking_type(self) -> bool:
        return is_parking_type(self.parts)

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Word:
    """A word over the positive integers."""

    letters: Parts

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if any(a < 1 for a in letters):
            raise ValidationError(f"Word letters must be positive: {list(letters)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        try:
            if "," in text:
                return cls(tuple(int(a) for a in text.split(",")))
            return cls(tuple(int(ch) for ch in text))
        except ValueError:
            raise ValidationError(f"Cannot parse word: {text!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def packed_evaluation(self) -> Composition:
        return Composition(packed_evaluation(self.letters))

    def sorted(self) -> "Word":
        return Word(tuple(sorted(self.letters)))

    def __str__(self) -> str:
        if all(a < 10 for a in self.letters):
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))
