"""Unit tests for compositions and words."""
from itertools import combinations

import pytest

from ncinvert.algebra.comp import (
    Composition,
    GeneralizedComposition,
    Word,
    coarsenings,
    composition_from_descent_set,
    compositions,
    conjugate,
    descent_set,
    is_parking_type,
    near_concatenation,
    packed_evaluation,
)
from ncinvert.combinatorics.parking import parking_type_evaluations
from ncinvert.exceptions import ValidationError


def _generalized_compositions(weight, length):
    """Every generalized composition of the given weight and length, by stars and bars."""
    slots = weight + length - 1
    for bars in combinations(range(slots), length - 1):
        edges = (-1,) + bars + (slots,)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(length))


def test_descent_set_round_trip():
    """Test that a composition is recovered from its descent set."""
    assert descent_set((2, 1, 3)) == frozenset({2, 3})
    assert composition_from_descent_set(6, {2, 3}) == (2, 1, 3)
    assert composition_from_descent_set(0, []) == ()


def test_descent_out_of_range():
    """Test that descents outside [1, n-1] are rejected."""
    with pytest.raises(ValidationError, match="Descents must lie"):
        composition_from_descent_set(3, {3})


def test_conjugate_examples():
    """Test conjugation on small and worked examples."""
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((1, 2)) == (1, 2)
    assert conjugate((3, 3, 1)) == (2, 1, 2, 1, 1)


def test_conjugate_is_an_involution():
    """Test that conjugating twice gives the composition back."""
    for n in range(1, 7):
        for parts in compositions(n):
            assert conjugate(conjugate(parts)) == parts
            assert len(parts) + len(conjugate(parts)) == n + 1


def test_compositions_count_and_order():
    """Test that there are 2^(n-1) compositions, in lexicographic order."""
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert sum(1 for _ in compositions(6)) == 32
    assert list(compositions(0)) == [()]


def test_coarsenings():
    """Test that coarsenings start with I and end with (n)."""
    result = coarsenings((1, 1, 1))
    assert result[0] == (1, 1, 1)
    assert result[-1] == (3,)
    assert set(result) == {(1, 1, 1), (2, 1), (1, 2), (3,)}


def test_near_concatenation():
    """Test gluing the last part of I to the first part of J."""
    assert near_concatenation((1, 2), (3, 1)) == (1, 5, 1)
    assert near_concatenation((2,), (1,)) == (3,)
    assert descent_set(near_concatenation((1, 2), (3, 1))) == descent_set((1, 2, 3, 1)) - {3}
    with pytest.raises(ValidationError):
        near_concatenation((), (1,))


def test_packed_evaluation():
    """Test multiplicities of the distinct letters in increasing order."""
    assert packed_evaluation((3, 1, 3, 7)) == (1, 2, 1)
    assert Word.parse("1123").packed_evaluation() == Composition((2, 1, 1))


def test_parking_type():
    """Test the prefix-sum predicate on generalized compositions."""
    assert is_parking_type((1, 1, 0))
    assert not is_parking_type((1, 0, 1))
    assert is_parking_type((0,))
    assert GeneralizedComposition((2, 0, 1, 0)).is_parking_type()


@pytest.mark.parametrize("n", range(8))
def test_parking_type_matches_nondecreasing_evaluations(n):
    """Test that parking-type shapes are exactly the NDPF evaluations over [n+1]."""
    shapes = sorted(parts for parts in _generalized_compositions(n, n + 1) if is_parking_type(parts))
    assert shapes == parking_type_evaluations(n)
    assert all(sum(parts) == n for parts in shapes)


def test_composition_parse():
    """Test parsing of the comma and digit syntaxes."""
    assert Composition.parse("3,3,1").parts == (3, 3, 1)
    assert Composition.parse("331").parts == (3, 3, 1)
    assert str(Composition.parse("(2,1)")) == "(2,1)"
    with pytest.raises(ValidationError, match="Cannot parse"):
        Composition.parse("3,a")


def test_invalid_parts_rejected():
    """Test that zero parts are rejected in compositions and words."""
    with pytest.raises(ValidationError, match="must be positive"):
        Composition((1, 0))
    with pytest.raises(ValidationError):
        Word((0, 1))
