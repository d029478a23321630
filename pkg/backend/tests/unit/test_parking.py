"""Unit tests for parking-function families."""
from collections import Counter
from itertools import product
from math import comb

import pytest

from ncinvert import tables
from ncinvert.algebra.coeff import Coefficient
from ncinvert.algebra.ncsf import NcsfElement
from ncinvert.combinatorics.parking import (
    CLASSIC,
    FamilyKind,
    ParkingFamily,
    char_q,
    connected_factor_count,
    count_all,
    count_closed_form,
    enumerate_all,
    enumerate_nondecreasing,
    is_member,
    is_parking,
    parking_type_evaluations,
    parkize,
    q_sum_enumerator,
    sum_statistic,
)
from ncinvert.exceptions import CapExceededError, NotParkingError, ValidationError
from ncinvert.services.inversion_service import catalan_triangle_c


def _catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_membership():
    """Test the sorted-word bound a_i <= l + (i-1)k."""
    assert is_parking((2, 1, 1))
    assert not is_parking((2, 2, 3))
    assert not is_parking((0, 1))
    assert is_member((3, 1), ParkingFamily.shifted(2))
    assert is_member((2, 4), ParkingFamily.arithmetic(2, 2))
    assert not is_member((3, 4), ParkingFamily.arithmetic(2, 2))


def test_parse_family():
    """Test the classic, r=R and k,l=K,L syntaxes."""
    assert ParkingFamily.parse("classic") == CLASSIC
    assert ParkingFamily.parse("r=3").l == 3
    family = ParkingFamily.parse("k,l=3,2")
    assert family.kind is FamilyKind.ARITHMETIC
    assert (family.k, family.l) == (3, 2)
    with pytest.raises(ValidationError, match="Unknown parking family"):
        ParkingFamily.parse("bogus")
    with pytest.raises(ValidationError, match="Invalid parking family"):
        ParkingFamily.parse("r=0")


def test_counts_match_closed_form():
    """Test |PF^(k,l)_n| = l(l+kn)^(n-1) by enumeration."""
    assert count_all(CLASSIC, 3) == 16
    assert count_all(ParkingFamily.arithmetic(2, 1), 2) == 5
    assert count_all(ParkingFamily.arithmetic(3, 2), 3) == count_closed_form(ParkingFamily.arithmetic(3, 2), 3)
    assert count_all(CLASSIC, 0) == 1


@pytest.mark.parametrize("n", range(11))
def test_nondecreasing_counts_are_catalan(n):
    """Test that there are Catalan many NDPFs."""
    assert len(enumerate_nondecreasing(CLASSIC, n)) == _catalan(n)


@pytest.mark.parametrize("n", range(8))
def test_parking_function_counts(n):
    """Test |PF_n| = (n+1)^(n-1) by brute force."""
    expected = (n + 1) ** (n - 1) if n else 1
    assert count_all(CLASSIC, n) == expected


def test_brute_force_cap():
    """Test that brute force stops at the cap."""
    with pytest.raises(CapExceededError, match="pf_brute_force_cap"):
        list(enumerate_all(CLASSIC, 8))


def test_char_q_matches_golden_tables():
    """Test G_n(q;A) for n <= 4."""
    for n, terms in enumerate(tables.CHAR_Q_CLASSIC):
        assert char_q(CLASSIC, n) == tables.element(terms)


def test_char_q_arithmetic_family():
    """Test ch_q(PF^(3,2)_2) on its nine nondecreasing words."""
    element = char_q(ParkingFamily.arithmetic(3, 2), 2)
    assert element.keys() == [(1, 1), (2,)]
    assert element.coefficient((2,)) == Coefficient.from_sympy("1 + q**2")
    assert element.coefficient((1, 1)) == Coefficient.from_sympy("q + q**2 + 2*q**3 + 2*q**4 + q**5")


def test_sum_statistic_and_enumerator():
    """Test ‖w‖ and the sum enumerator of PF_2."""
    assert sum_statistic((1, 3, 2)) == 3
    assert q_sum_enumerator(2) == Coefficient.from_q_polynomial({0: 1, 1: 2})


def test_parkize():
    """Test parkization on parking and non-parking words."""
    assert parkize((3, 3, 5)) == (1, 1, 3)
    assert parkize((2, 1, 1)) == (2, 1, 1)
    assert is_parking(parkize((7, 2, 9, 9)))


def test_connected_factor_count():
    """Test c(b) = 1 + #{j : b_(j+1) = j+1}."""
    assert connected_factor_count((1, 1, 2)) == 1
    assert connected_factor_count((1, 2, 3)) == 3
    assert connected_factor_count(()) == 1
    with pytest.raises(NotParkingError):
        connected_factor_count((2, 1))


def test_parking_type_evaluations():
    """Test evaluations of NDPFs over [n+1]."""
    assert parking_type_evaluations(2) == [(1, 1, 0), (2, 0, 0)]


@pytest.mark.parametrize("n", range(5))
def test_parkize_is_a_projection_onto_parking_functions(n):
    """Test over [n+2]^n that parkize lands in PF_n, is idempotent and fixes parking functions."""
    for word in product(range(1, n + 3), repeat=n):
        parked = parkize(word)
        assert is_parking(parked)
        assert parkize(parked) == parked
        if is_parking(word):
            assert parked == word


@pytest.mark.parametrize("n", range(1, 10))
def test_connected_factor_counts_fill_catalan_triangle(n):
    """Test that NDPFs with k connected factors number c(n,k)."""
    counts = Counter(connected_factor_count(word) for word in enumerate_nondecreasing(CLASSIC, n))
    assert {k: counts[k] for k in range(1, n + 1)} == {k: catalan_triangle_c(n, k) for k in range(1, n + 1)}
    assert sum(counts.values()) == _catalan(n)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("n", range(6))
def test_shifted_characteristic_factors_through_parking_prefix(r, n):
    """Test ch(PF^(r)_n) = sum over k of ch(PF_k) ch(PF^(r-1)_(n-k)) at q = 1."""
    smaller = ParkingFamily.shifted(r - 1)
    total = NcsfElement.zero()
    for k in range(n + 1):
        total = total + char_q(CLASSIC, k).eval_q_one() * char_q(smaller, n - k).eval_q_one()
    assert total == char_q(ParkingFamily.shifted(r), n).eval_q_one()
