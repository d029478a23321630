"""Unit tests for noncommutative symmetric functions."""
import random
from fractions import Fraction

import pytest

from ncinvert.algebra.coeff import Coefficient, q_integer
from ncinvert.algebra.comp import compositions, near_concatenation
from ncinvert.algebra.ncsf import (
    Basis,
    NcsfElement,
    XSeries,
    alphabet_multiple,
    alphabet_negate,
    alphabet_q_interval,
    commutative_image,
    from_lambda,
    from_ribbon,
    monomial_q_eval,
    mul,
    nu_involution,
    ribbon_mul,
    specialize_binomial_int,
    specialize_exp,
    specialize_one,
    to_lambda,
    to_ribbon,
)
from ncinvert.exceptions import BasisError, NonUnitError, ValidationError

S = NcsfElement.monomial


def test_product_concatenates_keys():
    """Test that S-basis products concatenate compositions."""
    product = mul(NcsfElement.generator(1), S((2,)) + S((1, 1)))
    assert product == S((1, 2)) + S((1, 1, 1))
    assert mul(NcsfElement.one(), S((3,))) == S((3,))


def test_product_requires_s_basis():
    """Test that products in other bases are refused."""
    with pytest.raises(BasisError):
        mul(to_ribbon(S((1,))), S((1,)))


def test_ribbon_change_of_basis():
    """Test S^(1,2) = R_(1,2) + R_3 and the inverse map."""
    ribbon = to_ribbon(S((1, 2)))
    assert ribbon == S((1, 2), basis=Basis.R) + S((3,), basis=Basis.R)
    element = S((2, 1), 3) + S((1, 1, 1))
    assert from_ribbon(to_ribbon(element)) == element


def test_lambda_change_of_basis():
    """Test S_2 = Λ^(1,1) - Λ^2 and the inverse map."""
    assert to_lambda(S((2,))) == S((1, 1), basis=Basis.L) - S((2,), basis=Basis.L)
    element = S((1, 2), Coefficient.q()) + S((3,))
    assert from_lambda(to_lambda(element)) == element


def test_zero_letters_only_in_s_basis():
    """Test that zero letters are refused outside the S basis."""
    with pytest.raises(BasisError, match="Zero letters"):
        NcsfElement({(1, 0): 1}, Basis.R)
    with pytest.raises(BasisError, match="zero letters"):
        to_ribbon(S((1, 0)))


def test_negative_letters_rejected():
    """Test that keys must be nonnegative."""
    with pytest.raises(ValidationError):
        S((-1,))


def test_nu_involution():
    """Test ν on keys."""
    assert nu_involution(S((3,))) == S((1, 1, 1))
    assert nu_involution(S((2, 1), 5)) == S((2, 1), 5)


def test_alphabet_transforms():
    """Test -A, 2A and [n]_q A on generators."""
    assert alphabet_negate(S((2,))) == S((1, 1)) - S((2,))
    assert alphabet_multiple(S((2,)), 2) == S((2,), 2) + S((1, 1))
    assert alphabet_multiple(S((2,)), 1) == S((2,))
    assert alphabet_q_interval(S((1,)), 3) == S((1,), q_integer(3))
    assert alphabet_negate(alphabet_negate(S((1, 2)))) == S((1, 2))


def test_monomial_q_eval():
    """Test M_I(1, q, ..., q^(n-1))."""
    assert monomial_q_eval((1,), 3) == q_integer(3)
    assert monomial_q_eval((1, 1), 2) == Coefficient.q()
    assert monomial_q_eval((1, 1, 1), 2).is_zero()


def test_scalar_specializations():
    """Test A = 1, A = t𝔼 and A = zα on small elements."""
    element = S((2,)) + S((1, 1))
    assert specialize_one(element) == 2
    assert specialize_exp(S((2,))) == Coefficient.from_sympy("x**2/2")
    assert specialize_exp(S((1, 1))) == Coefficient.x(2)
    assert specialize_binomial_int(S((2,)), 2) == Coefficient.x(2).scale(3)


def test_commutative_image():
    """Test summing coefficients over rearranged keys."""
    image = commutative_image(S((2, 1)) + S((1, 2), 2) + S((3,)))
    assert image == {(3,): 1, (2, 1): 3}


def test_to_text():
    """Test canonical text rendering."""
    element = S((2,)) + S((1, 1), Coefficient.q())
    assert element.to_text() == "S[2] + q·S[1,1]"
    assert NcsfElement.one().to_text() == "1"
    assert NcsfElement.zero().to_text() == "0"
    assert S((2, 1), -3).to_text("d") == "-3·d[2,1]"


def test_json_round_trip():
    """Test the {basis, terms} serialization."""
    element = S((2, 1), Coefficient.from_sympy("q + 1/2")) + S((3,))
    data = element.to_json()
    assert data["basis"] == "S"
    assert data["terms"][0]["key"] == [2, 1]
    assert NcsfElement.from_json(data) == element


def test_x_series_inverse():
    """Test (1 + x S_1)^(-1) = 1 - x S_1 + x^2 S^(1,1) - ..."""
    series = XSeries([NcsfElement.one(), S((1,))], 3)
    inverse = series.inverse()
    assert inverse[1] == -S((1,))
    assert inverse[2] == S((1, 1))
    assert (series * inverse) == XSeries.one(3)


def test_x_series_inverse_needs_unit():
    """Test that the constant entry must be 1."""
    with pytest.raises(NonUnitError):
        XSeries([S((1,), 2)], 2).inverse()


def test_x_series_subst_and_bounds():
    """Test x -> q^e x and indexing past the order."""
    series = XSeries([NcsfElement.one(), S((1,)), S((2,))], 2)
    shifted = series.subst_x_scale(1)
    assert shifted[2] == S((2,), Coefficient.q(2))
    with pytest.raises(ValidationError):
        series[3]


def test_homogeneous_components(solved_g):
    """Test grading of the g components."""
    for n in range(len(solved_g)):
        assert solved_g[n].is_homogeneous(n)
    mixed = solved_g[2] + solved_g[3]
    assert not mixed.is_homogeneous()
    assert mixed.homogeneous_component(3) == solved_g[3]


SMALL_KEYS = [parts for n in range(1, 4) for parts in compositions(n)]


def _ribbon(parts):
    return S(parts, basis=Basis.R)


@pytest.mark.parametrize("left", SMALL_KEYS)
def test_ribbon_product_rule(left):
    """Test R_I R_J = R_(I·J) + R_(I▷J) against the S-basis product."""
    for right in SMALL_KEYS:
        product = ribbon_mul(_ribbon(left), _ribbon(right))
        assert product == _ribbon(left + right) + _ribbon(near_concatenation(left, right))
        assert from_ribbon(product) == mul(from_ribbon(_ribbon(left)), from_ribbon(_ribbon(right)))


def test_ribbon_product_operator_and_unit():
    """Test the * operator in the R basis, the empty ribbon and mixed bases."""
    assert _ribbon((1,)) * _ribbon((1,)) == _ribbon((1, 1)) + _ribbon((2,))
    assert ribbon_mul(_ribbon(()), _ribbon((2, 1))) == _ribbon((2, 1))
    with pytest.raises(BasisError):
        ribbon_mul(S((1,)), _ribbon((1,)))


@pytest.mark.parametrize("inner", range(-2, 4))
@pytest.mark.parametrize("outer", range(-2, 4))
def test_alphabet_multiples_compose(outer, inner):
    """Test S_n(M(NA)) = S_n((MN)A) through the generator images, n <= 6."""
    for n in range(1, 7):
        generator = NcsfElement.generator(n)
        composed = alphabet_multiple(alphabet_multiple(generator, outer), inner)
        assert composed == alphabet_multiple(generator, outer * inner)


@pytest.mark.parametrize("size", range(5))
def test_q_interval_at_q_one_is_multiple(size):
    """Test that [N]_q A at q = 1 is the alphabet NA."""
    for n in range(1, 6):
        for parts in compositions(n):
            assert alphabet_q_interval(S(parts), size).eval_q_one() == alphabet_multiple(S(parts), size)


def _random_element(rng):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        parts = rng.choice([()] + SMALL_KEYS)
        terms[parts] = Coefficient.monomial(
            rng.randint(-1, 2), rng.randint(0, 1), Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        )
    return NcsfElement(terms)


@pytest.mark.parametrize("seed", range(20))
def test_ring_axioms(seed):
    """Test associativity, distributivity and the unit on random elements."""
    rng = random.Random(seed)
    a, b, c = (_random_element(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert NcsfElement.one() * a == a
    assert a * NcsfElement.one() == a
    assert (a - a).is_zero()
    assert a.scale(2) == a + a
