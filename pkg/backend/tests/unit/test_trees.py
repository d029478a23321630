"""Unit tests for trees, triangles and path bijections."""
import pytest

from ncinvert import tables
from ncinvert.algebra.comp import compositions
from ncinvert.combinatorics.trees import (
    MotzkinPath,
    OrderedTree,
    Skeleton,
    count_trees_with_skeleton,
    delta_b,
    dyck_decomposition_oracle,
    dyck_words,
    enumerate_trees_by_composition,
    factor_over_code,
    gamma_entry,
    gamma_triangle,
    motzkin_paths,
    motzkin_returns_triangle,
    motzkin_to_tree,
    row_sum_series,
    tree_to_motzkin,
    trees_with_label_word,
)
from ncinvert.exceptions import CapExceededError, MalformedPathError, ValidationError


def test_worked_tree_counts():
    """Test the two worked tree counts."""
    for parts, b, expected in tables.TREE_COEFFICIENTS:
        assert delta_b(parts, b) == expected


def test_delta_small_values():
    """Test δ_I against the coefficients of g_3."""
    assert delta_b((3,)) == 1
    assert delta_b((2, 1)) == 2
    assert delta_b((1, 2)) == 1
    assert delta_b((1, 1, 1)) == 1
    assert delta_b(()) == 1


def test_delta_rejects_small_b():
    """Test that b must be at least -1."""
    with pytest.raises(ValidationError, match="b must be >= -1"):
        delta_b((1,), -2)


def test_enumeration_matches_delta():
    """Test brute-force tree counts against the ballot sums."""
    assert enumerate_trees_by_composition(3, 0) == {(1, 1, 1): 1, (1, 2): 1, (2, 1): 2, (3,): 1}
    for b in (0, 1, 2):
        for n in range(1, 6):
            counted = enumerate_trees_by_composition(n, b)
            for parts in compositions(n):
                assert counted.get(parts, 0) == delta_b(parts, b)


def test_tree_enumeration_cap():
    """Test the tree cap."""
    with pytest.raises(CapExceededError, match="tree_cap"):
        enumerate_trees_by_composition(10, 0)


def test_polish_code_round_trip():
    """Test parsing and printing Polish codes."""
    tree = OrderedTree.from_polish("d2 c d1 c")
    assert tree.label_word() == (2, 1)
    assert tree.to_polish() == "d2 c d1 c"
    assert OrderedTree.from_polish("c").is_leaf
    assert OrderedTree.from_polish("d1", b=-1) == OrderedTree(1, ())


def test_polish_code_errors():
    """Test truncated, trailing and unknown tokens."""
    with pytest.raises(MalformedPathError, match="Truncated"):
        OrderedTree.from_polish("d2 c")
    with pytest.raises(MalformedPathError, match="Trailing"):
        OrderedTree.from_polish("d1 c c")
    with pytest.raises(MalformedPathError, match="Unknown token"):
        OrderedTree.from_polish("x")


def test_trees_with_label_word():
    """Test that the trees read back their label word."""
    found = trees_with_label_word((2, 1))
    assert len(found) == 2
    assert all(tree.label_word() == (2, 1) for tree in found)
    assert len(trees_with_label_word((3, 1, 2, 1))) == 16


def test_skeleton_counts():
    """Test counting trees with a given skeleton."""
    assert count_trees_with_skeleton(Skeleton.path([2, 1])) == 2
    assert count_trees_with_skeleton(Skeleton.path([1, 1]), b=1) == 2
    tree = OrderedTree.from_polish("d2 c d1 c")
    assert tree.skeleton() == Skeleton.path([2, 1])
    with pytest.raises(ValidationError):
        Skeleton.path([])


def test_gamma_triangles():
    """Test the Catalan, Schröder and b = 2, 3 triangles."""
    for b, table in tables.GAMMA_TRIANGLES.items():
        assert gamma_triangle(b, 7) == table
    assert gamma_entry(0, 4, 3) == 0


def test_row_sums():
    """Test Catalan, small Schröder and shifted Motzkin row sums."""
    for b, expected in tables.ROW_SUMS.items():
        assert row_sum_series(b, len(expected) - 1) == expected


def test_motzkin_paths():
    """Test path counts and validation."""
    assert [sum(1 for _ in motzkin_paths(n)) for n in range(8)] == tables.MOTZKIN_NUMBERS
    with pytest.raises(MalformedPathError, match="below"):
        MotzkinPath("DU")
    with pytest.raises(MalformedPathError, match="does not end"):
        MotzkinPath("UF")
    assert MotzkinPath("FUDUD").returns_to_zero() == 3
    assert MotzkinPath("UFDF").segments() == ["UFD", "F"]


def test_motzkin_tree_bijection():
    """Test the path to tree map and its inverse."""
    tree = motzkin_to_tree(MotzkinPath("FUD"))
    assert tree == OrderedTree(2, (OrderedTree.leaf(), OrderedTree(0, ())))
    assert motzkin_to_tree(MotzkinPath("")).is_leaf
    for n in range(7):
        for path in motzkin_paths(n):
            assert tree_to_motzkin(motzkin_to_tree(path)) == path


def test_tree_to_motzkin_rejects_other_trees():
    """Test that only path trees map back."""
    with pytest.raises(MalformedPathError):
        tree_to_motzkin(OrderedTree.from_polish("d2 c c c", b=1))


def test_motzkin_returns_triangle():
    """Test the returns triangle and its link to γ^(-1)."""
    assert motzkin_returns_triangle(7) == tables.MOTZKIN_TRIANGLE
    assert gamma_triangle(-1, 8) == tables.MOTZKIN_TRIANGLE


def test_dyck_factorization():
    """Test the prefix-code factorization of Dyck words followed by b."""
    assert list(dyck_words(2)) == ["aabb", "abab"]
    assert factor_over_code("aabbb") == (2, 0, 0)
    assert dyck_decomposition_oracle(2) == {(1, 1, 0): 1, (2, 0, 0): 1}
    with pytest.raises(MalformedPathError):
        factor_over_code("aba")
