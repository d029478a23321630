"""Ordered trees, skeletons, ballot-sum coefficients, triangles and path bijections."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.coeff import binomial
from ..algebra.comp import Parts, as_composition, compositions
from ..config import settings
from ..exceptions import CapExceededError, MalformedPathError, ValidationError

logger = logging.getLogger(__name__)

LEAF = "c"


def _check_b(b: int) -> None:
    if b < -1:
        raise ValidationError(f"b must be >= -1, got {b}")


def _check_cap(n: int, cap_name: str, what: str) -> None:
    if n < 0:
        raise ValidationError(f"{what} needs n >= 0, got {n}")
    cap = settings.effective_cap(cap_name)
    if n > cap:
        raise CapExceededError(
            f"{what} with n={n} exceeds the cap {cap} ({cap_name})",
            details={"n": n, "cap": cap, "cap_name": cap_name}
        )


@dataclass(frozen=True)
class OrderedTree:
    """
    Ordered tree in Polish notation: a leaf is 'c', an internal vertex is 'd<i>'.

    label is None for the leaf c and i for a vertex d_i.
    """

    label: Optional[int] = None
    children: Tuple["OrderedTree", ...] = field(default_factory=tuple)

    @classmethod
    def leaf(cls) -> "OrderedTree":
        return cls(None, ())

    @property
    def is_leaf(self) -> bool:
        return self.label is None

    def tokens(self) -> List[str]:
        """Polish code, prefix order."""
        if self.is_leaf:
            return [LEAF]
        result = [f"d{self.label}"]
        for child in self.children:
            result.extend(child.tokens())
        return result

    def to_polish(self) -> str:
        return " ".join(self.tokens())

    @classmethod
    def from_polish(cls, code: str, b: int = 0) -> "OrderedTree":
        """
        Parse a Polish code such as 'd2 c c'.

        Args:
            code: Space-separated tokens 'c', 'd0', 'd1', ...
            b: d_i has arity i+b

        Raises:
            MalformedPathError: If the code is not a single complete tree
        """
        tokens = code.split()
        position = 0

        def parse() -> "OrderedTree":
            nonlocal position
            if position >= len(tokens):
                raise MalformedPathError(f"Truncated tree code: {code!r}")
            token = tokens[position]
            position += 1
            if token == LEAF:
                return cls.leaf()
            if not token.startswith("d") or not token[1:].isdigit():
                raise MalformedPathError(f"Unknown token {token!r} in {code!r}")
            label = int(token[1:])
            arity = label + b
            if arity < 0:
                raise MalformedPathError(f"Negative arity for {token!r} with b={b}")
            return cls(label, tuple(parse() for _ in range(arity)))

        tree = parse()
        if position != len(tokens):
            raise MalformedPathError(f"Trailing tokens in tree code: {code!r}")
        return tree

    def label_word(self) -> Parts:
        """Labels of the internal vertices in prefix order."""
        if self.is_leaf:
            return ()
        word = (self.label,)
        for child in self.children:
            word += child.label_word()
        return word

    def skeleton(self) -> Optional["Skeleton"]:
        """Remove the leaves; None for the single leaf."""
        if self.is_leaf:
            return None
        kept = tuple(s for s in (child.skeleton() for child in self.children) if s is not None)
        return Skeleton(self.label, kept)

    def __str__(self) -> str:
        return self.to_polish()


@dataclass(frozen=True)
class Skeleton:
    """Internal tree of an ordered tree, vertices labeled by their d index."""

    label: int
    children: Tuple["Skeleton", ...] = ()

    @classmethod
    def path(cls, labels: Sequence[int]) -> "Skeleton":
        """Chain of vertices, each the only child of the previous one."""
        node = None
        for label in reversed(labels):
            node = cls(label, (node,) if node is not None else ())
        if node is None:
            raise ValidationError("A skeleton needs at least one vertex")
        return node

    def prefix(self) -> List[Tuple[int, int]]:
        """(label, arity) pairs in prefix order."""
        result = [(self.label, len(self.children))]
        for child in self.children:
            result.extend(child.prefix())
        return result


def count_trees_with_skeleton(skeleton: Skeleton, b: int = 0) -> int:
    """Number of trees with the given skeleton: product of binom(i_k + b, a_k)."""
    _check_b(b)
    return prod(binomial(label + b, arity) for label, arity in skeleton.prefix())


def delta_b(parts: Sequence[int], b: int = 0) -> int:
    """
    Tree-counting coefficient of d^I in the b-family inversion series.

    Sum over sequences (a_1, ..., a_(p-1)) with a_1 + ... + a_j >= j and total
    p-1 of the product of binom(i_k + b, a_k); p is the length of I.

    Args:
        parts: The composition I
        b: Arity offset (0: δ_I, 1: λ_I), at least -1

    Returns:
        Nonnegative integer
    """
    _check_b(b)
    return _delta_b(as_composition(parts), b)


@lru_cache(maxsize=None)
def _delta_b(parts: Parts, b: int) -> int:
    p = len(parts)
    if p <= 1:
        return 1
    target = p - 1
    # ways[s]: weighted number of prefixes with partial sum s
    ways: Dict[int, int] = {0: 1}
    for j in range(1, p):
        label = parts[j - 1]
        nxt: Dict[int, int] = {}
        for s, count in ways.items():
            for a in range(0, target - s + 1):
                if s + a < j:
                    continue
                weight = binomial(label + b, a)
                if weight:
                    nxt[s + a] = nxt.get(s + a, 0) + count * weight
        ways = nxt
    return ways.get(target, 0)


def _iter_label_words(remaining: int, open_slots: int, b: int, word: List[int]) -> Iterator[Parts]:
    if open_slots == 0:
        if remaining == 0:
            yield tuple(word)
        return
    if remaining == 0:
        # every open slot must become a leaf
        yield tuple(word)
        return
    # leaf
    yield from _iter_label_words(remaining, open_slots - 1, b, word)
    for label in range(1, remaining + 1):
        word.append(label)
        yield from _iter_label_words(remaining - label, open_slots - 1 + label + b, b, word)
        word.pop()


def iter_trees(n: int, b: int = 0) -> Iterator[Parts]:
    """
    Label words of all ordered trees of total label n, one per tree.

    d_i has arity i+b; leaves are c. Each tree is produced once, in Polish
    order, and reported by its label word.
    """
    _check_b(b)
    _check_cap(n, "tree_cap", "iter_trees")
    yield from _iter_label_words(n, 1, b, [])


def enumerate_trees_by_composition(n: int, b: int = 0) -> Dict[Parts, int]:
    """Brute-force count of trees by label word (the oracle for delta_b)."""
    counts = Counter(iter_trees(n, b))
    return dict(sorted(counts.items()))


def _iter_codes(remaining: int, open_slots: int, b: int, tokens: List[int]) -> Iterator[Tuple[int, ...]]:
    if open_slots == 0:
        if remaining == 0:
            yield tuple(tokens)
        return
    tokens.append(0)
    yield from _iter_codes(remaining, open_slots - 1, b, tokens)
    tokens.pop()
    for label in range(1, remaining + 1):
        tokens.append(label)
        yield from _iter_codes(remaining - label, open_slots - 1 + label + b, b, tokens)
        tokens.pop()


def trees_with_label_word(parts: Sequence[int], b: int = 0) -> List[OrderedTree]:
    """All trees whose internal labels read I in prefix order."""
    _check_b(b)
    parts = as_composition(parts)
    _check_cap(sum(parts), "tree_cap", "trees_with_label_word")
    result = []
    for tokens in _iter_codes(sum(parts), 1, b, []):
        if tuple(t for t in tokens if t) == parts:
            code = " ".join(LEAF if t == 0 else f"d{t}" for t in tokens)
            result.append(OrderedTree.from_polish(code, b))
    return result


def gamma_entry(b: int, p: int, n: int) -> int:
    """γ^(b)_(p,n): sum of δ^(b)_I over I ⊨ n with first part p."""
    _check_b(b)
    if p < 1 or p > n:
        return 0
    return sum(_delta_b((p,) + rest, b) for rest in compositions(n - p))


def gamma_triangle(b: int, rows: int) -> List[List[int]]:
    """
    Rows n = 1..rows of γ^(b); row n lists p = 1..n.

    For b = -1 the identically zero column p = 1 is dropped from rows n >= 2.
    """
    _check_b(b)
    _check_cap(rows, "triangle_rows_cap", "gamma_triangle")
    table = []
    for n in range(1, rows + 1):
        row = [gamma_entry(b, p, n) for p in range(1, n + 1)]
        if b == -1 and n >= 2:
            row = row[1:]
        table.append(row)
    return table


def row_sum_series(b: int, order: int) -> List[int]:
    """
    Coefficients of g = 1 + sum_i t^i g^(b+i) up to t^order.

    Args:
        b: Arity offset, at least -1
        order: Truncation order

    Returns:
        [g_0, ..., g_order]
    """
    _check_b(b)
    g = [1]
    powers: Dict[Tuple[int, int], int] = {}

    def power(m: int, j: int) -> int:
        # [t^j] g^m
        if m == 0:
            return 1 if j == 0 else 0
        key = (m, j)
        if key not in powers:
            powers[key] = sum(power(m - 1, i) * g[j - i] for i in range(j + 1))
        return powers[key]

    for n in range(1, order + 1):
        g.append(sum(power(b + i, n - i) for i in range(1, n + 1)))
    return g


def dyck_words(n: int) -> Iterator[str]:
    """Dyck words of semilength n over {a, b}, in lexicographic order."""

    def build(prefix: str, opened: int, closed: int) -> Iterator[str]:
        if opened == n and closed == n:
            yield prefix
            return
        if opened < n:
            yield from build(prefix + "a", opened + 1, closed)
        if closed < opened:
            yield from build(prefix + "b", opened, closed + 1)

    yield from build("", 0, 0)


def factor_over_code(word: str) -> Parts:
    """Factor a word of D·b over the prefix code {a^k b}; returns (k_1, k_2, ...)."""
    factors = []
    run = 0
    for letter in word:
        if letter == "a":
            run += 1
        elif letter == "b":
            factors.append(run)
            run = 0
        else:
            raise MalformedPathError(f"Unexpected letter {letter!r} in {word!r}")
    if run:
        raise MalformedPathError(f"{word!r} does not end with b")
    return tuple(factors)


def dyck_decomposition_oracle(n: int) -> Dict[Parts, int]:
    """Keys obtained by factoring every w·b, w a Dyck word of semilength n."""
    _check_cap(n, "tree_cap", "dyck_decomposition_oracle")
    counts = Counter(factor_over_code(word + "b") for word in dyck_words(n))
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class MotzkinPath:
    """Path over U=(1,1), F=(1,0), D=(1,-1) that never goes below zero and ends at zero."""

    steps: str = ""

    def __post_init__(self):
        height = 0
        for step in self.steps:
            if step == "U":
                height += 1
            elif step == "D":
                height -= 1
            elif step != "F":
                raise MalformedPathError(f"Unknown step {step!r} in {self.steps!r}")
            if height < 0:
                raise MalformedPathError(f"Path {self.steps!r} goes below the axis")
        if height != 0:
            raise MalformedPathError(f"Path {self.steps!r} does not end on the axis")

    def __len__(self) -> int:
        return len(self.steps)

    def returns_to_zero(self) -> int:
        height = 0
        returns = 0
        for step in self.steps:
            height += {"U": 1, "F": 0, "D": -1}[step]
            if height == 0:
                returns += 1
        return returns

    def segments(self) -> List[str]:
        """Split at the returns to zero."""
        pieces = []
        height = 0
        start = 0
        for position, step in enumerate(self.steps):
            height += {"U": 1, "F": 0, "D": -1}[step]
            if height == 0:
                pieces.append(self.steps[start:position + 1])
                start = position + 1
        return pieces

    def __str__(self) -> str:
        return self.steps


def motzkin_paths(n: int) -> Iterator[MotzkinPath]:
    """Motzkin paths of length n."""

    def build(prefix: str, height: int) -> Iterator[str]:
        left = n - len(prefix)
        if left == 0:
            if height == 0:
                yield prefix
            return
        if height + 1 <= left - 1:
            yield from build(prefix + "U", height + 1)
        if height <= left - 1:
            yield from build(prefix + "F", height)
        if height > 0:
            yield from build(prefix + "D", height - 1)

    for steps in build("", 0):
        yield MotzkinPath(steps)


def motzkin_to_tree(path: MotzkinPath) -> OrderedTree:
    """
    Root d_k with one son per segment: F gives c, U Q D gives the tree of Q.

    The empty path maps to the leaf c; an empty inner segment (UD) to the
    nullary vertex d0.
    """
    if not path.steps:
        return OrderedTree.leaf()
    children = []
    for segment in path.segments():
        if segment == "F":
            children.append(OrderedTree.leaf())
        else:
            inner = segment[1:-1]
            children.append(OrderedTree(0, ()) if not inner else motzkin_to_tree(MotzkinPath(inner)))
    return OrderedTree(len(children), tuple(children))


def tree_to_motzkin(tree: OrderedTree) -> MotzkinPath:
    """
    Inverse of motzkin_to_tree.

    Raises:
        MalformedPathError: If the tree is not in the image of motzkin_to_tree
    """
    if tree.is_leaf:
        return MotzkinPath("")
    return MotzkinPath(_tree_steps(tree))


def _tree_steps(tree: OrderedTree) -> str:
    if tree.label != len(tree.children) or tree.label == 0:
        raise MalformedPathError(f"Vertex d{tree.label} with {len(tree.children)} sons is not a path vertex")
    steps = []
    for child in tree.children:
        if child.is_leaf:
            steps.append("F")
        elif child.label == 0 and not child.children:
            steps.append("UD")
        else:
            steps.append("U" + _tree_steps(child) + "D")
    return "".join(steps)


def motzkin_returns_triangle(rows: int) -> List[List[int]]:
    """
    Row n (0..rows) counts Motzkin paths of length n by number of returns k.

    Row 0 is [1] (the empty path); row n >= 1 lists k = 1..n.
    """
    _check_cap(rows, "triangle_rows_cap", "motzkin_returns_triangle")
    table = [[1]]
    for n in range(1, rows + 1):
        counts = Counter(path.returns_to_zero() for path in motzkin_paths(n))
        table.append([counts.get(k, 0) for k in range(1, n + 1)])
    return table
