"""Graphs Γ_I on parking-type generalized compositions and the conjugation involution."""
import json
import logging
from itertools import combinations
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match

from ..algebra.comp import (
    Parts,
    as_composition,
    as_generalized,
    compositions,
    conjugate,
    corresponding_composition,
    is_parking_type,
)
from ..config import settings
from ..exceptions import CapExceededError, NotParkingError, ValidationError
from ..models import GammaCertificate

logger = logging.getLogger(__name__)


def _check_cap(n: int, cap_name: str, what: str) -> None:
    cap = settings.effective_cap(cap_name)
    if n > cap:
        raise CapExceededError(
            f"{what} with n={n} exceeds the cap {cap} ({cap_name})",
            details={"n": n, "cap": cap, "cap_name": cap_name}
        )


def format_vertex(vertex: Sequence[int]) -> str:
    """Render a vertex with zeros as dots: (3,.,.,3,.,.,1,.)."""
    return "(" + ",".join("." if v == 0 else str(v) for v in vertex) + ")"


def shuffles_with_zeros(parts: Parts) -> Iterator[Parts]:
    """Tuples of length |I|+1 whose nonzero entries read I."""
    n = sum(parts)
    length = n + 1
    for positions in combinations(range(length), len(parts)):
        vertex = [0] * length
        for position, part in zip(positions, parts):
            vertex[position] = part
        yield tuple(vertex)


def expected_source(parts: Sequence[int]) -> Parts:
    """I followed by n+1-ℓ(I) zeros."""
    parts = tuple(parts)
    return parts + (0,) * (sum(parts) + 1 - len(parts))


def expected_sink(parts: Sequence[int]) -> Parts:
    """Each part v except the last followed by v-1 zeros, then the last part and the remaining zeros."""
    parts = tuple(parts)
    vertex: List[int] = []
    for part in parts[:-1]:
        vertex.append(part)
        vertex.extend([0] * (part - 1))
    vertex.append(parts[-1])
    vertex.extend([0] * (sum(parts) + 1 - len(vertex)))
    return tuple(vertex)


class GammaGraph:
    """
    Directed graph Γ_I.

    Vertices are the parking-type generalized compositions of length n+1 whose
    nonzero parts read I. An edge J -> J' labeled i swaps (a, 0) at positions
    (i, i+1) into (0, a) when J' is still of parking type.
    """

    def __init__(self, parts: Sequence[int]):
        """
        Build Γ_I.

        Args:
            parts: The composition I

        Raises:
            ValidationError: If I is empty or has a non-positive part
            CapExceededError: If |I| exceeds the graph cap
        """
        self.parts = as_composition(parts)
        if not self.parts:
            raise ValidationError("Γ_I needs a nonempty composition")
        self.n = sum(self.parts)
        _check_cap(self.n, "gamma_cap", "GammaGraph")
        self.graph = nx.DiGraph()
        self._build()

    def _build(self) -> None:
        for vertex in shuffles_with_zeros(self.parts):
            if is_parking_type(vertex):
                self.graph.add_node(vertex)
        for vertex in list(self.graph.nodes):
            for i in range(1, self.n + 1):
                a, b = vertex[i - 1], vertex[i]
                if a == 0 or b != 0:
                    continue
                target = vertex[:i - 1] + (0, a) + vertex[i + 1:]
                if target in self.graph:
                    self.graph.add_edge(vertex, target, label=i)
        logger.debug(
            f"Γ{self.parts}: {self.graph.number_of_nodes()} vertices, "
            f"{self.graph.number_of_edges()} edges"
        )

    @property
    def vertices(self) -> List[Parts]:
        return sorted(self.graph.nodes)

    @property
    def edges(self) -> List[Tuple[Parts, Parts, int]]:
        return sorted((u, v, data["label"]) for u, v, data in self.graph.edges(data=True))

    def sources(self) -> List[Parts]:
        return sorted(v for v in self.graph.nodes if self.graph.in_degree(v) == 0)

    def sinks(self) -> List[Parts]:
        return sorted(v for v in self.graph.nodes if self.graph.out_degree(v) == 0)

    def to_dot(self) -> str:
        """DOT rendering with zeros drawn as dots and swap positions as edge labels."""
        name = "".join(map(str, self.parts)) if all(p < 10 for p in self.parts) else "_".join(map(str, self.parts))
        lines = [f'digraph "Gamma_{name}" {{']
        for vertex in self.vertices:
            lines.append(f'  "{format_vertex(vertex)}";')
        for u, v, label in self.edges:
            lines.append(f'  "{format_vertex(u)}" -> "{format_vertex(v)}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_json(graph: GammaGraph) -> str:
    """Vertices, labeled edges, sources and sinks as JSON."""
    payload = {
        "composition": list(graph.parts),
        "vertices": [format_vertex(v) for v in graph.vertices],
        "edges": [{"from": format_vertex(u), "to": format_vertex(v), "label": label} for u, v, label in graph.edges],
        "sources": [format_vertex(v) for v in graph.sources()],
        "sinks": [format_vertex(v) for v in graph.sinks()],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False)


def iota(vertex: Sequence[int]) -> Parts:
    """
    Conjugation involution on parking-type generalized compositions.

    Read J from right to left, fill its zero slots with the parts of the
    conjugate of its corresponding composition and clear the nonzero slots.

    Raises:
        NotParkingError: If J is not of parking type
    """
    vertex = as_generalized(vertex)
    if not is_parking_type(vertex):
        raise NotParkingError(f"Not of parking type: {list(vertex)}")
    if not any(vertex):
        return vertex
    fill = iter(conjugate(corresponding_composition(vertex)))
    return tuple(next(fill) if v == 0 else 0 for v in reversed(vertex))


def parking_type_compositions(n: int) -> List[Parts]:
    """All parking-type generalized compositions of weight n."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    _check_cap(n, "gamma_cap", "parking_type_compositions")
    if n == 0:
        return [(0,)]
    result = []
    for parts in compositions(n):
        result.extend(v for v in shuffles_with_zeros(parts) if is_parking_type(v))
    return sorted(result)


def check_gamma_isomorphism(parts: Sequence[int]) -> GammaCertificate:
    """
    Check that ι is an isomorphism Γ_I -> Γ_(I~) exchanging edge labels i <-> n+1-i.

    Failures are reported in the certificate, never raised.

    Args:
        parts: The composition I

    Returns:
        GammaCertificate with the vertex map, the edge map and the outcome
    """
    parts = as_composition(parts)
    _check_cap(sum(parts), "isomorphism_cap", "check_gamma_isomorphism")
    left = GammaGraph(parts)
    right = GammaGraph(conjugate(parts))
    n = left.n
    failures: List[str] = []

    mapping: Dict[Parts, Parts] = {v: iota(v) for v in left.graph.nodes}
    image = set(mapping.values())
    bijective = len(image) == len(mapping) and image == set(right.graph.nodes)
    if not bijective:
        failures.append(
            f"ι is not a bijection: {len(mapping)} vertices map onto {len(image)}, "
            f"target has {right.graph.number_of_nodes()}"
        )

    edge_map = []
    edges_preserved = left.graph.number_of_edges() == right.graph.number_of_edges()
    if not edges_preserved:
        failures.append(
            f"edge counts differ: {left.graph.number_of_edges()} vs {right.graph.number_of_edges()}"
        )
    for u, v, label in left.edges:
        mu, mv = mapping[u], mapping[v]
        expected = n + 1 - label
        found = right.graph.get_edge_data(mu, mv)
        ok = found is not None and found["label"] == expected
        if not ok:
            edges_preserved = False
            failures.append(f"edge {format_vertex(u)} -{label}-> {format_vertex(v)} has no image labeled {expected}")
        edge_map.append({
            "from": format_vertex(u),
            "to": format_vertex(v),
            "label": label,
            "image_from": format_vertex(mu),
            "image_to": format_vertex(mv),
            "image_label": expected,
        })

    source_preserved = mapping.get(expected_source(parts)) == expected_source(right.parts)
    sink_preserved = mapping.get(expected_sink(parts)) == expected_sink(right.parts)
    if not source_preserved:
        failures.append("ι does not send the source to the source")
    if not sink_preserved:
        failures.append("ι does not send the sink to the sink")

    mirrored = nx.DiGraph()
    mirrored.add_nodes_from(left.graph.nodes)
    mirrored.add_edges_from(
        (u, v, {"label": n + 1 - data["label"]}) for u, v, data in left.graph.edges(data=True)
    )
    networkx_isomorphic = nx.is_isomorphic(
        mirrored, right.graph, edge_match=categorical_edge_match("label", None)
    )
    if not networkx_isomorphic:
        failures.append("no label-preserving isomorphism exists")

    passed = not failures
    if passed:
        logger.debug(f"✅ Γ{parts} ≅ Γ{right.parts}")
    else:
        logger.warning(f"❌ Γ{parts} vs Γ{right.parts}: {'; '.join(failures)}")

    return GammaCertificate(
        composition=list(parts),
        conjugate=list(right.parts),
        vertex_map={format_vertex(u): format_vertex(v) for u, v in sorted(mapping.items())},
        edge_map=edge_map,
        vertex_count=left.graph.number_of_nodes(),
        edge_count=left.graph.number_of_edges(),
        bijective=bijective,
        edges_preserved=edges_preserved,
        source_preserved=source_preserved,
        sink_preserved=sink_preserved,
        networkx_isomorphic=networkx_isomorphic,
        passed=passed,
        failures=failures,
    )
