"""Repository for solved series, keyed by equation and parameters."""
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Hashable, List, Optional, Tuple

from ..algebra.ncsf import NcsfElement, XSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverResult:
    """
    Components of a truncated solution, indexed by degree.

    For K the components are the x-degree entries (x^(n+1) holds NCSF
    degree n); for the (k,l) q-mode the components are normalized and the
    raw ratio coefficients are kept next to the exponents used.
    """

    equation: str
    order: int
    components: Tuple[NcsfElement, ...]
    letter: str = "S"
    normalization: Optional[Tuple[int, ...]] = None
    candidates: Optional[Tuple[int, ...]] = None
    raw_components: Optional[Tuple[NcsfElement, ...]] = None
    params: Dict[str, int] = field(default_factory=dict)

    def __getitem__(self, degree: int) -> NcsfElement:
        return self.components[degree]

    def __len__(self) -> int:
        return len(self.components)

    def series(self) -> XSeries:
        return XSeries(self.components, self.order)

    def truncated(self, order: int) -> "SolverResult":
        """Same result cut down to a smaller order."""
        if order >= self.order:
            return self

        def cut(values):
            return None if values is None else values[: order + 1]

        return replace(
            self,
            order=order,
            components=self.components[: order + 1],
            normalization=cut(self.normalization),
            candidates=cut(self.candidates),
            raw_components=cut(self.raw_components),
        )


class SolutionRepository:
    """Keeps solved series in memory so later requests only extend them."""

    def __init__(self):
        """Initialize an empty solution repository."""
        self._results: Dict[Hashable, SolverResult] = {}
        self.hits = 0
        self.misses = 0
        logger.debug("📊 Solution repository initialized")

    def get(self, key: Hashable, order: int) -> Optional[SolverResult]:
        """
        Get a stored result covering the requested order.

        Args:
            key: Equation tag and parameters
            order: Truncation order wanted

        Returns:
            The stored result truncated to order, or None if it is missing or too short
        """
        stored = self._results.get(key)
        if stored is None or stored.order < order:
            self.misses += 1
            return None
        self.hits += 1
        return stored.truncated(order)

    def get_any(self, key: Hashable) -> Optional[SolverResult]:
        """Stored result of any order, used as a starting point for extension."""
        return self._results.get(key)

    def save(self, key: Hashable, result: SolverResult) -> None:
        """Store a result unless a longer one is already present."""
        stored = self._results.get(key)
        if stored is not None and stored.order >= result.order:
            return
        self._results[key] = result
        logger.debug(f"💾 Stored {result.equation} through degree {result.order}")

    def keys(self) -> List[Hashable]:
        return list(self._results)

    def clear(self) -> None:
        self._results.clear()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._results)
