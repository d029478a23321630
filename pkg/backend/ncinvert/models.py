"""Pydantic models for reports and serialized results."""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field


class NcsfTermModel(BaseModel):
    """One term of a noncommutative symmetric function."""
    key: List[int]
    coeff: List[List[Any]]


class NcsfElementModel(BaseModel):
    """Serialized NcsfElement."""
    basis: str
    terms: List[NcsfTermModel]


class SolveReport(BaseModel):
    """Result of one solver or quotient computation."""
    equation: str
    order: int
    basis: str
    components: List[NcsfElementModel]
    checksums: List[str] = Field(default_factory=list)
    text: List[str] = Field(default_factory=list)
    normalization: Optional[List[int]] = None
    candidate_normalization: Optional[List[int]] = None


class CheckResult(BaseModel):
    """Outcome of a single verification check."""
    name: str
    suite: str
    passed: bool
    seconds: float
    detail: str = ""
    failures: List[str] = Field(default_factory=list)


class VerifyReport(BaseModel):
    """Outcome of a verification suite."""
    suite: str
    max_degree: int
    jobs: int
    passed: bool
    checks: List[CheckResult]
    total_seconds: float


class GammaCertificate(BaseModel):
    """Isomorphism Γ_I → Γ_(I~) given by the conjugation involution."""
    composition: List[int]
    conjugate: List[int]
    orientation: str = "(a,0) -> (0,a)"
    vertex_map: Dict[str, str]
    edge_map: List[Dict[str, Any]]
    vertex_count: int
    edge_count: int
    bijective: bool
    edges_preserved: bool
    source_preserved: bool
    sink_preserved: bool
    networkx_isomorphic: Optional[bool] = None
    passed: bool
    failures: List[str] = Field(default_factory=list)


class TriangleReport(BaseModel):
    """Rows of a combinatorial triangle."""
    name: str
    rows: List[List[int]]
