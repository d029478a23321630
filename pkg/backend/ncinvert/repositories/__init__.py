"""In-memory storage of solved series."""
from .solution_repository import SolutionRepository, SolverResult

__all__ = ["SolutionRepository", "SolverResult"]
