"""Unit tests for the solution repository."""
from ncinvert.algebra.ncsf import NcsfElement
from ncinvert.repositories import SolutionRepository, SolverResult


def _result(order: int) -> SolverResult:
    components = tuple(NcsfElement.generator(n) if n else NcsfElement.one() for n in range(order + 1))
    return SolverResult(equation="g", order=order, components=components, normalization=tuple(range(order + 1)))


def test_get_missing():
    """Test misses on an empty repository."""
    repository = SolutionRepository()
    assert repository.get(("g",), 2) is None
    assert repository.misses == 1
    assert len(repository) == 0


def test_get_truncates():
    """Test that a stored result serves shorter requests."""
    repository = SolutionRepository()
    repository.save(("g",), _result(4))
    result = repository.get(("g",), 2)
    assert result.order == 2
    assert len(result) == 3
    assert result.normalization == (0, 1, 2)
    assert repository.hits == 1
    assert repository.get(("g",), 5) is None


def test_save_keeps_longest():
    """Test that a shorter result never replaces a longer one."""
    repository = SolutionRepository()
    repository.save(("g",), _result(4))
    repository.save(("g",), _result(2))
    assert repository.get_any(("g",)).order == 4
    assert repository.keys() == [("g",)]


def test_clear():
    """Test clearing results and counters."""
    repository = SolutionRepository()
    repository.save(("g",), _result(1))
    repository.get(("g",), 1)
    repository.clear()
    assert len(repository) == 0
    assert repository.hits == 0


def test_series_view():
    """Test the XSeries view of a result."""
    series = _result(2).series()
    assert series.order == 2
    assert series[1] == NcsfElement.generator(1)
