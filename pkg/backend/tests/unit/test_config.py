"""Unit tests for settings and cap overrides."""
import pytest

from ncinvert.config import CAP_NAMES, ENV_FILE_PATH, PROJECT_ROOT, Settings, settings


def test_defaults():
    """Test the default caps."""
    fresh = Settings(_env_file=None)
    assert fresh.max_degree == 8
    assert fresh.pf_brute_force_cap == 7
    assert fresh.default_jobs == 1
    assert fresh.cap is None


def test_env_override(monkeypatch):
    """Test NCINVERT_ environment variables."""
    monkeypatch.setenv("NCINVERT_MAX_DEGREE", "5")
    monkeypatch.setenv("NCINVERT_CAP", "11")
    fresh = Settings(_env_file=None)
    assert fresh.max_degree == 5
    assert fresh.effective_cap("max_degree") == 11


def test_effective_cap():
    """Test named caps and the global override."""
    assert settings.effective_cap("tree_cap") == settings.tree_cap
    settings.apply_cap_override(3)
    assert all(settings.effective_cap(name) == 3 for name in CAP_NAMES)
    settings.apply_cap_override(None)
    assert settings.effective_cap("gamma_cap") == settings.gamma_cap


def test_unknown_cap():
    """Test that an unknown cap name is a KeyError."""
    with pytest.raises(KeyError):
        settings.effective_cap("no_such_cap")


def test_raised_cap_is_scoped():
    """Test that a raised cap applies inside the block only."""
    before = settings.max_degree
    with settings.raised("max_degree", before + 2):
        assert settings.effective_cap("max_degree") == before + 2
        assert settings.effective_cap("tree_cap") == settings.tree_cap
    assert settings.max_degree == before
    with settings.raised("max_degree", 0):
        assert settings.max_degree == before


def test_raised_cap_yields_to_override():
    """Test that the global override wins over a raised cap."""
    settings.apply_cap_override(2)
    with settings.raised("max_degree", 10):
        assert settings.effective_cap("max_degree") == 2
    with pytest.raises(KeyError):
        with settings.raised("no_such_cap", 1):
            pass


def test_env_file_at_project_root():
    """Test that .env is looked up next to env.template at the project root."""
    assert ENV_FILE_PATH == PROJECT_ROOT / ".env"
    assert (PROJECT_ROOT / "env.template").is_file()
    assert (PROJECT_ROOT / "backend" / "ncinvert").is_dir()
