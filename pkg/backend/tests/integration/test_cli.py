"""Integration tests for the ncinvert command line."""
import json

import pytest

from ncinvert.cli import main
from ncinvert.config import settings


def test_char_q(capsys):
    """Test ch_q(PF_2) in the S basis."""
    assert main(["char", "--n", "2", "--q"]) == 0
    assert capsys.readouterr().out == "S[2] + q·S[1,1]\n"


def test_char_empty_word(capsys):
    """Test that n = 0 prints the unit."""
    assert main(["char", "--n", "0"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_char_json(capsys):
    """Test the JSON form of a characteristic."""
    assert main(["char", "--n", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["basis"] == "S"
    assert len(data["terms"]) == 2


def test_unknown_family(capsys):
    """Test that a bad family is a usage error."""
    assert main(["char", "--family", "bogus", "--n", "2"]) == 2
    assert "Unknown parking family" in capsys.readouterr().err


def test_solve_g(capsys):
    """Test g through degree 3 as text."""
    assert main(["solve", "--eq", "g", "--degree", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "g_0 = 1",
        "g_1 = S[1]",
        "g_2 = S[2] + S[1,1]",
        "g_3 = S[3] + 2·S[2,1] + S[1,2] + S[1,1,1]",
    ]


def test_solve_json_checksums(capsys):
    """Test that the JSON report carries one checksum per component."""
    assert main(["solve", "--eq", "h", "--degree", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["equation"] == "h"
    assert len(data["checksums"]) == 3


def test_solve_kl_needs_parameters(capsys):
    """Test the kl quotient without --k and --l."""
    assert main(["solve", "--eq", "kl", "--degree", "2"]) == 2
    assert "--k and --l" in capsys.readouterr().err


def test_cap_flag(capsys):
    """Test that --cap applies to one run and is then restored."""
    assert main(["--cap", "2", "solve", "--eq", "g", "--degree", "3"]) == 2
    assert "max_degree" in capsys.readouterr().err
    assert settings.cap is None
    assert main(["--cap", "-1", "char", "--n", "1"]) == 2


def test_usage_errors():
    """Test argparse failures and --version."""
    assert main([]) == 2
    assert main(["solve"]) == 2
    assert main(["--version"]) == 0


def test_abel(capsys):
    """Test P_2 at x = 1 and a bad --x."""
    assert main(["abel", "--n", "2", "--x", "1"]) == 0
    assert capsys.readouterr().out == "S[2] + S[1,1]\n"
    assert main(["abel", "--n", "2", "--x", "one"]) == 2


def test_abel_at_one(capsys):
    """Test that the three A = 1 computations agree."""
    assert main(["abel", "--n", "3", "--at-one", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["agree"] is True


def test_triangle_csv(capsys):
    """Test γ^(0) and c(n,k) rows as CSV."""
    assert main(["triangle", "--kind", "gamma", "--b", "0", "--rows", "3"]) == 0
    assert capsys.readouterr().out == "1,1\n2,1,1\n3,2,2,1\n"
    assert main(["triangle", "--kind", "catalan-c", "--rows", "3"]) == 0
    assert capsys.readouterr().out == "1,1\n2,1,1\n3,2,2,1\n"


def test_triangle_motzkin_json(capsys):
    """Test the returns triangle as JSON."""
    assert main(["triangle", "--kind", "motzkin", "--rows", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"] == [[1], [1], [1, 1], [1, 2, 1]]


def test_gamma_dot(capsys):
    """Test the DOT rendering of Γ_(2,1)."""
    assert main(["gamma", "--composition", "21"]) == 0
    out = capsys.readouterr().out
    assert out.startswith('digraph "Gamma_21" {')
    assert '"(2,1,.,.)" -> "(2,.,1,.)" [label="2"];' in out


def test_gamma_certificate(capsys):
    """Test the certificate for I = (3,3,1)."""
    assert main(["gamma", "--composition", "3,3,1", "--certificate"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert data["conjugate"] == [2, 1, 2, 1, 1]


def test_specialize(capsys):
    """Test the binomial image of g at α = 1."""
    assert main(["specialize", "--kind", "binomial", "--degree", "4"]) == 0
    assert capsys.readouterr().out == "1 1 2 5 14\n"


@pytest.mark.parametrize("suite", ["all", "involutions"])
def test_verify_passes(capsys, suite):
    """Test a passing verification run."""
    assert main(["verify", "--suite", suite, "--max-degree", "0"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_verify_failure_exit_code(capsys):
    """Test that a failing check gives exit code 1 after the report."""
    assert main(["--cap", "1", "verify", "--suite", "paper-tables", "--max-degree", "3", "--format", "text"]) == 1
    captured = capsys.readouterr()
    assert "FAIL paper-tables/g_series_golden" in captured.out
    assert "check(s) failed" in captured.err
