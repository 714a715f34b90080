"""Tests for the command-line interface (in-process, via main's return code)."""

from __future__ import annotations

import json

import pytest

from uhsl2.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStarCommand:
    def test_pretty_default(self, capsys):
        code, out, _ = run(capsys, "star", "--expr", "y * x")
        assert code == 0
        assert out.strip() == "2 x h + x y"

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "star", "--expr", "y * x", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data == {
            "cap": None,
            "terms": [
                {"m": [1, 0, 0, 1], "num": "2", "den": "1"},
                {"m": [1, 1, 0, 0], "num": "1", "den": "1"},
            ],
        }

    def test_json_is_byte_identical_across_runs(self, capsys):
        _, first, _ = run(capsys, "star", "--expr", "m(0,0,2,0) * m(2,0,0,0)",
                          "--format", "json")
        _, second, _ = run(capsys, "star", "--expr", "m(0,0,2,0) * m(2,0,0,0)",
                           "--format", "json")
        assert first == second

    def test_exp_with_cap(self, capsys):
        code, out, _ = run(capsys, "star", "--expr", "exp(y) * exp(x)",
                           "--cap", "2", "--format", "json")
        assert code == 0
        monos = [tuple(t["m"]) for t in json.loads(out)["terms"]]
        assert (1, 0, 0, 1) in monos  # the 2xh term of y*x shows up at degree 2

    def test_exp_without_cap_is_usage_error(self, capsys):
        code, _, err = run(capsys, "star", "--expr", "exp(x)")
        assert code == 2
        assert "cap" in err

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "star", "--expr", "y * (")
        assert code == 2
        assert "position" in err

    def test_negative_cap_is_usage_error(self, capsys):
        code, _, err = run(capsys, "star", "--expr", "exp(x)", "--cap", "-1")
        assert code == 2
        assert "natural" in err


class TestCoeffCommand:
    def test_known_five_term_value(self, capsys):
        code, out, _ = run(capsys, "coeff", "--left", "0,0,2,0",
                           "--right", "2,0,0,0", "--out", "0,1,0,3")
        assert code == 0
        assert out.strip() == "3"

    def test_defining_relation_value(self, capsys):
        code, out, _ = run(capsys, "coeff", "--left", "0,1,0,0",
                           "--right", "1,0,0,0", "--out", "1,0,0,1")
        assert code == 0
        assert out.strip() == "2"

    def test_malformed_exponents_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["coeff", "--left", "0,0,2", "--right", "2,0,0,0",
                  "--out", "0,1,0,3"])
        assert err.value.code == 2


class TestVerifyCommand:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-exp", "1")
        assert code == 0
        assert "256 monomial pairs" in out
        assert "0 mismatches" in out


class TestSpeciesCommand:
    def test_singletons(self, capsys):
        code, out, _ = run(capsys, "species", "--left", "z", "--right", "x",
                           "--max-total", "3")
        assert code == 0
        assert "0 mismatches" in out

    def test_divided_power_syntax(self, capsys):
        code, out, _ = run(capsys, "species", "--left", "dp(0,0,2,0)",
                           "--right", "dp(2,0,0,0)", "--max-total", "4")
        assert code == 0
        assert "0 mismatches" in out

    def test_exponential_syntax(self, capsys):
        code, _, _ = run(capsys, "species", "--left", "exp(y)", "--right", "exp(x)",
                         "--max-total", "3")
        assert code == 0

    def test_bad_functor_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["species", "--left", "w", "--right", "x", "--max-total", "2"])
        assert err.value.code == 2


class TestIdentitiesCommand:
    def test_catalog_passes(self, capsys):
        code, out, _ = run(capsys, "identities")
        assert code == 0
        lines = [line for line in out.splitlines() if line.strip()]
        assert lines and all(line.startswith("PASS") for line in lines)
        assert any("five-term" in line for line in lines)
        assert any("defining relation" in line for line in lines)
