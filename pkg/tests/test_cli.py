"""Command-line contract: formats, exit codes, stream discipline."""

from __future__ import annotations

import json
import subprocess
import sys
from dataclasses import replace

import pytest

import transmit.cli
from transmit.cli import main
from transmit.formulas import power_coefficients, tree_triple


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_table(self, capsys):
        code, out, err = run(capsys, "eval", "tree(2,2)")
        assert code == 0
        assert err == ""
        assert "size           7" in out
        assert "delta          96" in out
        assert "delta0         10" in out

    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "eval", "star(3)", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "expr": "star(3)",
            "size": "4",
            "delta": "18",
            "delta0": "3",
            "mean_all": {"num": "9", "den": "8", "display": "1.125"},
            "mean_distinct": {"num": "3", "den": "2", "display": "1.5"},
            "expected_messages": None,
        }

    def test_json_round_trips_huge_integers(self, capsys):
        code, out, _ = run(capsys, "eval", "power(complete(2),40)", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert int(payload["size"]) == 2**40
        a, b = power_coefficients(2, 40)
        assert int(payload["delta"]) == 2 * a + b

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "eval", "star(3)", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "expr,size,delta,delta0,mean_all,mean_distinct,expected_messages"
        assert lines[1] == "star(3),4,18,3,9/8,3/2,"

    def test_single_vertex_has_no_distinct_mean(self, capsys):
        code, out, _ = run(capsys, "eval", "complete(1)")
        assert code == 0
        assert "mean_distinct  -" in out

    def test_rate_and_time(self, capsys):
        code, out, _ = run(capsys, "eval", "tree(2,2)", "--rate", "2", "--time", "10")
        assert code == 0
        assert "expected_messages  1920" in out

    def test_rate_without_time_is_usage_error(self, capsys):
        code, out, err = run(capsys, "eval", "tree(2,2)", "--rate", "2")
        assert code == 1
        assert out == ""
        assert "--rate and --time" in err

    def test_parse_error_exit_and_position(self, capsys):
        code, out, err = run(capsys, "eval", "power(cycle(6), 3")
        assert code == 1
        assert out == ""
        assert "offset 18" in err

    def test_validation_error(self, capsys):
        code, _, err = run(capsys, "eval", "cycle(2)")
        assert code == 1
        assert "cycle size must be >= 3" in err

    def test_output_is_reproducible(self, capsys):
        first = run(capsys, "eval", "rprod(tree(2,2),cycle(5))", "--format", "json")
        second = run(capsys, "eval", "rprod(tree(2,2),cycle(5))", "--format", "json")
        assert first == second


class TestVerify:
    def test_pass(self, capsys):
        code, out, err = run(capsys, "verify", "tree(2,2)")
        assert code == 0
        assert err == ""
        assert out.endswith("PASS\n")
        assert "96" in out and "10" in out

    def test_oversize_exit_three(self, capsys):
        code, out, err = run(capsys, "verify", "power(complete(2),30)")
        assert code == 3
        assert out == ""
        assert str(2**30) in err

    def test_cap_is_configurable(self, capsys):
        code, _, _ = run(capsys, "verify", "mesh(40,50)", "--max-vertices", "2000")
        assert code == 0

    def test_corrupted_formula_yields_mismatch(self, capsys, monkeypatch):
        real = transmit.cli.evaluate_expr
        monkeypatch.setattr(
            transmit.cli,
            "evaluate_expr",
            lambda expr: replace(real(expr), delta=real(expr).delta + 2),
        )
        code, out, _ = run(capsys, "verify", "star(3)")
        assert code == 2
        assert out.endswith("MISMATCH\n")


class TestCompare:
    def test_ranking(self, capsys):
        code, out, _ = run(
            capsys, "compare", "star(6)", "cycle(7)", "tree(2,2)", "--sort", "mean"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["rank", "expr", "size", "delta", "delta0", "mean_distinct"]
        assert [line.split()[1] for line in lines[1:]] == ["star(6)", "cycle(7)", "tree(2,2)"]

    def test_sort_by_delta(self, capsys):
        code, out, _ = run(capsys, "compare", "path(5)", "cycle(5)", "--sort", "delta")
        assert code == 0
        rows = [line.split()[1] for line in out.splitlines()[1:]]
        assert rows == ["cycle(5)", "path(5)"]

    def test_duplicates_keep_order(self, capsys):
        code, out, _ = run(capsys, "compare", "star(2)", "star(2)", "--sort", "size")
        assert code == 0
        assert len(out.splitlines()) == 3

    def test_csv_and_json(self, capsys):
        code, out, _ = run(capsys, "compare", "star(3)", "complete(4)", "--format", "csv")
        assert code == 0
        assert out.splitlines()[1] == "1,complete(4),4,12,3,1/1"
        code, out, _ = run(capsys, "compare", "star(3)", "--format", "json")
        payload = json.loads(out)
        assert payload["reports"][0]["rank"] == "1"
        assert payload["reports"][0]["delta"] == "18"

    def test_parse_failure_names_expression(self, capsys):
        code, out, err = run(capsys, "compare", "star(3)", "cycle(", "--sort", "size")
        assert code == 1
        assert out == ""
        assert "'cycle('" in err


class TestSeries:
    def test_rows_match(self, capsys):
        code, out, _ = run(capsys, "series", "--arity", "2", "--terms", "3")
        assert code == 0
        body = [line.split() for line in out.splitlines()[1:]]
        assert [row[1] for row in body] == ["8", "96", "736"]
        assert all(row[3] == "yes" for row in body)

    def test_single_term(self, capsys):
        code, out, _ = run(capsys, "series", "--arity", "3", "--terms", "1")
        assert code == 0
        assert out.splitlines()[1].split()[1] == "18"

    def test_arity_one_rejected(self, capsys):
        code, out, err = run(capsys, "series", "--arity", "1", "--terms", "5")
        assert code == 1
        assert "arity must be >= 2" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "series", "--arity", "2", "--terms", "2", "--format", "json")
        payload = json.loads(out)
        assert payload["terms"][1] == {
            "k": "1",
            "coefficient": "96",
            "recurrence_delta": "96",
            "match": True,
        }

    def test_missing_option_is_usage_error(self, capsys):
        code, _, err = run(capsys, "series", "--arity", "2")
        assert code == 1
        assert "terms" in err.lower()


class TestHist:
    def test_star_two(self, capsys):
        code, out, _ = run(capsys, "hist", "star(2)")
        assert code == 0
        rows = [tuple(line.split()) for line in out.splitlines()]
        assert rows == [
            ("distance", "pairs"),
            ("0", "3"),
            ("1", "4"),
            ("2", "2"),
            ("delta", "8"),
        ]

    def test_complete_three(self, capsys):
        code, out, _ = run(capsys, "hist", "complete(3)")
        body = [tuple(line.split()) for line in out.splitlines()[1:]]
        assert body == [("0", "3"), ("1", "6"), ("delta", "6")]

    def test_cycle_four_json(self, capsys):
        code, out, _ = run(capsys, "hist", "cycle(4)", "--format", "json")
        payload = json.loads(out)
        assert payload["counts"] == {"0": "4", "1": "8", "2": "4"}
        assert payload["delta"] == "16"

    def test_cap_exit_three(self, capsys):
        code, _, err = run(capsys, "hist", "power(complete(4),9)")
        assert code == 3
        assert str(4**9) in err


class TestUsage:
    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "transmogrify")
        assert code == 1
        assert "No such command" in err

    def test_no_arguments_shows_help(self, capsys):
        code, out, _ = run(capsys)
        assert code == 0
        assert "Usage" in out

    def test_unknown_format(self, capsys):
        code, _, err = run(capsys, "eval", "star(2)", "--format", "xml")
        assert code == 1


def test_module_entry_point_runs_in_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "transmit", "eval", "tree(2,2)", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    # the expression cell is quoted because it contains commas
    assert result.stdout.splitlines()[1].startswith('"tree(2,2)",7,96,10')
