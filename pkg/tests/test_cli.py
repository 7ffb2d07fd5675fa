"""Tests for the lahlab command-line tool via click's CliRunner."""

import json

import pytest

from lahlab.cli import cli


# ── Helpers ────────────────────────────────────────────────────────────────────

def _run(runner, *args):
    return runner.invoke(cli, list(args))


def _lines(result):
    return result.stdout.splitlines()


# ── table ─────────────────────────────────────────────────────────────────────

class TestTable:
    def test_lah_csv(self, runner):
        result = _run(runner, "table", "lah", "--nmax", "3", "--format", "csv")
        assert result.exit_code == 0
        assert _lines(result) == ["1", "0,1", "0,2,1", "0,6,6,1"]

    def test_stirling2_single_row(self, runner):
        result = _run(runner, "table", "stirling2", "--nmax", "0")
        assert result.exit_code == 0
        assert _lines(result) == ["1"]

    def test_negative_nmax_is_usage_error(self, runner):
        result = _run(runner, "table", "lah", "--nmax", "-1")
        assert result.exit_code == 2

    def test_unknown_kind(self, runner):
        assert _run(runner, "table", "catalan", "--nmax", "2").exit_code == 2

    def test_stirling1_signed_and_unsigned(self, runner):
        signed = _run(runner, "table", "stirling1", "--nmax", "3", "--format", "csv")
        unsigned = _run(runner, "table", "stirling1", "--nmax", "3", "--format", "csv", "--unsigned")
        assert _lines(signed)[-1] == "0,2,-3,1"
        assert _lines(unsigned)[-1] == "0,2,3,1"

    def test_plain_is_right_aligned(self, runner):
        result = _run(runner, "table", "lah", "--nmax", "4")
        assert _lines(result)[-1] == " 0  24  36  12   1"

    def test_json_lines(self, runner):
        result = _run(runner, "table", "lah", "--nmax", "2", "--format", "json")
        records = [json.loads(line) for line in _lines(result)]
        assert records[2] == {"kind": "lah", "params": ["2"], "values": ["0", "2", "1"]}


# ── poly ──────────────────────────────────────────────────────────────────────

class TestPoly:
    def test_laguerre_minus_one(self, runner):
        result = _run(runner, "poly", "laguerre", "--alpha", "-1", "--n", "3")
        assert result.exit_code == 0
        assert _lines(result) == ["0, -1, 1, -1/6", "= -x^3/6 + x^2 - x"]

    def test_bell(self, runner):
        assert _lines(_run(runner, "poly", "bell", "--n", "2"))[0] == "0, 1, 1"
        assert _lines(_run(runner, "poly", "bell", "--n", "0"))[0] == "1"

    def test_missing_alpha_is_usage_error(self, runner):
        result = _run(runner, "poly", "laguerre", "--n", "3")
        assert result.exit_code == 2
        assert "--alpha" in result.stderr

    def test_decimal_alpha_rejected(self, runner):
        result = _run(runner, "poly", "laguerre", "--alpha", "0.5", "--n", "2")
        assert result.exit_code == 2

    def test_json(self, runner):
        result = _run(runner, "poly", "laguerre", "--alpha", "1/2", "--n", "1", "--format", "json")
        assert json.loads(result.stdout) == {
            "kind": "laguerre",
            "params": ["1/2", "1"],
            "values": ["3/2", "-1"],
        }

    def test_csv(self, runner):
        result = _run(runner, "poly", "laguerre", "--alpha", "-1", "--n", "2", "--format", "csv")
        assert result.stdout.strip() == "0,-1,1/2"


# ── derive ────────────────────────────────────────────────────────────────────

class TestDerive:
    def test_all_methods_agree(self, runner):
        result = _run(runner, "derive", "--n", "2", "--c", "1", "--p", "-1", "--method", "all")
        assert result.exit_code == 0
        lines = _lines(result)
        vectors = [line for line in lines if line.endswith("(0, 2, 1)")]
        assert len(vectors) == 6
        assert lines[-1] == "AGREE"

    def test_evaluation_matches_oracle(self, runner):
        result = _run(runner, "derive", "--n", "1", "--c", "1", "--p", "-1", "--method", "lah", "--x0", "1")
        assert result.exit_code == 0
        last = _lines(result)[-1].split()
        assert last == ["lah", "value", "-1", "oracle", "-1", "MATCH"]

    def test_zero_power_is_exit_two(self, runner):
        result = _run(runner, "derive", "--n", "2", "--c", "1", "--p", "0", "--method", "schwatt")
        assert result.exit_code == 2
        assert "p = 0" in result.stderr

    def test_unrepresentable_point_is_exit_two(self, runner):
        result = _run(runner, "derive", "--n", "1", "--p", "1/2", "--method", "schwatt", "--x0", "2")
        assert result.exit_code == 2

    def test_inapplicable_method_is_exit_two(self, runner):
        result = _run(runner, "derive", "--n", "2", "--c", "3", "--method", "lah")
        assert result.exit_code == 2

    def test_prefactor_runs_brychkov_and_leibniz(self, runner):
        result = _run(runner, "derive", "--n", "1", "--lambda", "1", "--x0", "4")
        assert result.exit_code == 0
        lines = _lines(result)
        assert lines[0].split() == ["brychkov", "(1,", "-1)"]
        assert lines[1].split() == ["leibniz", "(1,", "-1)"]
        assert lines[2] == "AGREE"
        assert all(line.endswith("MATCH") for line in lines[3:])

    def test_json_verdicts(self, runner):
        result = _run(runner, "derive", "--n", "3", "--c", "1/2", "--p", "2", "--x0", "1/2", "--format", "json")
        records = [json.loads(line) for line in _lines(result)]
        kinds = [r["kind"] for r in records]
        assert kinds.count("derive") == 3
        assert kinds.count("verdict") == 1
        assert all(r["status"] == "pass" for r in records if "status" in r)


# ── verify ────────────────────────────────────────────────────────────────────

class TestVerify:
    def test_gould_suite(self, runner):
        result = _run(runner, "verify", "--suite", "gould", "--nmax", "5")
        assert result.exit_code == 0
        lines = _lines(result)
        assert len(lines) == 36
        assert all(line.startswith("PASS  gould(") for line in lines)

    def test_nmax_zero_is_usage_error(self, runner):
        assert _run(runner, "verify", "--suite", "all", "--nmax", "0").exit_code == 2

    def test_full_run_passes(self, runner):
        result = _run(runner, "verify", "--suite", "all", "--nmax", "12")
        assert result.exit_code == 0
        assert "FAIL" not in result.stdout

    def test_corrupted_entry_exits_one(self, runner, corrupted_lah):
        result = _run(runner, "verify", "--suite", "todorov", "--nmax", "4")
        assert result.exit_code == 1
        assert "FAIL  lah-from-stirling(3, 2)  lhs=6  rhs=99" in result.stdout

    def test_output_is_deterministic(self, runner):
        first = _run(runner, "verify", "--suite", "orthogonality", "--nmax", "4", "--workers", "3")
        second = _run(runner, "verify", "--suite", "orthogonality", "--nmax", "4")
        assert first.stdout == second.stdout

    def test_json_round_trip(self, runner):
        result = _run(runner, "verify", "--suite", "expbell", "--nmax", "3", "--format", "json")
        for line in _lines(result):
            record = json.loads(line)
            assert set(record) == {"kind", "params", "values", "status"}
            assert json.dumps(record) == line

    def test_metrics_file(self, runner, tmp_path):
        target = tmp_path / "metrics.prom"
        result = _run(runner, "verify", "--suite", "gould", "--nmax", "2", "--metrics-file", str(target))
        assert result.exit_code == 0
        assert "lahlab_identity_check_duration_seconds" in target.read_text()

    def test_summary_on_stderr(self, runner):
        result = _run(runner, "verify", "--suite", "gould", "--nmax", "2")
        assert "9 checks passed" in result.stderr
        assert "checks passed" not in result.stdout


# ── series ────────────────────────────────────────────────────────────────────

class TestSeries:
    def test_lah_column(self, runner):
        result = _run(runner, "series", "lahgf", "--k", "2", "--order", "4")
        assert result.exit_code == 0
        assert _lines(result)[4].split() == ["t^4", "36", "36", "PASS"]

    def test_laguerre(self, runner):
        result = _run(runner, "series", "laguerregf", "--order", "2")
        assert result.exit_code == 0
        assert _lines(result)[2] == "t^2  x^2/2 - x  x^2/2 - x  PASS"

    def test_laguerre_general_alpha(self, runner):
        result = _run(runner, "series", "laguerregf", "--alpha", "1/2", "--order", "5")
        assert result.exit_code == 0

    def test_bell(self, runner):
        result = _run(runner, "series", "bellgf", "--order", "1")
        assert _lines(result)[1].split() == ["t^1", "x", "x", "PASS"]

    def test_todorov(self, runner):
        result = _run(runner, "series", "todorovgf", "--m", "2", "--order", "5", "--format", "csv")
        assert result.exit_code == 0
        assert all(line.endswith(",PASS") for line in _lines(result))

    def test_lahgf_needs_k(self, runner):
        assert _run(runner, "series", "lahgf", "--order", "4").exit_code == 2

    def test_k_beyond_order(self, runner):
        result = _run(runner, "series", "lahgf", "--k", "6", "--order", "4")
        assert result.exit_code == 2

    def test_corrupted_entry_fails_column(self, runner, corrupted_lah):
        result = _run(runner, "series", "lahgf", "--k", "2", "--order", "4")
        assert result.exit_code == 1
        assert _lines(result)[3].split() == ["t^3", "6", "99", "FAIL"]


# ── configuration ─────────────────────────────────────────────────────────────

class TestConfigDefaults:
    def test_format_from_environment(self, runner, monkeypatch):
        monkeypatch.setenv("LAHLAB_FORMAT", "csv")
        result = _run(runner, "table", "lah", "--nmax", "1")
        assert _lines(result) == ["1", "0,1"]

    def test_flag_beats_environment(self, runner, monkeypatch):
        monkeypatch.setenv("LAHLAB_FORMAT", "csv")
        result = _run(runner, "table", "lah", "--nmax", "1", "--format", "json")
        assert json.loads(_lines(result)[0])["kind"] == "lah"

    def test_invalid_config_is_exit_two(self, runner, isolated_config):
        isolated_config.write_text('{"workers": 0}')
        result = _run(runner, "table", "lah", "--nmax", "1")
        assert result.exit_code == 2

    @pytest.mark.parametrize("command", ["table", "poly", "derive", "verify", "series"])
    def test_help(self, runner, command):
        assert _run(runner, command, "--help").exit_code == 0
