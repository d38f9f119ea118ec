import json

import pytest
from click.testing import CliRunner

from bruhatdual.cli import main
from bruhatdual.duality import gamma_lower, gamma_upper
from bruhatdual.intervals import build_interval
from bruhatdual.permutations import parse_permutation
from bruhatdual.polished import polished_decompose
from bruhatdual.serialize import (
    decomposition_from_dict,
    decomposition_to_dict,
    interval_from_dict,
    interval_to_dict,
    level_graph_from_dict,
    level_graph_to_dict,
)
from bruhatdual.signed import CoxeterPresentation, evaluate_word


@pytest.fixture
def runner():
    return CliRunner()


class TestAnalyze:
    def test_34521(self, runner):
        result = runner.invoke(main, ["analyze", "34521"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["length"] == 7
        assert report["smooth"] is True
        assert report["six_avoiding"] is False
        assert report["gamma_isomorphic"] is False
        assert report["self_dual"] is False
        assert report["degree_extremes"] == [5, 6]
        assert report["pattern_witness"]["pattern"] == "34521"

    def test_4321(self, runner):
        result = runner.invoke(main, ["analyze", "4321"])
        report = json.loads(result.stdout)
        assert report["polished"] is True
        assert report["self_dual"] is True
        assert report["self_dual_certificate"] == "constructive-map"
        assert report["decomposition"] == {"blocks": [{"S": [1, 2, 3], "J": [1, 2, 3], "Jp": []}]}

    def test_identity(self, runner):
        result = runner.invoke(main, ["analyze", "12345"])
        report = json.loads(result.stdout)
        assert report["length"] == 0
        assert report["smooth"] and report["six_avoiding"] and report["polished"]
        assert report["self_dual"] is True
        assert report["degree_extremes"] is None

    def test_parse_error_exit_code(self, runner):
        result = runner.invoke(main, ["analyze", "11"])
        assert result.exit_code != 0


class TestVerifyCommands:
    def test_verify_main_small(self, runner):
        result = runner.invoke(main, ["verify-main", "--n-max", "4"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["violations"] == []
        assert report["checked"] == 1 + 2 + 6 + 24
        assert report["tallies"]["4"] == {"smooth": 22, "polished": 22, "self_dual": 22}

    def test_verify_main_constructive(self, runner):
        result = runner.invoke(main, ["verify-main", "--n-max", "4", "--sd4-mode", "constructive-only"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["violations"] == []

    def test_verify_topheavy_small(self, runner):
        result = runner.invoke(main, ["verify-topheavy", "--n-max", "4"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["violations"] == []

    def test_counterexamples(self, runner):
        result = runner.invoke(main, ["counterexamples"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["violations"] == []
        assert report["theorem"] == "counterexamples-B"

    def test_bad_n_max(self, runner):
        assert runner.invoke(main, ["verify-main", "--n-max", "9"]).exit_code != 0
        assert runner.invoke(main, ["verify-topheavy", "--n-max", "8"]).exit_code != 0

    def test_determinism(self, runner):
        a = runner.invoke(main, ["verify-main", "--n-max", "4"])
        b = runner.invoke(main, ["verify-main", "--n-max", "4"])
        da, db = json.loads(a.stdout), json.loads(b.stdout)
        da.pop("wall_time"), db.pop("wall_time")
        assert da == db

    def test_jobs_parallel_matches_serial(self, runner):
        a = runner.invoke(main, ["verify-main", "--n-max", "4", "--jobs", "2"])
        b = runner.invoke(main, ["verify-main", "--n-max", "4", "--jobs", "1"])
        assert a.exit_code == 0
        da, db = json.loads(a.stdout), json.loads(b.stdout)
        da.pop("wall_time"), db.pop("wall_time")
        assert da == db

    def test_jobs_env_var(self, runner):
        result = runner.invoke(main, ["verify-main", "--n-max", "3"], env={"BRUHAT_JOBS": "2"})
        assert result.exit_code == 0

    def test_violations_force_nonzero_exit(self, runner):
        # the exit-code contract, exercised with a fabricated failing report
        import bruhatdual.cli as cli_mod
        from bruhatdual.harness import VerificationReport

        fake = VerificationReport(
            theorem="thm-main", n_range=[2], checked=1,
            violations=[{"n": 2, "w": "21"}], wall_time=0.0,
        )
        with pytest.raises(SystemExit) as exc:
            cli_mod._finish_report(fake, None)
        assert exc.value.code == 1

    def test_force_full_flag_accepted(self, runner):
        result = runner.invoke(main, ["verify-main", "--n-max", "3", "--force-full"])
        assert result.exit_code == 0

    def test_analyze_output_file(self, runner, tmp_path):
        out = tmp_path / "a.json"
        result = runner.invoke(main, ["analyze", "4321", "--output", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["polished"] is True


class TestExport:
    def test_gamma_lower_34521_json(self, runner):
        result = runner.invoke(main, ["export", "34521", "gamma-lower", "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.stdout)
        assert doc["small_count"] == 4
        assert len(doc["vertices"]) == 4 + 9
        assert len(doc["edges"]) == 18

    def test_gamma_upper_34521_json(self, runner):
        doc = json.loads(runner.invoke(main, ["export", "34521", "gamma-upper"]).stdout)
        assert doc["small_count"] == 4 and len(doc["vertices"]) == 13 and len(doc["edges"]) == 18

    def test_interval_dot(self, runner):
        result = runner.invoke(main, ["export", "21", "interval", "--format", "dot"])
        assert result.exit_code == 0
        assert result.stdout.count('"21" -> "12"') == 1
        assert result.stdout.startswith("digraph")

    def test_gamma_dot(self, runner):
        result = runner.invoke(main, ["export", "231", "gamma-lower", "--format", "dot"])
        assert result.exit_code == 0
        assert result.stdout.startswith("graph")
        assert "--" in result.stdout

    def test_decomposition_4321(self, runner):
        result = runner.invoke(main, ["export", "4321", "decomposition"])
        assert json.loads(result.stdout) == {"blocks": [{"S": [1, 2, 3], "J": [1, 2, 3], "Jp": []}]}

    def test_decomposition_rejects_pattern(self, runner):
        result = runner.invoke(main, ["export", "34521", "decomposition"])
        assert result.exit_code != 0
        assert "34521" in result.stderr

    def test_gamma_rejects_short(self, runner):
        result = runner.invoke(main, ["export", "21", "gamma-lower"])
        assert result.exit_code != 0

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "g.json"
        result = runner.invoke(main, ["export", "4321", "interval", "--output", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["kind"] == "interval"

    def test_export_determinism(self, runner):
        a = runner.invoke(main, ["export", "34521", "gamma-upper"]).stdout
        b = runner.invoke(main, ["export", "34521", "gamma-upper"]).stdout
        assert a == b


class TestRoundTrips:
    def test_level_graph(self):
        w = parse_permutation("34521")
        interval = build_interval(w)
        for g in (gamma_lower(interval), gamma_upper(interval)):
            assert level_graph_from_dict(level_graph_to_dict(g, w)) == g

    def test_interval(self):
        interval = build_interval(parse_permutation("3421"))
        assert interval_from_dict(interval_to_dict(interval)) == interval

    def test_interval_signed(self):
        b2 = CoxeterPresentation("B", 2)
        el = evaluate_word([1, 2, 1], b2).element
        interval = build_interval(el)
        assert interval_from_dict(interval_to_dict(interval)) == interval

    def test_decomposition(self):
        d = polished_decompose(parse_permutation("154973268"))
        assert decomposition_from_dict(decomposition_to_dict(d)) == d

    def test_json_is_valid_through_files(self, tmp_path):
        d = polished_decompose(parse_permutation("4321"))
        path = tmp_path / "d.json"
        path.write_text(json.dumps(decomposition_to_dict(d)))
        assert decomposition_from_dict(json.loads(path.read_text())) == d
