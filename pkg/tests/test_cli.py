"""Tests for the command-line entry point."""

import json

import pytest

import main
from src.config import get_settings
from src.extremal.formulas import eval_g
from src.graphs.core import BipartiteGraph, Graph
from src.graphs.generators import cycle
from src.graphs.graph6 import read_graph, sidecar_path, write_graph


def run(capsys, *argv):
    code = main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    """Closed-form values on stdout."""

    def test_f(self, capsys):
        code, out, _ = run(capsys, "eval", "f", "--b", "6", "--n", "6", "--k", "1", "--a", "2")

        assert code == 0
        assert out.strip() == "24"

    def test_f_with_explicit_m(self, capsys):
        code, out, _ = run(capsys, "eval", "f", "--b", "5", "--n", "4", "--m", "3", "--a", "1", "--s", "2")

        assert code == 0
        assert out.strip() == "20"

    def test_g(self, capsys):
        code, out, _ = run(capsys, "eval", "g", "--n", "10", "--k", "5", "--a", "2")

        assert code == 0
        assert out.strip() == "17"

    def test_threshold_json(self, capsys):
        code, out, _ = run(capsys, "eval", "threshold-cb", "--b", "8", "--n", "8", "--k", "1", "--format", "json")

        assert code == 0
        assert json.loads(out) == {"kind": "threshold-cb", "value": "50"}

    def test_domain_error(self, capsys):
        code, out, err = run(capsys, "eval", "g", "--n", "10", "--k", "5", "--a", "3")

        assert code == 2
        assert out == ""
        assert "k/2 > a" in err

    def test_missing_flag(self, capsys):
        code, _, err = run(capsys, "eval", "g", "--n", "10")

        assert code == 2
        assert "--k" in err


class TestConstruct:
    """F and H on stdout or to files."""

    def test_f_summary(self, capsys):
        code, out, _ = run(capsys, "construct", "F", "--b", "6", "--n", "6", "--k", "1", "--a", "2")
        summary, record = out.strip().splitlines()

        assert code == 0
        assert summary == "F(b=6,n=6,k=1,a=2): order 12, size 24, min degree 2"
        assert record.startswith("K")

    def test_h_to_file(self, capsys, tmp_path):
        target = tmp_path / "h.g6"
        code, out, _ = run(
            capsys, "construct", "H", "--n", "10", "--k", "5", "--a", "2", "--out", str(target), "--analyze", "--format", "json"
        )
        data = json.loads(out)

        assert code == 0
        assert data["size"] == 17
        assert data["circumference"] == 4
        assert sidecar_path(target).exists()
        g = read_graph(target)
        assert isinstance(g, Graph)
        assert g.size == 17

    def test_f_file_is_bipartite(self, capsys, tmp_path):
        target = tmp_path / "f.g6"
        code, _, _ = run(capsys, "construct", "F", "--b", "5", "--n", "4", "--k", "0", "--a", "1", "--out", str(target))

        assert code == 0
        host = read_graph(target)
        assert isinstance(host, BipartiteGraph)
        assert (host.n, host.b) == (4, 5)

    def test_bad_parameters(self, capsys):
        code, _, err = run(capsys, "construct", "H", "--n", "4", "--k", "5", "--a", "1")

        assert code == 2
        assert "n >= k" in err


class TestAnalyze:
    """One graph, many measurements."""

    def test_cycle(self, capsys, tmp_path):
        target = tmp_path / "c6.g6"
        write_graph(target, cycle(6))
        code, out, _ = run(capsys, "analyze", str(target), "--format", "json")
        data = json.loads(out)

        assert code == 0
        assert data["order"] == 6
        assert data["circumference"] == 6
        assert data["longest_path_order"] == 6
        assert data["kst_1_1"] == "6"
        assert data["core_2"] == 6
        assert data["biconnected"] is True
        assert "max_matching" not in data

    def test_construction_counts(self, capsys, tmp_path):
        target = tmp_path / "h.g6"
        run(capsys, "construct", "H", "--n", "10", "--k", "5", "--a", "2", "--out", str(target))
        code, out, _ = run(capsys, "analyze", str(target), "--s", "2", "--t", "2", "--alpha", "1", "--alpha", "2")

        assert code == 0
        assert f"kst_2_2: {eval_g(10, 5, 2, 2, 2)}" in out
        assert "core_2: 10" in out
        assert "core_3: 0" in out

    def test_bipartite_file(self, capsys, tmp_path):
        target = tmp_path / "f.g6"
        run(capsys, "construct", "F", "--b", "6", "--n", "6", "--k", "2", "--a", "1", "--out", str(target))
        code, out, _ = run(capsys, "analyze", str(target), "--format", "json")

        assert code == 0
        assert json.loads(out)["max_matching"] == 4

    def test_malformed_file(self, capsys, tmp_path):
        target = tmp_path / "bad.g6"
        target.write_text("B!\n")
        code, _, err = run(capsys, "analyze", str(target))

        assert code == 2
        assert "offset" in err

    def test_sidecar_vertex_outside_graph(self, capsys, tmp_path):
        target = tmp_path / "f.g6"
        run(capsys, "construct", "F", "--b", "6", "--n", "6", "--k", "2", "--a", "1", "--out", str(target))
        meta = sidecar_path(target)
        data = json.loads(meta.read_text())
        data["bipartite"]["x"].append(40)
        meta.write_text(json.dumps(data))
        code, _, err = run(capsys, "analyze", str(target))

        assert code == 2
        assert "outside" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "analyze", str(tmp_path / "absent.g6"))

        assert code == 3


class TestSweeps:
    """verify and search."""

    def test_verify_stdout_is_json(self, capsys):
        code, out, _ = run(capsys, "verify", "cb", "--b", "3", "--n", "3", "--k", "0", "--exhaustive")
        report = json.loads(out)

        assert code == 0
        assert report["claim"] == "cb"
        assert report["violation_count"] == 0
        assert "runtime_ms" not in report

    def test_verify_general(self, capsys):
        code, out, _ = run(capsys, "verify", "c", "--n", "6", "--k", "5", "--r", "2", "--format", "plain")

        assert code == 0
        assert "threshold: 9" in out
        assert "extremal value: 9 (tight: true)" in out

    def test_report_file_and_witnesses(self, capsys, tmp_path):
        report_path = tmp_path / "report.csv"
        code, out, _ = run(
            capsys,
            "verify", "ore", "--n", "5",
            "--format", "csv", "--out", str(report_path), "--witnesses", str(tmp_path / "w"),
        )

        assert code == 0
        assert out == ""
        assert report_path.read_text().startswith("claim,params")
        assert list((tmp_path / "w").glob("ore-witness-*.g6"))

    def test_search_jobs_do_not_change_report(self, capsys):
        base = ["search", "adamus", "--n", "4", "--k", "1", "--r", "1", "--samples", "400", "--seed", "3"]
        code_serial, serial, _ = run(capsys, *base, "--jobs", "1")
        code_parallel, parallel, _ = run(capsys, *base, "--jobs", "2")

        assert code_serial == code_parallel == 0
        assert serial == parallel

    def test_samples_need_seed(self, capsys):
        code, _, err = run(capsys, "verify", "cb", "--n", "3", "--samples", "10")

        assert code == 2
        assert "--seed" in err

    def test_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("EXTURAN_BUDGET", "100")
        get_settings.cache_clear()
        code, _, err = run(capsys, "verify", "cb", "--n", "4", "--k", "0")

        assert code == 4
        assert "EXTURAN_BUDGET" in err

    def test_invalid_class(self, capsys):
        code, _, _ = run(capsys, "verify", "wang_matching", "--b", "5", "--n", "4", "--k", "1")

        assert code == 2


class TestAudit:
    """audit subcommand."""

    def test_convexity(self, capsys):
        code, out, _ = run(capsys, "audit", "convexity_g", "--format", "plain")

        assert code == 0
        assert "violations: 0" in out

    def test_seeded(self, capsys):
        code, out, _ = run(capsys, "audit", "core_order", "--seed", "4", "--graphs", "5")

        assert code == 0
        assert json.loads(out)["seed"] == 4

    def test_seed_required(self, capsys):
        code, _, err = run(capsys, "audit", "posa")

        assert code == 2
        assert "--seed" in err

    def test_pairs_target(self, capsys):
        code, out, _ = run(capsys, "audit", "posa", "--seed", "5", "--pairs", "40", "--paths", "4")
        data = json.loads(out)

        assert code == 0
        assert data["class_size"] == 40
        assert data["params"]["pairs"] == 40

    def test_flag_outside_audit(self, capsys):
        code, _, err = run(capsys, "audit", "posa", "--seed", "5", "--graphs", "5")

        assert code == 2
        assert "--graphs" in err


def test_no_command(capsys):
    code, _, err = run(capsys)

    assert code == 2
    assert "usage" in err


def test_unknown_claim():
    with pytest.raises(SystemExit):
        main.main(["verify", "nonsense"])
