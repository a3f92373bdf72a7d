import json
import subprocess
import sys
from pathlib import Path

import pytest

from kcover import coverage
from kcover.cli import main
from kcover.coverage import CoverageSolution, Method
from kcover.edgelist import read_graph
from kcover.report import audit_certificate

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_clique_isolated(tmp_path, capsys):
    out_file = tmp_path / "g.txt"
    code, out, _ = run(capsys, "gen", "--family", "clique-isolated", "--n", "100", "--c", "1/4", "--out", str(out_file))
    assert code == 0
    stats = json.loads(out)
    assert stats["schema"] == "kcover/1"
    assert stats["graph"]["m"] == 1275 and stats["graph"]["c"] == "51/200"
    assert read_graph(out_file).m == 1275


def test_gen_gnp_empty_to_stdout(capsys):
    code, out, err = run(capsys, "gen", "--family", "gnp", "--n", "10", "--p", "0")
    assert code == 0
    assert out == "10 0\n"
    assert json.loads(err)["graph"]["m"] == 0


def test_gen_regular_parity_error(capsys):
    code, _, err = run(capsys, "gen", "--family", "regular", "--n", "5", "--d", "3")
    assert code == 1
    assert "odd" in err


def test_gen_missing_family_param(capsys):
    code, _, err = run(capsys, "gen", "--family", "gnp", "--n", "10")
    assert code == 1 and "--p" in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve", "--k", "2"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_solve_golden(capsys, monkeypatch):
    monkeypatch.chdir(GOLDEN)
    code, out, _ = run(
        capsys, "solve", "--in", "gprime_100_quarter.txt", "--k", "2",
        "--methods", "exact,greedy,derandomized", "--no-timings",
    )
    assert code == 0
    assert out == (GOLDEN / "solve_gprime_k2.json").read_text()


def test_solve_gprime_derandomized(capsys):
    code, out, _ = run(capsys, "solve", "--in", str(GOLDEN / "gprime_100_quarter.txt"), "--k", "2")
    rep = json.loads(out)
    (res,) = rep["results"]
    assert code == 0 and res["covered"] == 51 and res["certificate"]["verdict"]
    assert "time_ms" in res


def test_solve_edgeless_all_methods(tmp_path, capsys):
    f = tmp_path / "e.txt"
    f.write_text("7 0\n")
    code, out, _ = run(capsys, "solve", "--in", str(f), "--k", "3", "--methods", "all", "--trials", "5")
    rep = json.loads(out)
    assert code == 0
    assert [r["method"] for r in rep["results"]] == [m.value for m in Method]
    assert all(r["covered"] == 0 and r["certificate"]["verdict"] for r in rep["results"])


def test_solve_budget_refusal_is_per_method(capsys):
    code, out, _ = run(
        capsys, "solve", "--in", str(GOLDEN / "gprime_100_quarter.txt"), "--k", "5",
        "--methods", "exact,derandomized", "--budget", "1000",
    )
    rep = json.loads(out)
    assert code == 0
    exact, derand = rep["results"]
    assert exact["error_kind"] == "BudgetExceeded" and "1000" in exact["error"]
    assert derand["certificate"]["verdict"]


def test_solve_bad_method(capsys):
    code, _, err = run(capsys, "solve", "--in", str(GOLDEN / "gprime_100_quarter.txt"), "--k", "2", "--methods", "magic")
    assert code == 1 and "unknown method" in err


def test_solve_bad_file(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 1\n1 1\n")
    code, _, err = run(capsys, "solve", "--in", str(f), "--k", "2")
    assert code == 1 and "SelfLoopError" in err
    code, _, _ = run(capsys, "solve", "--in", str(tmp_path / "missing.txt"), "--k", "2")
    assert code == 1


def test_solve_violation_exit_2(capsys, monkeypatch):
    # an isolated vertex alone cannot meet the bound on G'
    def broken(g, k):
        return CoverageSolution((99,) * k, 0, Method.DERANDOMIZED)

    monkeypatch.setitem(coverage.SOLVERS, Method.DERANDOMIZED, broken)
    code, out, _ = run(capsys, "solve", "--in", str(GOLDEN / "gprime_100_quarter.txt"), "--k", "2")
    rep = json.loads(out)
    assert code == 2
    assert rep["derandomized_ok"] is False
    assert rep["results"][0]["certificate"]["verdict"] is False


def test_solve_reports_self_audit(capsys):
    code, out, _ = run(
        capsys, "solve", "--in", str(GOLDEN / "gprime_100_quarter.txt"), "--k", "3",
        "--methods", "all", "--trials", "20",
    )
    rep = json.loads(out)
    for res in rep["results"]:
        assert audit_certificate(res["certificate"])
        tampered = dict(res["certificate"], B_sq=res["certificate"]["B_sq"] + 2)
        assert not audit_certificate(tampered)


def test_sweep_cli(capsys):
    code, out, _ = run(capsys, "sweep", "--k", "2..4", "--c-points", "19", "--s-points", "20")
    rep = json.loads(out)
    assert code == 0 and rep["violations"] == [] and rep["evaluations"] == 3 * 19 * 20
    code, out, _ = run(capsys, "sweep", "--k-min", "2", "--k-max", "2", "--c-points", "1", "--s-points", "1")
    assert code == 0 and json.loads(out)["min_margin"] >= 0


def test_sweep_bad_range(capsys):
    with pytest.raises(SystemExit) as info:
        main(["sweep", "--k", "5..2"])
    assert info.value.code == 1
    code, _, _ = run(capsys, "sweep", "--k", "1..3")
    assert code == 1


def test_verify_empty(capsys):
    code, out, _ = run(capsys, "verify", "--count", "0", "--no-timings")
    rep = json.loads(out)
    assert code == 0 and rep["instances"] == [] and rep["summary"]["failures"] == 0


def test_verify_small_with_oracle(capsys):
    code, out, _ = run(capsys, "verify", "--count", "30", "--n", "8..16", "--k", "2..3", "--seed", "4", "--no-timings")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["checks"]["dominance"]["fail"] == 0
    for inst in rep["instances"]:
        for entry in inst["per_k"]:
            assert entry["exact"] >= entry["certificate"]["coverage"]
            assert audit_certificate(entry["certificate"])


def test_verify_is_byte_stable(capsys):
    argv = ["verify", "--count", "25", "--seed", "3", "--extremal", "--no-timings"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_parallel_matches_serial(capsys, monkeypatch):
    argv = ["verify", "--count", "40", "--seed", "5", "--no-timings"]
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("KCOVER_THREADS", "2")
    _, parallel, _ = run(capsys, *argv)
    assert serial == parallel


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "kcover", "gen", "--family", "gnp", "--n", "6", "--p", "1", "--out", str(tmp_path / "k6.txt")],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["graph"]["m"] == 15
