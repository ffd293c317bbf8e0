from __future__ import annotations

import io
import json
import math
import subprocess
import sys

import pytest

from earspec import canonical_form, cycle_graph, parse_graph6
from earspec import cli
from earspec.extremal import EnumerationReport, gen_p3star


def call(argv, stdin: str = ""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def lines(text: str) -> list[str]:
    return [s for s in text.splitlines() if s]


# ---- examples


def test_gen_then_rho():
    code, g6, _ = call(["gen", "p3star", "--n", "8"])
    assert code == 0
    code, out, _ = call(["rho", "--format", "json"], g6)
    rec = json.loads(out)
    assert code == 0 and abs(rec["rho"] - 2.302775638) <= 1e-9
    assert set(rec) >= {"rho", "perron", "iterations", "residual"}


def test_gen_then_check():
    _, g6, _ = call(["gen", "friendship", "--n", "7"])
    code, out, _ = call(["check", "--format", "json"], g6)
    certs = {c["property"]: c for c in json.loads(out)["certificates"]}
    assert code == 0
    assert certs["matching-covered"]["verdict"] is False
    assert certs["matching-covered"]["note"] == "no-perfect-matching"
    assert certs["factor-critical"]["verdict"] is True
    assert certs["minimal-factor-critical"]["verdict"] is True
    for c in certs.values():
        assert set(c) == {"property", "verdict", "witness", "note"}


def test_verify_small():
    code, out, _ = call(["verify", "--theorem", "1", "--n", "4", "--format", "json"])
    rep = json.loads(out)
    assert code == 0
    assert rep["argmax"] == [canonical_form(cycle_graph(4))]
    assert rep["bound_met"] and rep["extremal_match"]
    assert set(rep) == {"n", "class", "count", "max_rho", "argmax", "bound", "bound_met", "extremal_match"}


def test_verify_failure_exit(monkeypatch):
    bad = EnumerationReport(6, "minimal-mc-bipartite", 1, 3.0, ["x"], 2.0, False, False)
    monkeypatch.setattr(cli, "verify_theorem_1", lambda n, jobs=1: bad)
    code, _, _ = call(["verify", "--theorem", "1", "--n", "6"])
    assert code == 1


def test_gen_cycle_and_human_output():
    _, g6, _ = call(["gen", "cycle", "--n", "5"])
    assert parse_graph6(g6) == cycle_graph(5)
    _, out, _ = call(["check"], g6)
    assert "factor-critical=true" in out and "matching-covered=false" in out


def test_decompose():
    g6 = call(["gen", "p3star", "--n", "10"])[1]
    code, out, _ = call(["decompose", "--kind", "bipartite", "--format", "json"], g6)
    rec = json.loads(out)["decomposition"]
    assert code == 0 and rec["kind"] == "bipartite" and rec["grades"] == [0, 1, 1]
    bow = "D`{"
    code, out, _ = call(["decompose", "--kind", "odd", "--format", "json"], bow + "\n")
    rec = json.loads(out)
    assert rec["decomposition"] is None and rec["error"] == "cut-vertex"
    code, out, _ = call(["decompose", "--kind", "odd", "--format", "json"], "Dhc\n")
    assert json.loads(out)["decomposition"]["ears"] == []


def test_enumerate_formats():
    code, out, _ = call(["enumerate", "--class", "minimal-mc-bipartite", "--n", "8"])
    assert code == 0 and len(lines(out)) == 2
    code, out, _ = call(["enumerate", "--class", "minimal-factor-critical", "--n", "7", "--format", "json"])
    rec = json.loads(out)
    assert rec["count"] == 5 and rec["graphs"] == sorted(rec["graphs"])


def test_verify_tsv_row():
    code, out, _ = call(["verify", "--theorem", "2", "--n", "5", "--format", "tsv"])
    fields = out.rstrip("\n").split("\t")
    assert code == 0 and len(fields) == 8
    assert fields[0] == "5" and fields[1] == "minimal-factor-critical" and fields[-1] == "true"


# ---- invariants


def test_json_determinism():
    argv = ["verify", "--theorem", "2", "--n", "7", "--format", "json"]
    assert call(argv)[1] == call(argv)[1]
    g6 = "\n".join(call(["gen", "p3star", "--n", str(n)])[1].strip() for n in (6, 8, 10))
    assert call(["rho", "--format", "json"], g6)[1] == call(["rho", "--format", "json", "--jobs", "2"], g6)[1]


def test_float_precision():
    _, out, _ = call(["rho", "--format", "json"], call(["gen", "p3star", "--n", "8"])[1])
    rho = json.loads(out)["rho"]
    assert rho == float(f"{(1 + math.sqrt(13)) / 2:.12g}")
    assert len(repr(rho).replace(".", "").lstrip("0")) <= 12


def test_pipelining():
    produced = []
    for fam, n in (("p3star", 12), ("friendship", 9), ("cycle", 7)):
        produced.append(call(["gen", fam, "--n", str(n)])[1].strip())
    produced += lines(call(["enumerate", "--class", "minimal-mc-bipartite", "--n", "10"])[1])
    produced += lines(call(["enumerate", "--class", "minimal-factor-critical", "--n", "7"])[1])
    text = "\n".join(produced) + "\n"
    for cmd in (["check"], ["rho"], ["decompose", "--kind", "bipartite"], ["decompose", "--kind", "odd"]):
        code, out, _ = call(cmd, text)
        assert code == 0 and len(lines(out)) == len(produced)


def test_comments_and_blank_lines_skipped():
    code, out, _ = call(["rho", "--format", "json"], "# header\n\nA_\n   \n# tail\n")
    assert code == 0 and json.loads(out)["line"] == 3


def test_input_file(tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text("Cl\nC~\n")
    code, out, _ = call(["rho", str(f)])
    assert code == 0 and len(lines(out)) == 2
    assert call(["rho", str(tmp_path / "missing.g6")])[0] == 2


# ---- exit codes


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["rho", "--bogus"],
        ["gen", "p3star", "--n", "7"],
        ["gen", "star", "--n", "7"],
        ["verify", "--theorem", "3", "--n", "4"],
        ["verify", "--theorem", "1", "--n", "14"],
        ["enumerate", "--class", "minimal-factor-critical", "--n", "13"],
        ["enumerate", "--class", "minimal-mc-bipartite", "--n", "5"],
        ["rho", "--tol", "0"],
        ["rho", "--jobs", "0"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(argv, "A_\n")
    assert code == 2 and "usage" in err


def test_malformed_line_reports_number():
    code, out, err = call(["check"], "A_\n# note\nC~\nnot-graph6\n")
    assert code == 3 and "line 4" in err


def test_rho_disconnected_is_failure():
    code, out, _ = call(["rho", "--format", "json"], "C`\n")
    assert code == 1 and "error" in json.loads(out)


def test_env_tolerance(monkeypatch):
    g6 = call(["gen", "p3star", "--n", "20"])[1]
    tight = json.loads(call(["rho", "--format", "json"], g6)[1])
    monkeypatch.setenv("EARSPEC_TOL", "1e-4")
    loose = json.loads(call(["rho", "--format", "json"], g6)[1])
    assert loose["iterations"] < tight["iterations"]
    assert loose["residual"] <= 1e-4 * loose["rho"]
    override = json.loads(call(["rho", "--format", "json", "--tol", "1e-12"], g6)[1])
    assert override["iterations"] == tight["iterations"]
    monkeypatch.setenv("EARSPEC_TOL", "lots")
    assert call(["rho"], g6)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "earspec", "gen", "p3star", "--n", "8"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert parse_graph6(proc.stdout) == gen_p3star(8)
