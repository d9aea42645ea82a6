import io
import json
import subprocess
import sys

import pytest

from dpcolor.cli import EXIT_INTERNAL, EXIT_OK, EXIT_REFUSAL, run
from dpcolor.cover import dumps_assignment, permutation_assignment
from dpcolor.graph import cycle_graph, format_edge_list, k5_minus_edge, parse_edge_list

from conftest import petersen


def call(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return write


def test_diam(files):
    code, out = call("diam", files("c5.edges", format_edge_list(cycle_graph(5))))
    assert code == EXIT_OK
    assert json.loads(out) == {"vertices": 5, "edges": 5, "diameter": 2,
                               "min_degree": 2, "max_degree": 2}


def test_check_mp2(files):
    code, out = call("check-mp2", files("k.edges", format_edge_list(k5_minus_edge())))
    assert json.loads(out)["mp2"] is True
    code, out = call("check-mp2", files("c.edges", format_edge_list(cycle_graph(6))))
    doc = json.loads(out)
    assert doc["mp2"] is False and doc["reasons"]


def test_catalog_list_and_emit():
    code, out = call("catalog", "list")
    rows = json.loads(out)
    assert [r["name"] for r in rows][:3] == ["H1", "H2", "G1"]
    code, out = call("catalog", "emit", "G8", "--params", "n=2,m=1")
    assert code == EXIT_OK and out.startswith("# G8(2,1)")
    g = parse_edge_list(out)
    assert g.n == 12
    code, out = call("catalog", "emit", "G11", "--format", "json")
    assert set(json.loads(out)["triangles"]) == {f"C{i}" for i in range(1, 9)}


def test_catalog_refusals():
    code, out = call("catalog", "emit", "G8", "--params", "n=1,m=1")
    assert code == EXIT_REFUSAL and json.loads(out)["error"] == "refusal"
    code, _ = call("catalog", "emit", "G8", "--params", "n")
    assert code == EXIT_REFUSAL
    code, _ = call("catalog", "emit")
    assert code == EXIT_REFUSAL


def test_chi_dp_C4(files):
    path = files("c4.edges", format_edge_list(cycle_graph(4)))
    code, out = call("chi-dp", path, "--kmax", 4)
    assert (code, out) == (EXIT_OK, "3\n")
    code, out = call("chi-dp", path, "--kmax", 2, "--json")
    doc = json.loads(out)
    assert doc["chi_dp"] is None and "2" in doc["counterexamples"]


def test_color_and_solve(files, tmp_path):
    c = files("c4.edges", format_edge_list(cycle_graph(4)))
    code, text = call("assign", c, "--seed", 3)
    a = files("a.json", text)
    code, out = call("color", c, a, "--trace", tmp_path / "t.json")
    cert = json.loads(out)
    assert code == EXIT_OK and cert["verified"] is True
    assert len(cert["added_edges"]) == 2
    assert json.loads((tmp_path / "t.json").read_text())["steps"]
    code, out = call("solve", c, a)
    assert json.loads(out)["verified"] is True


def test_solve_unsat(files):
    g = cycle_graph(4)
    c = files("c4.edges", format_edge_list(g))
    a = files("a.json", dumps_assignment(permutation_assignment(g, 2, {(0, 1): (2, 1)})))
    code, out = call("solve", c, a)
    assert code == EXIT_OK and json.loads(out)["status"] == "UNSAT"


def test_color_refuses_petersen(files):
    p = files("p.edges", format_edge_list(petersen()))
    code, text = call("assign", p, "--seed", 1)
    code, out = call("color", p, files("a.json", text))
    assert code == EXIT_REFUSAL and "planar" in json.loads(out)["message"]


def test_color_outside_catalog(files):
    from pathlib import Path
    block = (Path(__file__).parent / "data" / "gap_graphs.edges").read_text().split("\n\n")[0]
    g = files("gap.edges", block)
    code, text = call("assign", g, "--seed", 0)
    code, out = call("color", g, files("a.json", text))
    assert code == EXIT_INTERNAL and json.loads(out)["error"] == "outside-catalog"


def test_fuzz(tmp_path):
    code, out = call("fuzz", "H1", "--trials", 200, "--seed", 7)
    doc = json.loads(out)
    assert code == EXIT_OK and doc["failures"] == []
    assert sum(doc["branches"].values()) == 200


def test_straighten(files):
    g = k5_minus_edge()
    gpath = files("k.edges", format_edge_list(g))
    code, text = call("assign", gpath, "--seed", 2)
    apath = files("a.json", text)
    u, v = g.edges()[0]
    code, out = call("straighten", gpath, apath, "--tree", f"{u}-{v}")
    doc = json.loads(out)
    pairs = doc["assignment"]["matchings"][f"{u} {v}"]
    assert code == EXIT_OK and all(a == b for a, b in pairs)
    code, _ = call("straighten", gpath, apath, "--tree", "nope-x")
    assert code == EXIT_REFUSAL


def test_missing_file():
    code, out = call("diam", "/nonexistent/file.edges")
    assert code == EXIT_REFUSAL


def test_deterministic_output(files):
    c = files("c5.edges", format_edge_list(cycle_graph(5)))
    outs = {call("assign", c, "--seed", 11)[1] for _ in range(2)}
    assert len(outs) == 1
    a = files("a.json", outs.pop())
    assert call("color", c, a) == call("color", c, a)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dpcolor.cli", "catalog", "list"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)
