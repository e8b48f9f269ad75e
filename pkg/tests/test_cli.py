from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from signed_corona.cli import main
from signed_corona.graph import SignedGraph, complete_graph, cycle_graph, empty_graph, path_graph, triad
from signed_corona.graphfile import read_graph, write_graph

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"


@pytest.fixture
def files(tmp_path: Path) -> dict[str, str]:
    out = {}
    graphs = {
        "p2": path_graph([1]),
        "h1": path_graph([1, -1]),
        "h2": SignedGraph.from_edges(3, [(0, 1, -1), (0, 2, -1), (1, 2, 1)]),
        "k1": empty_graph(1),
        "kbar2": empty_graph(2),
        "kbar3": empty_graph(3),
        "kbar4": empty_graph(4),
        "k2n": complete_graph(2, -1),
        "p4n": path_graph([-1, -1, -1]),
        "t0": triad(0),
        "t1": triad(1),
        "c4": cycle_graph([1] * 4),
        "c4s": cycle_graph([1] * 4).switch([0, 1]),
    }
    for name, g in graphs.items():
        path = tmp_path / f"{name}.txt"
        write_graph(path, g)
        out[name] = str(path)
    out["dir"] = str(tmp_path)
    return out


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict]:
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


# -- stats -----------------------------------------------------------------------------


def test_stats_fig2(capsys, files) -> None:  # type: ignore[no-untyped-def]
    out_path = str(Path(files["dir"]) / "fig2.txt")
    assert main(["corona", files["p2"], files["h1"], files["h2"], "-o", out_path]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "stats", out_path)
    assert code == 0
    assert "8 vertices" in out
    assert "12 edges (5 positive, 7 negative)" in out
    assert "triads (0,1,4,1)" in out
    assert "UNBALANCED" in out


def test_stats_edgeless(capsys, files) -> None:  # type: ignore[no-untyped-def]
    code, out, _ = run(capsys, "stats", files["kbar3"])
    assert code == 0
    assert "3 vertices" in out and "0 edges" in out
    assert out.strip().splitlines()[-1] == "BALANCED"


def test_stats_json(capsys, files) -> None:  # type: ignore[no-untyped-def]
    code, doc = run_json(capsys, "stats", files["h1"])
    assert code == 0
    assert doc["command"] == "stats" and doc["inputs"] == {"file": files["h1"]}
    res = doc["results"]
    assert res["marking"] == [1, -1, -1]
    assert res["edge_classes"]["pos_pm"] == 1 and res["edge_classes"]["neg_mm"] == 1
    assert res["balanced"] is True


def test_malformed_file(capsys, tmp_path) -> None:  # type: ignore[no-untyped-def]
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\ne 0 1 +\ne 1 2\n")
    code, _, err = run(capsys, "stats", str(bad))
    assert code == 2
    assert "line 3: expected 'e u v sign'" in err


def test_missing_file(capsys, tmp_path) -> None:  # type: ignore[no-untyped-def]
    code, _, err = run(capsys, "stats", str(tmp_path / "nope.txt"))
    assert code == 2 and "nope.txt" in err


# -- corona ------------------------------------------------------------------------------


def test_corona_fig2_matches_sample_file(capsys, files) -> None:  # type: ignore[no-untyped-def]
    out_path = Path(files["dir"]) / "product.txt"
    code, out, _ = run(capsys, "corona", files["p2"], files["h1"], files["h2"], "-o", str(out_path))
    assert code == 0
    assert "satellite 1: vertices 5-7" in out
    assert read_graph(out_path) == read_graph(GRAPHS / "fig2_product.txt")


def test_corona_uniform(capsys, files) -> None:  # type: ignore[no-untyped-def]
    out_path = Path(files["dir"]) / "p4.txt"
    code, _, _ = run(capsys, "corona", files["k2n"], files["k1"], "--uniform", "-o", str(out_path))
    assert code == 0
    assert read_graph(out_path).edges == {(0, 1, -1), (0, 2, -1), (1, 3, -1)}


def test_corona_count_mismatch(capsys, files) -> None:  # type: ignore[no-untyped-def]
    out_path = str(Path(files["dir"]) / "x.txt")
    code, _, err = run(capsys, "corona", files["p2"], files["k1"], files["k1"], files["k1"], "-o", out_path)
    assert code == 2 and "3 satellite files" in err
    code, _, err = run(capsys, "corona", files["p2"], files["k1"], files["k1"], "--uniform", "-o", out_path)
    assert code == 2 and "exactly one" in err


def test_corona_json_reports_both_table_readings(capsys, files) -> None:  # type: ignore[no-untyped-def]
    out_path = str(Path(files["dir"]) / "fig2.txt")
    code, doc = run_json(capsys, "corona", files["p2"], files["h1"], files["h2"], "-o", out_path)
    assert code == 0
    res = doc["results"]
    assert res["edge_stats"]["predicted"] == [12, 5, 7]
    assert res["edge_stats"]["literal_table"][1] == 7
    assert res["triads"]["predicted"] == [0, 1, 4, 1]
    assert res["layout"] == {"base": [0, 2], "satellites": [[2, 5], [5, 8]]}


# -- poly -------------------------------------------------------------------------------------


def test_poly_direct(capsys, files) -> None:  # type: ignore[no-untyped-def]
    code, out, _ = run(capsys, "poly", files["p4n"])
    assert (code, out.strip()) == (0, "x^4 - 3x^2 + 1")
    code, out, _ = run(capsys, "poly", files["kbar2"], "--matrix", "qlap")
    assert (code, out.strip()) == (0, "x^2")


def test_poly_factored(capsys, files) -> None:  # type: ignore[no-untyped-def]
    code, out, _ = run(capsys, "poly", "--spec", files["k1"], files["k1"], "--matrix", "lap", "--method", "factored")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "expanded: x^2 - 2x"
    assert lines[0] == "f_L(H)(x-1)[0]: (x - 1)"
    code, doc = run_json(capsys, "poly", "--spec", files["k1"], files["k1"], "--matrix", "lap", "--method", "factored")
    assert doc["results"]["coeffs"] == ["0/1", "-2/1", "1/1"]
    assert doc["results"]["matches_direct"] is True
    assert [f["multiplicity"] for f in doc["results"]["factors"]] == [1, 1]


def test_poly_factored_and_direct_agree(capsys, files) -> None:  # type: ignore[no-untyped-def]
    spec = [files["p2"], files["h1"], files["h2"]]
    for kind in ("adj", "lap", "qlap"):
        _, d = run_json(capsys, "poly", "--spec", *spec, "--matrix", kind)
        code, f = run_json(capsys, "poly", "--spec", *spec, "--matrix", kind, "--method", "factored")
        assert code == 0 and d["results"]["coeffs"] == f["results"]["coeffs"]


def test_poly_usage_errors(capsys, files) -> None:  # type: ignore[no-untyped-def]
    assert run(capsys, "poly", files["k1"], "--method", "factored")[0] == 2
    assert run(capsys, "poly")[0] == 2
    assert run(capsys, "poly", files["k1"], "--spec", files["k1"], files["k1"])[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["poly", files["k1"], "--matrix", "bogus"])
    assert info.value.code == 2


# -- coronal and cospectral ------------------------------------------------------------------


def test_coronal(capsys, files) -> None:  # type: ignore[no-untyped-def]
    assert run(capsys, "coronal", files["kbar4"])[1].strip() == "4 / x"
    assert run(capsys, "coronal", files["k2n"], "--kind", "lap")[1].strip() == "2 / (x - 3)"
    assert run(capsys, "coronal", files["k1"], "--method", "rank_one")[1].strip() == "1 / x"
    code, doc = run_json(capsys, "coronal", files["k2n"], "--kind", "lap")
    assert doc["results"] == {"pretty": "2 / (x - 3)", "num": ["2/1"], "den": ["-3/1", "1/1"]}


def test_cospectral(capsys, files) -> None:  # type: ignore[no-untyped-def]
    code, out, _ = run(capsys, "cospectral", files["t1"], files["t1"])
    assert (code, out.splitlines()[0]) == (0, "COSPECTRAL")
    code, out, _ = run(capsys, "cospectral", files["t0"], files["t1"])
    assert (code, out.splitlines()[0]) == (1, "NOT COSPECTRAL")
    for kind in ("adj", "lap", "qlap"):
        assert run(capsys, "cospectral", files["c4"], files["c4s"], "--matrix", kind)[0] == 0
    code, doc = run_json(capsys, "cospectral", files["t0"], files["t1"])
    assert code == 1 and doc["results"]["cospectral"] is False


# -- verify ---------------------------------------------------------------------------------


def test_verify_single_trial_is_deterministic(capsys) -> None:  # type: ignore[no-untyped-def]
    _, a = run_json(capsys, "verify", "--trials", "1", "--seed", "7")
    _, b = run_json(capsys, "verify", "--trials", "1", "--seed", "7")
    assert a == b and a["results"]["passed"] is True
    assert [s["name"] for s in a["results"]["suites"]][:3] == ["charpoly", "laplacian", "signless"]


def test_verify_detects_injected_fault(capsys) -> None:  # type: ignore[no-untyped-def]
    code, out, _ = run(capsys, "verify", "--trials", "20", "--suite", "charpoly", "--inject-fault", "sign-flip")
    assert code == 1
    assert "FAIL charpoly" in out
    assert "minimized instance:" in out and "# base" in out


def test_verify_rejects_bad_sizes(capsys) -> None:  # type: ignore[no-untyped-def]
    assert run(capsys, "verify", "--trials", "0")[0] == 2


def test_module_entry_point(files) -> None:  # type: ignore[no-untyped-def]
    proc = subprocess.run(
        [sys.executable, "-m", "signed_corona", "coronal", files["kbar4"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "4 / x"


def test_sample_graph_files_parse() -> None:
    for path in sorted(GRAPHS.glob("*.txt")):
        read_graph(path)
