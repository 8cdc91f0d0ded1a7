import io
import json
import subprocess
import sys

import pytest

from nga.cli import main
from nga.graphs import Graph, census, cycle_graph, is_connected, path_graph, to_edge_list, to_graph6
from nga.structure import TAGS

C5 = to_graph6(cycle_graph(5))


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run(argv)
    assert code == 0
    return json.loads(text)


def is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def check_analyze(d):
    assert set(d) == {"p", "q", "k", "k_b", "rank_I", "rank_I_oriented", "ann_dim", "short_functionals"}
    assert all(is_int(v) and v >= 0 for v in d.values())


def check_classify(d):
    assert set(d) <= {"tag", "params", "iso"} and d["tag"] in TAGS
    assert set(d["params"]) <= {"p", "q", "m", "n", "path_len"} and {"p", "q"} <= set(d["params"])
    assert all(is_int(v) for v in d["params"].values())


def check_coherence(d):
    assert {"p", "q", "max_circuit", "circuits"} <= set(d) <= {"p", "q", "max_circuit", "circuits", "mc_edge_connected", "posa"}
    for c in d["circuits"]:
        assert c["kind"] in ("even_cycle", "doubly_odd_paddle")
        assert all(len(e) == 2 for e in c["edges"])
    if "posa" in d:
        assert d["posa"]["kind"] in ("even_cycle", "two_odd_cycles")


# -- examples -------------------------------------------------------------------------

def test_classify_c5():
    assert C5 == "Dhc"
    assert run_json(["classify", "--graph6", C5]) == {"tag": "OddUnicyclic_Op", "params": {"p": 5, "q": 5}}


def test_classify_with_iso_round_trips():
    from nga.algebra import is_homomorphism, map_from_dict

    d = run_json(["classify", "--graph6", to_graph6(cycle_graph(6)), "--with-iso"])
    assert d["tag"] == "EvenCycle_F0_Tp" and d["params"]["m"] == 6
    m = map_from_dict(d["iso"])
    assert is_homomorphism(m) and m.is_invertible()


def test_analyze_p4_edge_list(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text(to_edge_list(path_graph(4)))
    d = run_json(["analyze", "--edges", str(f)])
    assert d == {"p": 4, "q": 3, "k": 1, "k_b": 1, "rank_I": 3, "rank_I_oriented": 3,
                 "ann_dim": 1, "short_functionals": 3}


def test_petersen_verify():
    code, text = run(["petersen", "verify", "--skip-census"])
    assert code == 0
    report = json.loads(text)
    assert report and all(r["status"] == "pass" for r in report)


def test_petersen_verify_text():
    code, text = run(["petersen", "verify", "--skip-census", "--format", "text"])
    assert code == 0
    assert all(line.startswith("PASS") for line in text.splitlines())


def test_coherence_butterfly():
    d = run_json(["coherence", "--graph6", "DK{"])
    check_coherence(d)


def test_coherence_petersen_bound():
    from nga.petersen import build_petersen

    d = run_json(["coherence", "--graph6", to_graph6(build_petersen().graph), "--max-circuit", "6"])
    assert len(d["circuits"]) == 10 and "mc_edge_connected" not in d
    assert d["posa"]["kind"] in ("even_cycle", "two_odd_cycles")


def test_census_lines():
    code, text = run(["census", "--order", "10", "--cubic", "--connected"])
    rows = [json.loads(l) for l in text.splitlines()]
    assert code == 0 and len(rows) == 19
    assert [0, 10, 0] in [r["fingerprint"] for r in rows]


def test_sweep_is_reproducible():
    a = run(["sweep", "--count", "20", "--max-order", "8"])
    b = run(["sweep", "--count", "20", "--max-order", "8", "--seed", "20240607"])
    assert a == b and a[0] == 0
    for line in a[1].splitlines():
        d = json.loads(line)
        assert d["short_functionals"] == d["q"]


def test_text_output():
    code, text = run(["coherence", "--graph6", to_graph6(cycle_graph(4)), "--format", "text"])
    assert code == 0
    assert "circuits:" in text and "- edges:" in text and "kind: even_cycle" in text


# -- exit codes -------------------------------------------------------------------------

def test_bad_graph6_exits_2(capsys):
    assert run(["analyze", "--graph6", "C"])[0] == 2
    assert "byte" in capsys.readouterr().err


def test_missing_file_exits_2(tmp_path, capsys):
    assert run(["analyze", "--edges", str(tmp_path / "nope.txt")])[0] == 2
    assert "cannot read" in capsys.readouterr().err


def test_disconnected_classify_exits_2():
    assert run(["classify", "--graph6", to_graph6(Graph(3, ((0, 1),)))])[0] == 2


@pytest.mark.parametrize("argv", [
    ["census", "--order", "11", "--cubic"],
    ["census", "--order", "9"],
    ["census", "--order", "0"],
    ["coherence", "--graph6", C5, "--max-circuit", "0"],
    ["sweep", "--max-order", "40"],
])
def test_bounds_exit_2(argv):
    assert run(argv)[0] == 2


def test_invariant_violation_exits_1(monkeypatch, capsys):
    import nga.cli as cli
    from nga.algebra import InvariantViolation

    def broken(G):
        raise InvariantViolation("incidence_rank", "forced")

    monkeypatch.setattr(cli, "analyze", broken)
    assert run(["analyze", "--graph6", C5])[0] == 1
    assert "invariant violation in incidence_rank" in capsys.readouterr().err


def test_argparse_rejects_two_sources():
    with pytest.raises(SystemExit):
        main(["analyze", "--graph6", C5, "--edges", "x"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nga", "classify", "--graph6", C5],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["tag"] == "OddUnicyclic_Op"


# -- JSON round trip over the census ------------------------------------------------------

@pytest.mark.slow
@pytest.mark.parametrize("p", range(1, 8))
def test_json_reports_over_census(p):
    for G in census(p):
        s = to_graph6(G)
        check_analyze(run_json(["analyze", "--graph6", s]))
        if is_connected(G):
            check_classify(run_json(["classify", "--graph6", s, "--with-iso"]))
        else:
            assert run(["classify", "--graph6", s])[0] == 2
        check_coherence(run_json(["coherence", "--graph6", s]))
    for line in run(["census", "--order", str(p)])[1].splitlines():
        row = json.loads(line)
        assert set(row) == {"graph6", "p", "q", "fingerprint"}
