import json
import subprocess
import sys

import pytest

from graphgrab.cli import main
from graphgrab.document import GraphDocument
from graphgrab.engine import solve
from graphgrab.graph import WeightedGraph

P4 = '{"format": 1, "n": 4, "weights": ["1", "4", "2", "3"], "edges": [[0, 1], [1, 2], [2, 3]], "classes": null, "root": null, "meta": {}}'


def run(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "graphgrab", *args], input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def doc_file(tmp_path, ws, edges, name="g.json"):
    p = tmp_path / name
    GraphDocument(WeightedGraph.from_edges(len(ws), edges, ws)).save(p)
    return str(p)


def test_gen_deterministic_and_families(capsys):
    for family in ("tree", "path", "kmn-tree", "blowup", "g-tree", "bt-tree", "blowup-cycle", "bipartite-even"):
        assert main(["gen", "--family", family, "--seed", "7", "--max-n", "10"]) == 0
        first = capsys.readouterr().out
        main(["gen", "--family", family, "--seed", "7", "--max-n", "10"])
        assert capsys.readouterr().out == first
        doc = GraphDocument.loads(first)
        assert doc.meta["family"] == family and doc.meta["seed"] == 7


def test_gen_kmn_and_even(capsys):
    main(["gen", "--family", "kmn-tree", "--m", "2", "--n", "2", "--no-attach"])
    doc = GraphDocument.loads(capsys.readouterr().out)
    assert doc.graph.n == 4 and len(doc.graph.edges()) == 4
    assert sorted(len(c) for c in doc.to_dict()["classes"]) == [2, 2]
    for seed in range(20):
        main(["gen", "--family", "blowup-cycle", "--even", "--seed", str(seed)])
        assert GraphDocument.loads(capsys.readouterr().out).graph.n % 2 == 0


def test_gen_unsatisfiable_bounds(capsys):
    assert main(["gen", "--family", "tree", "--min-n", "3", "--max-n", "3", "--even"]) == 3
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "nope"])
    assert info.value.code == 2


def test_solve_outputs(tmp_path, capsys):
    p = tmp_path / "p4.json"
    p.write_text(P4)
    assert main(["solve", str(p)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "N(G,1)=7 N(G,2)=3"
    assert "optimal first moves: 3" in out
    main(["solve", doc_file(tmp_path, [0, 1, 0], [(0, 1), (1, 2)], "p3.json")])
    assert capsys.readouterr().out.startswith("N(G,1)=0 ")
    main(["solve", str(p), "--root", "all", "--player", "-2", "--transcript"])
    out = capsys.readouterr().out
    assert "feasible first moves: 0,1,2,3" in out
    assert "R(G,S,-2)=" in out and "totals: player 1 " in out


def test_solve_errors(tmp_path, capsys):
    p = tmp_path / "p4.json"
    p.write_text(P4)
    assert main(["solve", str(p), "--root", "9"]) == 3
    assert main(["solve", str(p), "--root", "x"]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": 1, "n": 3, "weights": ["1", "1", "1"], "edges": [[0, 1]], "classes": null, "root": null, "meta": {}}')
    assert main(["solve", str(bad)]) == 3
    big = doc_file(tmp_path, [1] * 30, [(i, i + 1) for i in range(29)], "big.json")
    assert main(["solve", big]) == 3
    assert main(["solve", str(tmp_path / "missing.json")]) == 2


def test_solve_reads_stdin():
    code, out, _ = run("solve", "-", stdin=P4)
    assert code == 0 and out.startswith("N(G,1)=7 N(G,2)=3")


def test_verify_command(tmp_path, capsys):
    code = main(["verify", "--claim", "THM-1.2", "--count", "15", "--max-n", "12", "--seed", "1", "--witness-dir", str(tmp_path)])
    out = capsys.readouterr().out
    assert code == 0
    records = [json.loads(line) for line in out.splitlines() if not line.startswith("#")]
    assert records and all(r["verdict"] == "pass" for r in records)
    assert out.splitlines()[-1] == "# PASS: 0 failing reports"
    with pytest.raises(SystemExit) as info:
        main(["verify", "--claim", "BOGUS"])
    assert info.value.code == 2


def test_verify_failure_exit_and_witness(tmp_path, capsys, monkeypatch):
    from graphgrab import cli
    from graphgrab.verify import ClaimReport, _witness

    g = WeightedGraph.from_edges(2, [(0, 1)], [1, 2])
    fake = [ClaimReport("THM-1.2", "planted", False, _witness(g, None, {"N(G,1)": 0}, "planted"))]
    monkeypatch.setattr(cli, "run_claim", lambda *a, **k: iter(fake))
    assert main(["verify", "--claim", "THM-1.2", "--witness-dir", str(tmp_path)]) == 1
    rec = json.loads(capsys.readouterr().out.splitlines()[0])
    doc = GraphDocument.load(rec["witness_path"])
    assert doc.graph == g and doc.meta["violated"] == "planted"


def test_search_command(tmp_path):
    args = ["search", "--max-n", "8", "--exhaustive-n", "8", "--zero-one-n", "6", "--count", "30", "--seed", "0",
            "--findings", str(tmp_path / "f")]
    code, out, _ = run(*args)
    assert code == 0
    assert out.splitlines()[-1].startswith("# instances=")
    assert "findings=0" in out.splitlines()[-1]
    records = [json.loads(line) for line in out.splitlines() if not line.startswith("#")]
    assert records
    for rec in records:
        doc = GraphDocument.load(rec["witness_path"])
        assert doc.meta["kind"] == "note"
        assert solve(doc.graph).score(1) * 2 >= doc.graph.weight()
    assert run(*args)[1] == out


def test_search_zero_one_mode(tmp_path):
    code, out, _ = run("search", "--max-n", "6", "--weights", "01-exhaustive", "--findings", str(tmp_path))
    assert code == 0
    # 1 + 3 + 17 connected bipartite graphs on 2, 4, 6 vertices, all 0/1 weightings
    assert out.splitlines()[-1] == "# instances=1140 findings=0 notes=0"


def test_play_rejects_and_aborts(tmp_path):
    p3 = doc_file(tmp_path, [1, 1, 1], [(0, 1), (1, 2)], "p3.json")
    code, out, _ = run("play", p3, "--human", "first", stdin="1\n")
    assert code == 0
    assert "rejected 1: cut vertex" in out and out.rstrip().endswith("aborted")
    p2 = doc_file(tmp_path, [3, 5], [(0, 1)], "p2.json")
    code, out, _ = run("play", p2, "--human", "second", stdin="0\n")
    assert "machine takes 1 (w=5)" in out
    assert "final: you 3, machine 5, total 8" in out
    assert "you secured less than half" in out
    code, out, _ = run("play", p2, "--human", "first", "--root", "0", stdin="0\n1\n")
    assert "rejected 0: strands a component with no root" in out


def test_export_dot_deterministic(tmp_path):
    p2 = doc_file(tmp_path, [3, 5], [(0, 1)], "p2.json")
    code, out, _ = run("export-dot", p2)
    assert code == 0 and out.count(" -- ") == 1
    assert run("export-dot", p2)[1] == out
