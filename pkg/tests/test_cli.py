import json
import random

import pytest

from irreg.cli import main
from irreg.corpus import named_graphs
from irreg.graph import cycle_graph, gnp_random_graph
from irreg.io import emit_graph
from irreg.oracle import iv_exact, verify_certificate
from irreg.io import read_graph
from irreg import runner


def write(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(emit_graph(g))
    return str(p)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_examples(tmp_path, capsys):
    c4 = write(tmp_path, cycle_graph(4))
    code, out, _ = run_cli(capsys, "solve", c4, "--solver", "oracle")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 1 and rep["verified"] and rep["solver"] == "oracle"
    k3 = write(tmp_path, named_graphs()["K3"], "k3.txt")
    code, out, _ = run_cli(capsys, "solve", k3, "--target", "edge", "--solver", "vi")
    assert code == 0 and json.loads(out)["value"] == 1


def test_auto_matches_oracle(tmp_path, capsys):
    rng = random.Random(0)
    for i in range(10):
        g = gnp_random_graph(9, 0.5, rng)
        code, out, _ = run_cli(capsys, "solve", write(tmp_path, g, f"r{i}.txt"))
        assert code == 0 and json.loads(out)["value"] == iv_exact(g).value


def test_solve_budget(tmp_path, capsys):
    k3 = write(tmp_path, named_graphs()["K3"])
    code, out, _ = run_cli(capsys, "solve", k3, "--solver", "oracle", "--budget", "1")
    rep = json.loads(out)
    assert code == 0 and rep["feasible"] is False and rep["value"] == 2 and rep["certificate"] == []


def test_usage_errors(tmp_path, capsys):
    c4 = write(tmp_path, cycle_graph(4))
    assert run_cli(capsys, "solve", c4, "--target", "edge", "--solver", "nd")[0] == 1
    assert run_cli(capsys, "solve", c4, "--target", "edge", "--solver", "cd")[0] == 1
    assert run_cli(capsys, "solve")[0] == 1
    assert run_cli(capsys)[0] == 1
    bad = tmp_path / "loop.txt"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run_cli(capsys, "solve", str(bad))
    assert code == 1 and "self-loop" in err
    assert run_cli(capsys, "solve", str(tmp_path / "missing.txt"))[0] == 1


def test_internal_failure_exit(tmp_path, capsys, monkeypatch):
    from irreg.oracle import OracleResult
    monkeypatch.setattr(runner, "iv_exact", lambda g, **kw: OracleResult(0, (), 0, False))
    code, _, err = run_cli(capsys, "solve", write(tmp_path, cycle_graph(4)), "--solver", "oracle")
    assert code == 3 and "internal" in err


def test_check(tmp_path, capsys):
    c4 = write(tmp_path, cycle_graph(4))
    cert = tmp_path / "c.txt"
    cert.write_text("0\n")
    assert run_cli(capsys, "check", c4, str(cert))[0] == 0
    cert.write_text("")
    assert run_cli(capsys, "check", c4, str(cert))[0] == 2
    cert.write_text("0 1\n1 2\n")
    assert run_cli(capsys, "check", c4, str(cert), "--target", "edge")[0] == 0
    cert.write_text("9\n")
    assert run_cli(capsys, "check", c4, str(cert))[0] == 1


def test_check_accepts_solve_output(tmp_path, capsys):
    g = gnp_random_graph(8, 0.5, random.Random(1))
    p = write(tmp_path, g)
    _, out, _ = run_cli(capsys, "solve", p, "--target", "edge")
    cert = tmp_path / "r.json"
    cert.write_text(out)
    assert run_cli(capsys, "check", p, str(cert))[0] == 0


def test_params(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "params", write(tmp_path, named_graphs()["P3"]))
    d = json.loads(out)
    assert code == 0 and (d["nd"], d["vi"], d["cd"]) == (2, 2, 1)


def test_gen_random_is_seeded(tmp_path, capsys):
    a = run_cli(capsys, "gen", "random", "--n", "7", "--seed", "4")[1]
    b = run_cli(capsys, "gen", "random", "--n", "7", "--seed", "4")[1]
    assert a == b and a.startswith("# gnp")


def test_gen_3sat_writes_witness(tmp_path, capsys):
    prefix = tmp_path / "phi"
    code, out, _ = run_cli(capsys, "gen", "3sat", "--formula", "1 2 -1; 1 2 -2", "--witness",
                           "--out", str(prefix))
    info = json.loads(out)
    assert code == 0 and info["satisfiable"] and info["witness_size"] == 6
    assert run_cli(capsys, "check", info["graph"], info["witness"])[0] == 0
    assert "e1_1" in (tmp_path / "phi.names").read_text()


def test_gen_3sat_rejects_bad_formula(capsys):
    assert run_cli(capsys, "gen", "3sat", "--formula", "1 2")[0] == 1


def test_gen_mcc_and_factor(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "gen", "mcc", "--k", "2", "--n", "3", "--witness", "--seed", "2",
                           "--out", str(tmp_path / "m"))
    info = json.loads(out)
    assert code == 0 and info["witness_size"] == 3
    assert run_cli(capsys, "check", info["graph"], info["witness"])[0] == 0
    h = write(tmp_path, named_graphs()["K2"], "h.txt")
    code, out, _ = run_cli(capsys, "gen", "genfactor", "--graph", h, "--lists", "0|0", "--witness",
                           "--out", str(tmp_path / "f"))
    info = json.loads(out)
    assert code == 0 and info["scale"] == 2
    g = read_graph(info["graph"])
    cert = json.loads(open(info["witness"]).read())["certificate"]
    assert verify_certificate(g, [tuple(e) for e in cert], "edge")
    assert run_cli(capsys, "gen", "mcc", "--k", "3", "--n", "2")[0] == 1


def test_gen_corpus_and_bench(tmp_path, capsys):
    d = tmp_path / "corpus"
    code, out, _ = run_cli(capsys, "gen", "corpus", "--out", str(d), "--count", "12", "--max-n", "7")
    assert code == 0 and json.loads(out)["graphs"] == 12
    out_csv = tmp_path / "b.csv"
    assert run_cli(capsys, "bench", str(d), "--out", str(out_csv))[0] == 0
    rows = out_csv.read_text().splitlines()
    # vertex: oracle, nd, vi, cd; edge: oracle, vi
    assert len(rows) == 1 + 12 * 6
    assert all(r.endswith(",1") for r in rows[1:])
    assert run_cli(capsys, "bench", str(d), "--solvers", "magic")[0] == 1


def test_backend_flag(capsys):
    code, out, _ = run_cli(capsys, "--backend")
    assert code == 0 and out.strip() in ("python", "cython")
