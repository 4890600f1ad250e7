"""Run a solver matrix over a corpus and tabulate the reports."""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor

from .runner import run

COLUMNS = ["input", "n", "m", "target", "solver", "value", "cert_size", "certificate", "nodes",
           "timed_out", "verified"]


def plan(graphs, solvers, targets):
    jobs = []
    for name, g in graphs:
        for target in targets:
            for solver in solvers:
                if target == "edge" and solver in ("nd", "cd"):
                    continue
                jobs.append((name, g, target, solver))
    return jobs


def _one(job, node_cap):
    name, g, target, solver = job
    r = run(g, target, solver, node_cap=node_cap, name=name)
    cert = " ".join(f"{e[0]}-{e[1]}" if isinstance(e, tuple) else str(e) for e in r.certificate)
    row = {"input": name, "n": g.n, "m": g.m, "target": target, "solver": solver, "value": r.value,
           "cert_size": len(r.certificate), "certificate": cert, "nodes": r.nodes,
           "timed_out": int(r.timed_out), "verified": int(r.verified)}
    return row, r.wall_ms


def run_bench(graphs, solvers, targets, seed: int = 0, sample: int | None = None,
              node_cap: int | None = None, jobs: int = 1, timings: bool = False) -> str:
    """CSV text, rows sorted by input, target and solver.

    Wall times vary between runs, so they only appear with ``timings``.
    """
    graphs = sorted(graphs, key=lambda x: x[0])
    if sample is not None and sample < len(graphs):
        graphs = sorted(random.Random(seed).sample(graphs, sample), key=lambda x: x[0])
    work = plan(graphs, solvers, targets)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_one, work, [node_cap] * len(work)))
    else:
        results = [_one(j, node_cap) for j in work]
    rows = []
    for row, wall in results:
        if timings:
            row["wall_ms"] = f"{wall:.3f}"
        rows.append(row)
    rows.sort(key=lambda r: (r["input"], r["target"], r["solver"]))
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS + (["wall_ms"] if timings else []), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
