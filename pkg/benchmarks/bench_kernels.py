"""Compare the compiled and pure-Python search kernels.

Runs the same exact searches under each backend, checks the answers and
node counts agree, and prints the time per workload.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time
from contextlib import contextmanager

from irreg import kernels
from irreg.fpt_vi import solve_ie_vi
from irreg.graph import gnp_random_graph, petersen_graph
from irreg.oracle import ie_exact, iv_exact


@contextmanager
def backend(mod):
    saved = kernels.vertex_search, kernels.edge_search, kernels.diseq_search
    kernels.vertex_search, kernels.edge_search, kernels.diseq_search = (
        mod.vertex_search, mod.edge_search, mod.diseq_search)
    try:
        yield
    finally:
        kernels.vertex_search, kernels.edge_search, kernels.diseq_search = saved


def workloads(seed: int):
    rng = random.Random(seed)
    dense = [gnp_random_graph(14, 0.5, rng) for _ in range(4)]
    mid = [gnp_random_graph(9, 0.8, rng) for _ in range(3)]
    return {
        "vertex oracle, G(14, .5) x4": lambda: [iv_exact(g) for g in dense],
        "edge oracle, G(14, .5) x4": lambda: [ie_exact(g) for g in dense],
        "edge oracle, Petersen": lambda: [ie_exact(petersen_graph())],
        "edge vi programs, G(9, .8) x3": lambda: [solve_ie_vi(g) for g in mid],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    mods = kernels.backends()
    if "cython" not in mods:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'workload':34s} " + " ".join(f"{name:>10s}" for name in mods) + "   speedup")
    for label, job in workloads(args.seed).items():
        times, answers = {}, {}
        for name, mod in mods.items():
            best = float("inf")
            with backend(mod):
                for _ in range(args.repeat):
                    t = time.perf_counter()
                    out = job()
                    best = min(best, time.perf_counter() - t)
            times[name] = best
            answers[name] = [(r.value, r.nodes_explored) for r in out]
        if len({repr(a) for a in answers.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        cols = " ".join(f"{times[n]:10.4f}" for n in mods)
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:34s} {cols}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
