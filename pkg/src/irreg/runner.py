"""Solver dispatch shared by the command line and the benchmark."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .fpt_cd import solve_iv_cd
from .fpt_nd import solve_iv_nd
from .fpt_vi import solve_ie_vi, solve_iv_vi
from .graph import Graph
from .oracle import ie_exact, iv_exact, verify_certificate
from .params import ParameterTooLarge, cluster_deletion_set, neighbourhood_diversity, vertex_integrity

SOLVERS = ("oracle", "nd", "vi", "cd")
TARGETS = ("vertex", "edge")
ND_THRESHOLD = 10
VI_CAP = 8
CD_CAP = 3


class UsageError(ValueError):
    pass


class VerificationFailed(RuntimeError):
    """A solver produced a certificate that does not check out."""


@dataclass
class RunReport:
    input: str
    target: str
    solver: str
    value: int
    certificate: list
    nodes: int
    timed_out: bool
    verified: bool
    wall_ms: float
    feasible: bool = True

    def as_json(self) -> dict:
        d = asdict(self)
        d["certificate"] = [list(x) if isinstance(x, tuple) else x for x in self.certificate]
        return d


def pick_solver(g: Graph, target: str, nd_threshold: int = ND_THRESHOLD, vi_cap: int = VI_CAP,
                cd_cap: int = CD_CAP) -> str:
    if target == "vertex" and neighbourhood_diversity(g)[0] <= nd_threshold:
        return "nd"
    try:
        vertex_integrity(g, vi_cap)
        return "vi"
    except ParameterTooLarge:
        pass
    if target == "vertex":
        try:
            cluster_deletion_set(g, cd_cap)
            return "cd"
        except ParameterTooLarge:
            pass
    return "oracle"


def run(g: Graph, target: str = "vertex", solver: str = "auto", budget: int | None = None,
        node_cap: int | None = None, name: str = "-", vi_cap: int | None = None) -> RunReport:
    """Solve and re-verify; raises :class:`VerificationFailed` on a bad certificate."""
    if target not in TARGETS:
        raise UsageError(f"unknown target {target!r}")
    if solver == "auto":
        solver = pick_solver(g, target)
    if solver not in SOLVERS:
        raise UsageError(f"unknown solver {solver!r}")
    if target == "edge" and solver in ("nd", "cd"):
        raise UsageError(f"solver {solver} only handles the vertex target")
    t0 = time.perf_counter()
    if solver == "oracle":
        fn = iv_exact if target == "vertex" else ie_exact
        res = fn(g, budget=budget, node_cap=node_cap)
    elif solver == "nd":
        res = solve_iv_nd(g)
    elif solver == "cd":
        res = solve_iv_cd(g)
    else:
        fn = solve_iv_vi if target == "vertex" else solve_ie_vi
        res = fn(g) if vi_cap is None else fn(g, cap=vi_cap)
    wall = (time.perf_counter() - t0) * 1000.0
    cert = list(res.certificate)
    feasible = budget is None or res.value <= budget
    if feasible:
        ok = verify_certificate(g, cert, target)
        if not ok or (not res.timed_out and len(cert) != res.value):
            raise VerificationFailed(f"{solver} returned a certificate that does not verify")
    else:
        ok = False
        cert = []
    value = res.value if feasible else budget + 1
    return RunReport(name, target, solver, value, cert, res.nodes_explored, res.timed_out, ok, wall,
                     feasible)
