"""Vertex-irregulators parameterized by neighbourhood diversity.

After the adjacent-twin kernel every clique class is a single vertex, so
all survivors of a class have the same degree: the sum of survivor counts
over the neighbouring classes.  For each choice of classes that keep at
least one vertex, a small program maximises the number of survivors
subject to adjacent classes getting different degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import diseq
from .graph import Graph, TwinPartition, twin_partition
from .oracle import OracleResult
from .twins import ReductionTrace, reduce_adjacent_twins


@dataclass(frozen=True)
class NdInstance:
    trace: ReductionTrace
    partition: TwinPartition
    class_adj: tuple[frozenset[int], ...]

    @property
    def reduced(self) -> Graph:
        return self.trace.reduced

    @property
    def d(self) -> int:
        return self.trace.d


def nd_instance(g: Graph) -> NdInstance:
    trace = reduce_adjacent_twins(g)
    h = trace.reduced
    part = twin_partition(h)
    where = part.class_of()
    adj = []
    for i, cls in enumerate(part.classes):
        # twin classes are fully joined or fully disjoint, so one member suffices
        adj.append(frozenset(where[x] for x in h.adj[cls[0]]))
        if len(cls) > 1 and i in adj[-1]:
            raise AssertionError("clique class survived the twin reduction")
    return NdInstance(trace, part, tuple(adj))


def nd_program(inst: NdInstance, s1: list[int]) -> diseq.DiseqProgram:
    """The survivor-count program for the classes ``s1`` that stay non-empty."""
    p = diseq.DiseqProgram()
    var = {}
    for i in s1:
        var[i] = p.add_var(f"x{i}", 1, len(inst.partition.classes[i]))
    chosen = set(s1)
    for a, i in enumerate(s1):
        for j in s1[a + 1:]:
            if j in inst.class_adj[i]:
                p.add_ne({var[l]: 1 for l in inst.class_adj[i] & chosen},
                         {var[l]: 1 for l in inst.class_adj[j] & chosen})
    p.set_objective("max", {var[i]: 1 for i in s1})
    return p


def solve_iv_nd(g: Graph) -> OracleResult:
    inst = nd_instance(g)
    classes = inst.partition.classes
    k = len(classes)
    best_val = 0  # keeping nothing is always feasible
    best_keep: dict[int, int] = {}
    nodes = 0
    for mask in range(1, 1 << k):
        s1 = [i for i in range(k) if mask >> i & 1]
        if sum(len(classes[i]) for i in s1) <= best_val:
            continue
        sol = diseq.solve(nd_program(inst, s1), cutoff=best_val)
        nodes += sol.nodes + 1
        if sol.feasible:
            best_val = sol.objective_value
            best_keep = dict(zip(s1, sol.assignment))
    deleted = []
    for i, cls in enumerate(classes):
        deleted.extend(cls[best_keep.get(i, 0):])
    cert = tuple(sorted(inst.trace.to_original(deleted) + inst.trace.removed_vertices))
    return OracleResult(inst.reduced.n - best_val + inst.d, cert, nodes, False)
