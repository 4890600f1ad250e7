"""Edge-irregulator instances from multicoloured clique.

Each edge of the base graph is subdivided.  Every colour class ``V_i`` and
every edge class ``U_{i,j}`` gets a hub ``w`` from a gadget ``H_b`` whose
hub and partner ``y`` share the degree ``n^2 + 1``, so one edge at the hub
must go.  Leaves pad colour vertices to degree ``kn`` and subdivision
vertices to ``kn + 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..graph import EdgeSet, Graph, norm_edge
from .labeled import Builder, LabeledGraph


class MccError(ValueError):
    pass


@dataclass(frozen=True)
class MccInstance:
    graph: Graph
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))
        self.validate()

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts[0]) if self.parts else 0

    def validate(self) -> None:
        g = self.graph
        if not self.parts:
            raise MccError("need at least one colour class")
        flat = sorted(x for p in self.parts for x in p)
        if flat != list(range(g.n)):
            raise MccError("colour classes must partition the vertices")
        if len({len(p) for p in self.parts}) != 1:
            raise MccError("colour classes must have equal size")
        for i, p in enumerate(self.parts, 1):
            for a, b in combinations(p, 2):
                if g.has_edge(a, b):
                    raise MccError(f"colour class {i} is not independent")

    def colour(self) -> list[int]:
        out = [0] * self.graph.n
        for i, p in enumerate(self.parts):
            for x in p:
                out[x] = i
        return out

    def is_multicoloured_clique(self, clique: Sequence[int]) -> bool:
        col = self.colour()
        if len(clique) != self.k or sorted(col[x] for x in clique) != list(range(self.k)):
            return False
        return all(self.graph.has_edge(a, b) for a, b in combinations(clique, 2))


def random_instance(k: int, n: int, p: float, rng: random.Random, plant: bool = True):
    """A random instance and, when ``plant`` is set, a multicoloured clique inside it."""
    parts = [list(range(i * n, (i + 1) * n)) for i in range(k)]
    edges = set()
    for i, j in combinations(range(k), 2):
        for a in parts[i]:
            for b in parts[j]:
                if rng.random() < p:
                    edges.add((a, b))
    clique = None
    if plant:
        clique = [rng.choice(part) for part in parts]
        for a, b in combinations(clique, 2):
            edges.add(norm_edge(a, b))
    return MccInstance(Graph(k * n, sorted(edges)), tuple(tuple(x) for x in parts)), clique


def _gadget(bld: Builder, n: int, targets: Sequence[int], tag: str) -> int:
    n2 = n * n
    b = len(targets)
    if b > n2:
        raise MccError(f"gadget {tag} has {b} targets, more than n^2 = {n2}")
    w = bld.add(f"w_{tag}")
    y = bld.add(f"y_{tag}")
    bld.join(w, y)
    for t in targets:
        bld.join(w, t)
    for _ in range(n2 - b):
        x = bld.add()
        bld.join(w, x)
        bld.join(x, bld.add())
    bld.leaves(y, n2 - 2)
    for _ in range(2):
        z = bld.add()
        bld.join(y, z)
        bld.leaves(z, n2 - 1)
    return w


def gen_from_mcc(inst: MccInstance) -> LabeledGraph:
    inst.validate()
    k, n = inst.k, inst.n
    if not n * n - 1 > k * n + 1:
        raise MccError(f"needs n^2 - 1 > kn + 1, got n={n}, k={k}")
    g = inst.graph
    bld = Builder()
    col = inst.colour()
    pos = {}
    vid = {}
    for i, part in enumerate(inst.parts, 1):
        for p, x in enumerate(part, 1):
            vid[x] = bld.add(f"v_{i}^{p}")
            pos[x] = (i, p)
    classes: dict[tuple[int, int], list[int]] = {}
    for a, b in g.edges():
        if col[a] > col[b]:
            a, b = b, a
        (i, p), (j, q) = pos[a], pos[b]
        u = bld.add(f"u_{i},{j}^{p},{q}")
        bld.join(vid[a], u)
        bld.join(u, vid[b])
        classes.setdefault((i, j), []).append(u)
    for i, part in enumerate(inst.parts, 1):
        _gadget(bld, n, [vid[x] for x in part], f"{i}")
    for i, j in combinations(range(1, k + 1), 2):
        _gadget(bld, n, classes.get((i, j), []), f"{i},{j}")
    # padding; degrees so far are counted from the edge list
    deg = [0] * bld.n
    for a, b in bld.edge_list:
        deg[a] += 1
        deg[b] += 1
    for x in vid.values():
        bld.leaves(x, k * n - deg[x])
    for us in classes.values():
        for u in us:
            bld.leaves(u, k * n + 1 - deg[u])
    return bld.freeze(kind="mcc", k=k, n=n)


def witness_from_clique(inst: MccInstance, lg: LabeledGraph, clique: Sequence[int]) -> EdgeSet:
    """One hub edge per gadget, at the clique's vertices and edges."""
    if not inst.is_multicoloured_clique(clique):
        raise MccError("not a multicoloured clique")
    col = inst.colour()
    where = {}
    for i, part in enumerate(inst.parts, 1):
        for p, x in enumerate(part, 1):
            where[x] = (i, p)
    picks = sorted(clique, key=lambda x: col[x])
    out = []
    for x in picks:
        i, p = where[x]
        out.append(norm_edge(lg.v(f"v_{i}^{p}"), lg.v(f"w_{i}")))
    for a, b in combinations(picks, 2):
        (i, p), (j, q) = where[a], where[b]
        out.append(norm_edge(lg.v(f"u_{i},{j}^{p},{q}"), lg.v(f"w_{i},{j}")))
    return tuple(sorted(out))


def degree_violations(inst: MccInstance, lg: LabeledGraph) -> list[str]:
    """Named-degree bookkeeping that should hold; returns what does not."""
    g = lg.graph
    k, n = inst.k, inst.n
    bad = []
    hubs = [f"{i}" for i in range(1, k + 1)] + [f"{i},{j}" for i, j in combinations(range(1, k + 1), 2)]
    for tag in hubs:
        dw, dy = g.degree(lg.v(f"w_{tag}")), g.degree(lg.v(f"y_{tag}"))
        if not dw == dy == n * n + 1:
            bad.append(f"gadget {tag}: d(w)={dw}, d(y)={dy}")
    for name, x in lg.vertices.items():
        if name.startswith("v_") and g.degree(x) != k * n:
            bad.append(f"{name} has degree {g.degree(x)}")
        if name.startswith("u_") and g.degree(x) != k * n + 1:
            bad.append(f"{name} has degree {g.degree(x)}")
    return bad
