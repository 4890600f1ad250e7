"""Exact vertex- and edge-irregulators by branch-and-bound.

Both searches deepen the budget one step at a time, so the first budget
that succeeds is the optimum.  At each node the conflict edge with the
fewest candidate deletions is branched on; after a branch fails its
candidate is marked as kept for the remaining siblings, so no deletion
set is explored twice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .graph import Graph, GraphError, conflict_edges, delete_edges, delete_vertices, is_locally_irregular, norm_edge

DEFAULT_NODE_CAP = 10**8


def default_node_cap() -> int:
    raw = os.environ.get("IRREG_NODE_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise GraphError(f"IRREG_NODE_CAP must be an integer, got {raw!r}") from None
    return DEFAULT_NODE_CAP


@dataclass(frozen=True)
class OracleResult:
    """Solver outcome.

    ``value`` is the optimum when the search completed.  Under a budget
    with no solution it is ``budget + 1``; after a timeout it is the best
    proven lower bound and ``certificate`` is merely some valid irregulator.
    """

    value: int
    certificate: tuple
    nodes_explored: int = 0
    timed_out: bool = False


def csr(g: Graph):
    indptr = [0]
    indices: list[int] = []
    for u in range(g.n):
        indices.extend(g.adj[u])
        indptr.append(len(indices))
    return indptr, indices


def edge_csr(g: Graph):
    edges = list(g.edges())
    eid = {e: i for i, e in enumerate(edges)}
    indptr, indices = csr(g)
    eids = [eid[norm_edge(u, v)] for u in range(g.n) for v in g.adj[u]]
    return edges, indptr, indices, eids


def _greedy_vertex(g: Graph) -> tuple[int, ...]:
    removed: list[int] = []
    h, ids = g, list(range(g.n))
    while True:
        bad = conflict_edges(h)
        if not bad:
            return tuple(sorted(removed))
        hits = [0] * h.n
        for u, v in bad:
            hits[u] += 1
            hits[v] += 1
        x = max(range(h.n), key=lambda i: (hits[i], -i))
        removed.append(ids[x])
        h, remap = delete_vertices(h, [x])
        ids = [ids[old] for old in sorted(remap)]


def _greedy_edge(g: Graph) -> tuple:
    removed = []
    h = g
    while True:
        bad = conflict_edges(h)
        if not bad:
            return tuple(sorted(removed))
        hits = {}
        for u, v in bad:
            hits[u] = hits.get(u, 0) + 1
            hits[v] = hits.get(v, 0) + 1
        e = max(h.edges(), key=lambda e: (hits.get(e[0], 0) + hits.get(e[1], 0), (-e[0], -e[1])))
        removed.append(e)
        h = delete_edges(h, [e])


def _deepen(run, limit: int, budget: int | None, node_cap: int | None, greedy):
    cap = default_node_cap() if node_cap is None else node_cap
    top = limit if budget is None else min(budget, limit)
    total = 0
    for k in range(top + 1):
        status, sol, nodes = run(k, max(cap - total, 0))
        total += nodes
        if status == kernels.FOUND:
            return OracleResult(k, sol, total, False)
        if status == kernels.TIMEOUT:
            return OracleResult(k, greedy(), total, True)
    return OracleResult(top + 1, (), total, False)


def iv_exact(g: Graph, budget: int | None = None, node_cap: int | None = None) -> OracleResult:
    """Minimum vertex-irregulator of ``g``.

    >>> from irreg.graph import cycle_graph
    >>> iv_exact(cycle_graph(4)).value
    1
    """
    if budget is not None and budget < 0:
        raise ValueError("budget must be non-negative")
    indptr, indices = csr(g)

    def run(k, cap):
        status, sol, nodes = kernels.vertex_search(g.n, indptr, indices, k, cap)
        return status, tuple(sol), nodes

    # n - 1 deletions always suffice
    return _deepen(run, max(g.n - 1, 0), budget, node_cap, lambda: _greedy_vertex(g))


def ie_exact(g: Graph, budget: int | None = None, node_cap: int | None = None) -> OracleResult:
    """Minimum edge-irregulator of ``g``; the certificate lists ``(u, v)`` pairs."""
    if budget is not None and budget < 0:
        raise ValueError("budget must be non-negative")
    edges, indptr, indices, eids = edge_csr(g)
    eu = [u for u, _ in edges]
    ev = [v for _, v in edges]

    def run(k, cap):
        status, sol, nodes = kernels.edge_search(g.n, indptr, indices, eids, eu, ev, k, cap)
        return status, tuple(edges[i] for i in sol), nodes

    return _deepen(run, len(edges), budget, node_cap, lambda: _greedy_edge(g))


def _as_edges(g: Graph, s) -> list:
    out = []
    for e in s:
        if not (isinstance(e, Sequence) and len(e) == 2):
            raise GraphError(f"malformed edge {e!r}")
        u, v = int(e[0]), int(e[1])
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        out.append(norm_edge(u, v))
    if len(set(out)) != len(out):
        raise GraphError("repeated edge in certificate")
    return out


def verify_certificate(g: Graph, s, mode: str | None = None) -> bool:
    """True iff deleting ``s`` from ``g`` leaves a locally irregular graph.

    ``mode`` is ``"vertex"`` or ``"edge"``; by default it is inferred from
    the members (ints are vertices, pairs are edges).
    """
    s = list(s)
    if mode is None:
        if s and not isinstance(s[0], int):
            mode = "edge"
        else:
            mode = "vertex"
    if mode == "vertex":
        for v in s:
            if isinstance(v, bool) or not isinstance(v, int):
                raise GraphError(f"malformed vertex {v!r}")
        if len(set(s)) != len(s):
            raise GraphError("repeated vertex in certificate")
        h, _ = delete_vertices(g, s)
        return is_locally_irregular(h)
    if mode == "edge":
        return is_locally_irregular(delete_edges(g, _as_edges(g, s)))
    raise GraphError(f"unknown mode {mode!r}")
