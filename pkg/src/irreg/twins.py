"""Adjacent-twin kernelization for vertex-irregulators.

Deleting one vertex of an adjacent twin pair lowers the optimum by exactly
one, so the reduced graph plus the deletion count determines the answer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, VertexSet, delete_vertices, is_clique


@dataclass(frozen=True)
class ReductionTrace:
    reduced: Graph
    d: int
    removed_vertices: VertexSet
    kept: tuple[int, ...]  # kept[new_id] = original id

    def to_original(self, vertices: Iterable[int]) -> VertexSet:
        return tuple(sorted(self.kept[v] for v in vertices))


def _trace(g: Graph, removed: Iterable[int]) -> ReductionTrace:
    removed = tuple(sorted(removed))
    reduced, remap = delete_vertices(g, removed)
    kept = tuple(sorted(remap, key=remap.__getitem__))
    return ReductionTrace(reduced, len(removed), removed, kept)


def reduce_adjacent_twins(g: Graph) -> ReductionTrace:
    """Delete twins until no adjacent pair shares a closed neighbourhood.

    Each step takes the lexicographically smallest adjacent twin pair
    ``(u, v)`` and deletes ``v``.
    """
    closed = [set(g.adj[u]) | {u} for u in range(g.n)]
    alive = [True] * g.n
    heap = [(u, v) for u, v in g.edges() if closed[u] == closed[v]]
    heapq.heapify(heap)
    removed = []
    while heap:
        u, v = heapq.heappop(heap)
        if not (alive[u] and alive[v]) or closed[u] != closed[v]:
            continue
        alive[v] = False
        removed.append(v)
        nbrs = closed[v] - {v}
        for x in nbrs:
            closed[x].discard(v)
        # a fresh twin pair must have differed only in v, so one end is in N(v)
        for x in sorted(nbrs):
            for y in closed[x]:
                if y != x and closed[x] == closed[y]:
                    heapq.heappush(heap, (min(x, y), max(x, y)))
    return _trace(g, removed)


def shrink_clique_classes(g: Graph, cluster_components: Sequence[Sequence[int]]) -> ReductionTrace:
    """Within each listed clique keep one vertex per closed-neighbourhood class."""
    seen: set[int] = set()
    removed = []
    for comp in cluster_components:
        comp = sorted(comp)
        for v in comp:
            if not 0 <= v < g.n:
                raise GraphError(f"unknown vertex {v}")
            if v in seen:
                raise GraphError(f"vertex {v} listed in two components")
            seen.add(v)
        if not is_clique(g, comp):
            raise GraphError(f"component {tuple(comp)} does not induce a clique")
        groups: dict[tuple[int, ...], list[int]] = {}
        for v in comp:
            groups.setdefault(tuple(sorted(g.adj[v] + (v,))), []).append(v)
        for members in groups.values():
            removed.extend(members[1:])
    return _trace(g, removed)


def adjacent_twin_pairs(g: Graph) -> list[tuple[int, int]]:
    closed = [frozenset(g.adj[u] + (u,)) for u in range(g.n)]
    return [(u, v) for u, v in g.edges() if closed[u] == closed[v]]
