"""Simple undirected graphs over dense integer ids.

Graph values are immutable; every operation returns a new graph.  Vertex
sets are plain sorted tuples of ids and edge sets are sorted tuples of
``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

VertexSet = tuple[int, ...]
Edge = tuple[int, int]
EdgeSet = tuple[Edge, ...]


class GraphError(ValueError):
    """Malformed graph input or an operation on ids the graph does not have."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple undirected graph on vertices ``0 .. n-1``."""

    __slots__ = ("n", "adj", "_nbr_sets", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self._edges: EdgeSet | None = None

    # -- queries -----------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbours(self, u: int) -> frozenset[int]:
        return self._nbr_sets[u]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._nbr_sets[u]

    def edges(self) -> EdgeSet:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced by ``vertices``; returns it with the new->old id list."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph(len(keep), edges), keep

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- constructors -------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at id 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def gnp_random_graph(n: int, p: float, rng) -> Graph:
    """Erdős–Rényi G(n, p) drawn from a ``random.Random`` instance."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


# -- predicates and subgraph operations ----------------------------------------


def is_locally_irregular(g: Graph) -> bool:
    deg = g.degrees()
    return all(deg[u] != deg[v] for u, v in g.edges())


def conflict_edges(g: Graph) -> EdgeSet:
    """Edges whose endpoints have equal degree."""
    deg = g.degrees()
    return tuple((u, v) for u, v in g.edges() if deg[u] == deg[v])


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus ``s`` and the old->new id map of survivors."""
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex {v}")
    sub, keep = g.induced(v for v in range(g.n) if v not in removed)
    return sub, {old: new for new, old in enumerate(keep)}


def delete_edges(g: Graph, s: Iterable[Sequence[int]]) -> Graph:
    removed = set()
    for e in s:
        u, v = norm_edge(int(e[0]), int(e[1]))
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        removed.add((u, v))
    return Graph(g.n, [e for e in g.edges() if e not in removed])


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    """Components ordered by smallest member; optionally restricted to ``within``."""
    alive = [True] * g.n if within is None else [False] * g.n
    if within is not None:
        for v in within:
            alive[v] = True
    seen = [False] * g.n
    out: list[VertexSet] = []
    for s in range(g.n):
        if seen[s] or not alive[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if alive[w] and not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


# -- twins --------------------------------------------------------------------


class ClassKind(Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[VertexSet, ...]
    kinds: tuple[ClassKind, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}


def are_twins(g: Graph, u: int, v: int) -> bool:
    return g.neighbours(u) - {v} == g.neighbours(v) - {u}


def twin_partition(g: Graph) -> TwinPartition:
    """Maximal twin classes, ordered by smallest member.

    Adjacent twins share a closed neighbourhood, non-adjacent twins an open
    one; a vertex cannot have both kinds of twin, so the two groupings merge
    without conflict.
    """
    by_open: dict[tuple[int, ...], list[int]] = {}
    by_closed: dict[tuple[int, ...], list[int]] = {}
    for u in range(g.n):
        by_open.setdefault(g.adj[u], []).append(u)
        by_closed.setdefault(tuple(sorted(g.adj[u] + (u,))), []).append(u)
    cls_of = list(range(g.n))
    kinds: dict[int, ClassKind] = {}
    for group, kind in [(grp, ClassKind.INDEPENDENT) for grp in by_open.values()] + [
        (grp, ClassKind.CLIQUE) for grp in by_closed.values()
    ]:
        if len(group) > 1:
            for v in group:
                cls_of[v] = group[0]
            kinds[group[0]] = kind
    buckets: dict[int, list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(cls_of[v], []).append(v)
    classes = sorted(tuple(b) for b in buckets.values())
    return TwinPartition(
        classes=tuple(classes),
        kinds=tuple(kinds.get(c[0], ClassKind.INDEPENDENT) for c in classes),
    )
