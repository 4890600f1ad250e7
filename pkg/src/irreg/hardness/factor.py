"""Edge-irregulator instances from general factor.

Vertex ``u_i`` of ``H`` is raised to degree ``2 i N^4`` by hanging trees on
it.  For every forbidden degree ``a`` of ``u_i`` one tree has a root of
degree ``2 i N^4 - (d_H(u_i) - a)``, which is exactly the degree ``u_i``
reaches if the deletion leaves it at ``a`` in ``H``.  The roots are padded
by stars so that the trees themselves are already locally irregular.

``N`` defaults to ``|V(H)|``; a smaller ``scale`` keeps the instance small
and the forward direction still holds as long as the checks in
:func:`check_scale` pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..graph import EdgeSet, Graph, GraphError, norm_edge
from .labeled import Builder, LabeledGraph

DEFAULT_MAX_VERTICES = 2_000_000


class GfError(ValueError):
    pass


@dataclass(frozen=True)
class GfInstance:
    graph: Graph
    lists: tuple[frozenset[int], ...]

    def __init__(self, graph: Graph, lists: Iterable[Iterable[int]]):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "lists", tuple(frozenset(int(x) for x in l) for l in lists))
        self.validate()

    def validate(self) -> None:
        g = self.graph
        if len(self.lists) != g.n:
            raise GfError(f"{len(self.lists)} lists for {g.n} vertices")
        top = g.max_degree()
        for u, l in enumerate(self.lists):
            bad = [x for x in l if not 0 <= x <= top]
            if bad:
                raise GfError(f"list of vertex {u} has {sorted(bad)} outside 0..{top}")

    def forbidden(self, u: int) -> list[int]:
        out = [a for a in range(self.graph.degree(u) + 1) if a not in self.lists[u]]
        return out or [-1]

    def is_factor(self, s: Iterable[Sequence[int]]) -> bool:
        s = {norm_edge(*e) for e in s}
        g = self.graph
        if not all(g.has_edge(*e) for e in s):
            return False
        deg = g.degrees()
        for a, b in s:
            deg[a] -= 1
            deg[b] -= 1
        return all(deg[u] in self.lists[u] for u in range(g.n))


def _plan(inst: GfInstance, N: int):
    """Per vertex: target degree, the (a_j, d_ij) trees, and the extra copy count."""
    g = inst.graph
    out = []
    for u in range(g.n):
        i = u + 1
        target = 2 * i * N ** 4
        trees = []
        for a in inst.forbidden(u):
            d = target - (g.degree(u) - a)
            trees.append((a, d))
        extra = target - g.degree(u) - len(trees)
        out.append((target, trees, extra))
    return out


def tree_size(d: int, N: int) -> int:
    n2 = N * N
    q = d - 1 - n2 * n2
    return 1 + n2 * sum(d - k - 1 for k in range(n2)) + q * (d - n2)


def estimate_vertices(inst: GfInstance, scale: int | None = None) -> int:
    N = inst.graph.n if scale is None else scale
    total = inst.graph.n
    for _, trees, extra in _plan(inst, N):
        total += sum(tree_size(d, N) for _, d in trees)
        total += extra * tree_size(trees[0][1], N)
    return total


def check_scale(inst: GfInstance, N: int) -> None:
    """Raise unless every degree separation the construction relies on holds at ``N``."""
    g = inst.graph
    n2 = N * N
    if N < 2:
        raise GfError("scale must be at least 2")
    if 2 * N ** 4 <= g.max_degree():
        raise GfError(f"2 N^4 = {2 * N ** 4} does not exceed the maximum degree {g.max_degree()}")
    for u, (_, trees, extra) in enumerate(_plan(inst, N)):
        if extra < 0:
            raise GfError(f"u_{u + 1} needs {-extra} fewer trees than there are forbidden degrees")
        for a, d in trees:
            if d - 1 - n2 * n2 < 0:
                raise GfError(f"tree for u_{u + 1}, degree {a}: root degree {d} below N^4 + 1")
            if d - n2 < 2:
                raise GfError(f"tree for u_{u + 1}, degree {a}: star centres would be leaves")


def _tree(bld: Builder, d: int, N: int, name: str) -> int:
    n2 = N * N
    root = bld.add(name)
    sizes = [d - k for k in range(n2) for _ in range(n2)] + [d - n2 + 1] * (d - 1 - n2 * n2)
    for t in sizes:
        # star on t vertices with one leaf being the root
        c = bld.add()
        bld.join(root, c)
        bld.leaves(c, t - 2)
    return root


def gen_from_general_factor(inst: GfInstance, scale: int | None = None,
                            max_vertices: int | None = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    inst.validate()
    g = inst.graph
    N = g.n if scale is None else int(scale)
    check_scale(inst, N)
    size = estimate_vertices(inst, N)
    if max_vertices is not None and size > max_vertices:
        raise GfError(f"instance would have {size} vertices, above the limit {max_vertices}")
    bld = Builder()
    for u in range(g.n):
        bld.add(f"u_{u + 1}")
    for a, b in g.edges():
        bld.join(a, b, f"h_{a + 1},{b + 1}")
    forbidden = {}
    for u, (_, trees, extra) in enumerate(_plan(inst, N)):
        i = u + 1
        forbidden[i] = [a for a, _ in trees]
        for j, (a, d) in enumerate(trees, 1):
            bld.join(u, _tree(bld, d, N, f"u_{i},{j}"))
        for c in range(1, extra + 1):
            bld.join(u, _tree(bld, trees[0][1], N, f"u_{i},1#{c}"))
    lg = bld.freeze(kind="genfactor", scale=N, forbidden=forbidden)
    assert lg.graph.n == size
    return lg


def witness_from_factor(inst: GfInstance, lg: LabeledGraph, s: Iterable[Sequence[int]]) -> EdgeSet:
    """The factor's deletion set itself, as edges of the embedded copy of ``H``."""
    s = sorted({norm_edge(*e) for e in s})
    if not inst.is_factor(s):
        raise GfError("not a general factor of the instance")
    for a, b in s:
        if not lg.graph.has_edge(a, b):
            raise GraphError(f"edge ({a}, {b}) missing from the generated graph")
    return tuple(s)


def degree_violations(inst: GfInstance, lg: LabeledGraph) -> list[str]:
    g = lg.graph
    N = lg.meta["scale"]
    bad = []
    for u in range(inst.graph.n):
        i = u + 1
        want = 2 * i * N ** 4
        if g.degree(lg.v(f"u_{i}")) != want:
            bad.append(f"u_{i} has degree {g.degree(lg.v(f'u_{i}'))}, want {want}")
        dh = inst.graph.degree(u)
        for j, a in enumerate(lg.meta["forbidden"][i], 1):
            root = lg.v(f"u_{i},{j}")
            if g.degree(root) != want - (dh - a):
                bad.append(f"u_{i},{j} has degree {g.degree(root)}, want {want - (dh - a)}")
    return bad
