"""Structural parameters: neighbourhood diversity, vertex integrity, cluster deletion."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, TwinPartition, VertexSet, connected_components, twin_partition


class ParameterTooLarge(ValueError):
    """The parameter exceeds the cap the caller is willing to search."""


@dataclass(frozen=True)
class ViSeparator:
    U: VertexSet
    k: int
    components: tuple[VertexSet, ...]

    def check(self, g: Graph) -> None:
        """Raise ``ValueError`` unless this separator is valid for ``g``."""
        if len(set(self.U)) != len(self.U) or any(not 0 <= u < g.n for u in self.U):
            raise ValueError("separator has unknown or repeated vertices")
        rest = [v for v in range(g.n) if v not in set(self.U)]
        comps = tuple(connected_components(g, within=rest))
        if tuple(sorted(self.components)) != comps:
            raise ValueError("components do not match the separator")
        if any(len(c) > self.k - len(self.U) for c in comps):
            raise ValueError("a component is larger than k - |U|")


@dataclass(frozen=True)
class CdSet:
    S: VertexSet
    cliques: tuple[VertexSet, ...]


def neighbourhood_diversity(g: Graph) -> tuple[int, TwinPartition]:
    part = twin_partition(g)
    return len(part), part


def components_without(g: Graph, removed) -> list[VertexSet]:
    removed = set(removed)
    return connected_components(g, within=[v for v in range(g.n) if v not in removed])


def vertex_integrity(g: Graph, cap: int | None = None) -> ViSeparator:
    """Minimum ``|U| + max component of G - U`` with its witness ``U``.

    Raises :class:`ParameterTooLarge` when the value exceeds ``cap``.
    """
    top = g.n if cap is None else min(cap, g.n)
    for k in range(top + 1):
        failed: set[frozenset[int]] = set()

        def search(U: list[int]):
            key = frozenset(U)
            if key in failed:
                return None
            comps = components_without(g, U)
            room = k - len(U)
            big = [c for c in comps if len(c) > room]
            if not big:
                return comps
            if room <= 0:
                failed.add(key)
                return None
            target = min(big, key=lambda c: (len(c), c[0]))
            for v in target:
                U.append(v)
                out = search(U)
                if out is not None:
                    return out
                U.pop()
            failed.add(key)
            return None

        U: list[int] = []
        comps = search(U)
        if comps is not None:
            return ViSeparator(tuple(sorted(U)), k, tuple(comps))
    raise ParameterTooLarge(f"vertex integrity exceeds cap {cap}")


def _find_p3(g: Graph, deleted: set[int]):
    for v in range(g.n):
        if v in deleted:
            continue
        nb = [x for x in g.adj[v] if x not in deleted]
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if not g.has_edge(u, w):
                    return u, v, w
    return None


def cluster_deletion_set(g: Graph, cap: int | None = None) -> CdSet:
    """Minimum vertex set whose removal leaves a disjoint union of cliques."""
    top = g.n if cap is None else min(cap, g.n)
    for k in range(top + 1):
        failed: set[frozenset[int]] = set()

        def search(S: list[int], b: int) -> bool:
            key = frozenset(S)
            if key in failed:
                return False
            p3 = _find_p3(g, set(S))
            if p3 is None:
                return True
            if b > 0:
                for x in p3:
                    S.append(x)
                    if search(S, b - 1):
                        return True
                    S.pop()
            failed.add(key)
            return False

        S: list[int] = []
        if search(S, k):
            return CdSet(tuple(sorted(S)), tuple(components_without(g, S)))
    raise ParameterTooLarge(f"cluster deletion number exceeds cap {cap}")
