"""Graphs whose interesting vertices and edges carry names."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Edge, Graph, GraphError, norm_edge


@dataclass
class LabeledGraph:
    graph: Graph
    vertices: dict[str, int] = field(default_factory=dict)
    edges: dict[str, Edge] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def v(self, name: str) -> int:
        return self.vertices[name]

    def e(self, name: str) -> Edge:
        return self.edges[name]

    def check(self) -> None:
        g = self.graph
        for name, x in self.vertices.items():
            if not 0 <= x < g.n:
                raise GraphError(f"named vertex {name} is not in the graph")
        for name, (a, b) in self.edges.items():
            if not g.has_edge(a, b):
                raise GraphError(f"named edge {name} is not in the graph")

    def name_map_lines(self) -> list[str]:
        out = [f"{k}\t{v}" for k, v in self.vertices.items()]
        out += [f"{k}\t{a}\t{b}" for k, (a, b) in self.edges.items()]
        return out


class Builder:
    """Accumulates vertices and edges before freezing into a :class:`LabeledGraph`."""

    def __init__(self):
        self.n = 0
        self.edge_list: list[Edge] = []
        self.vertices: dict[str, int] = {}
        self.edges: dict[str, Edge] = {}

    def add(self, name: str | None = None) -> int:
        x = self.n
        self.n += 1
        if name is not None:
            if name in self.vertices:
                raise GraphError(f"vertex name {name} used twice")
            self.vertices[name] = x
        return x

    def join(self, a: int, b: int, name: str | None = None) -> Edge:
        e = norm_edge(a, b)
        self.edge_list.append(e)
        if name is not None:
            self.edges[name] = e
        return e

    def leaves(self, centre: int, count: int) -> None:
        for _ in range(count):
            self.join(centre, self.add())

    def freeze(self, **meta) -> LabeledGraph:
        lg = LabeledGraph(Graph(self.n, self.edge_list), self.vertices, self.edges, dict(meta))
        lg.check()
        return lg
