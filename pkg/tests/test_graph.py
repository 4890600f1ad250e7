import pytest
from hypothesis import given, strategies as st

from irreg.graph import (ClassKind, Graph, GraphError, are_twins, complete_graph, conflict_edges,
                         connected_components, cycle_graph, delete_edges, delete_vertices,
                         disjoint_union, is_locally_irregular, path_graph, twin_partition)

from brute import twin_classes
from strategies import graphs

K2, P3, K3, C4 = complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(4)


def test_local_irregularity_examples():
    assert is_locally_irregular(P3)
    assert not is_locally_irregular(K2)
    assert not is_locally_irregular(C4)


def test_conflict_edges_examples():
    assert conflict_edges(P3) == ()
    assert conflict_edges(K2) == ((0, 1),)
    assert conflict_edges(C4) == C4.edges()
    assert len(conflict_edges(C4)) == 4


def test_delete_vertices():
    h, remap = delete_vertices(K3, [1])
    assert h == K2 and remap == {0: 0, 2: 1}
    assert delete_vertices(C4, [])[0] == C4
    h, _ = delete_vertices(C4, [0])
    assert h == path_graph(3)
    with pytest.raises(GraphError):
        delete_vertices(K3, [5])


def test_delete_edges():
    h = delete_edges(K3, [(0, 1)])
    assert sorted(h.degrees()) == [1, 1, 2]
    assert delete_edges(C4, []) == C4
    h = delete_edges(C4, [(0, 1), (1, 2)])
    assert h.degree(1) == 0 and h.m == 2
    assert connected_components(h) == [(0, 2, 3), (1,)]
    with pytest.raises(GraphError):
        delete_edges(C4, [(0, 2)])


def test_twin_partition_examples():
    p = twin_partition(K3)
    assert p.classes == ((0, 1, 2),) and p.kinds == (ClassKind.CLIQUE,)
    p = twin_partition(C4)
    assert p.classes == ((0, 2), (1, 3))
    assert p.kinds == (ClassKind.INDEPENDENT, ClassKind.INDEPENDENT)
    assert twin_partition(P3).classes == ((0, 2), (1,))


def test_components_examples():
    assert connected_components(K3) == [(0, 1, 2)]
    assert connected_components(disjoint_union(K2, Graph(1))) == [(0, 1), (2,)]
    assert connected_components(Graph(3)) == [(0,), (1,), (2,)]


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


@given(graphs(max_n=8), st.data())
def test_vertex_deletion_matches_definition(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    h, remap = delete_vertices(g, s)
    assert h.n == g.n - len(s)
    for u, v in g.edges():
        if u not in s and v not in s:
            assert h.has_edge(remap[u], remap[v])
    assert h.m == sum(1 for u, v in g.edges() if u not in s and v not in s)


@given(graphs(max_n=8), st.data())
def test_edge_deletion_degrees(g, data):
    s = data.draw(st.sets(st.sampled_from(g.edges()))) if g.m else set()
    h = delete_edges(g, s)
    for u in range(g.n):
        assert h.degree(u) == g.degree(u) - sum(1 for e in s if u in e)


@given(graphs(max_n=8))
def test_conflicts_empty_iff_irregular(g):
    assert (conflict_edges(g) == ()) == is_locally_irregular(g)


@given(graphs(max_n=8))
def test_twin_partition_is_the_twin_relation(g):
    p = twin_partition(g)
    assert sorted(p.classes) == twin_classes(g)
    where = p.class_of()
    for u in range(g.n):
        assert are_twins(g, u, u)
        for v in range(g.n):
            assert are_twins(g, u, v) == (where[u] == where[v])
    for cls, kind in zip(p.classes, p.kinds):
        if len(cls) > 1:
            adjacent = g.has_edge(cls[0], cls[1])
            assert kind == (ClassKind.CLIQUE if adjacent else ClassKind.INDEPENDENT)
            assert all(g.has_edge(a, b) == adjacent for a in cls for b in cls if a != b)
