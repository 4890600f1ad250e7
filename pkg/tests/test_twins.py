import pytest
from hypothesis import given

from irreg.graph import (GraphError, complete_graph, cycle_graph, delete_vertices, disjoint_union,
                         path_graph)
from irreg.oracle import iv_exact
from irreg.params import cluster_deletion_set
from irreg.twins import adjacent_twin_pairs, reduce_adjacent_twins, shrink_clique_classes

from brute import iv_brute
from strategies import graphs


def test_reduce_examples():
    t = reduce_adjacent_twins(complete_graph(3))
    assert t.reduced.n == 1 and t.d == 2
    t = reduce_adjacent_twins(cycle_graph(4))
    assert t.reduced == cycle_graph(4) and t.d == 0
    t = reduce_adjacent_twins(complete_graph(4))
    assert t.reduced.n == 1 and t.d == 3


def test_shrink_examples():
    t = shrink_clique_classes(complete_graph(5), [range(5)])
    assert t.reduced.n == 1 and t.d == 4
    p3 = path_graph(3)
    t = shrink_clique_classes(p3, [[1, 2]])
    assert t.reduced == p3 and t.d == 0


def test_shrink_two_triangles():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    t = shrink_clique_classes(g, [[0, 1, 2], [3, 4, 5]])
    assert t.reduced.n == 2 and t.reduced.m == 0 and t.d == 4
    assert iv_exact(g).value == iv_exact(t.reduced).value + t.d == iv_brute(g)[0]


def test_shrink_rejects_non_clique():
    with pytest.raises(GraphError):
        shrink_clique_classes(path_graph(3), [[0, 1, 2]])
    with pytest.raises(GraphError):
        shrink_clique_classes(complete_graph(3), [[0, 1], [1, 2]])


def test_trace_maps_back():
    g = disjoint_union(path_graph(3), complete_graph(3))
    t = reduce_adjacent_twins(g)
    assert t.removed_vertices == (4, 5)
    assert t.to_original(range(t.reduced.n)) == (0, 1, 2, 3)


@given(graphs(max_n=8))
def test_reduction_preserves_optimum(g):
    t = reduce_adjacent_twins(g)
    assert iv_brute(g)[0] == iv_brute(t.reduced)[0] + t.d
    assert adjacent_twin_pairs(t.reduced) == []


@given(graphs(max_n=8))
def test_reduction_idempotent(g):
    t = reduce_adjacent_twins(g)
    again = reduce_adjacent_twins(t.reduced)
    assert again.d == 0 and again.reduced == t.reduced


@given(graphs(max_n=8))
def test_single_twin_step(g):
    # one deletion of an adjacent twin lowers the optimum by exactly one
    pairs = adjacent_twin_pairs(g)
    if pairs:
        u, v = pairs[0]
        assert iv_exact(g).value == iv_exact(delete_vertices(g, [v])[0]).value + 1


@given(graphs(max_n=8))
def test_shrink_is_induced_and_local(g):
    cd = cluster_deletion_set(g)
    t = shrink_clique_classes(g, cd.cliques)
    assert t.reduced == delete_vertices(g, t.removed_vertices)[0]
    comp_of = {v: i for i, c in enumerate(cd.cliques) for v in c}
    for v in t.removed_vertices:
        # a removed vertex has a surviving closed twin in its own clique
        mates = [w for w in t.kept if comp_of.get(w) == comp_of[v]
                 and set(g.neighbours(w)) | {w} == set(g.neighbours(v)) | {v}]
        assert mates
