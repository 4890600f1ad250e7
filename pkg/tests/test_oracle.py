import random

import pytest
from hypothesis import given

from irreg.graph import (Graph, GraphError, complete_bipartite, complete_graph, cycle_graph,
                         delete_vertices, gnp_random_graph, is_locally_irregular, petersen_graph)
from irreg.oracle import ie_exact, iv_exact, verify_certificate

from brute import ie_brute, iv_brute
from strategies import graphs

# frozen from tests/brute.py
PETERSEN_IV = 3
K33_IE = 3


def test_vertex_examples():
    assert iv_exact(cycle_graph(4)).value == 1
    assert iv_exact(complete_graph(3)).value == 2
    r = iv_exact(Graph(0))
    assert r.value == 0 and r.certificate == ()


def test_petersen_vertex():
    r = iv_exact(petersen_graph())
    assert r.value == PETERSEN_IV == iv_brute(petersen_graph())[0]
    assert verify_certificate(petersen_graph(), r.certificate, "vertex")


def test_edge_examples():
    assert ie_exact(complete_graph(3)).value == 1
    c4 = cycle_graph(4)
    assert ie_exact(c4).value == 2
    assert not any(verify_certificate(c4, [e]) for e in c4.edges())
    assert verify_certificate(c4, [(0, 1), (1, 2)])


def test_k33_edge():
    g = complete_bipartite(3, 3)
    assert ie_exact(g).value == K33_IE == ie_brute(g)[0]
    assert verify_certificate(g, [(0, 3), (0, 4), (0, 5)])


def test_verify_examples():
    assert verify_certificate(cycle_graph(4), [0], "vertex")
    assert verify_certificate(complete_graph(3), [(0, 1)], "edge")
    assert not verify_certificate(complete_graph(2), [])
    assert not verify_certificate(complete_graph(2), [], "edge")


def test_verify_rejects_malformed():
    g = cycle_graph(4)
    with pytest.raises(GraphError):
        verify_certificate(g, [7], "vertex")
    with pytest.raises(GraphError):
        verify_certificate(g, [(0, 2)], "edge")
    with pytest.raises(GraphError):
        verify_certificate(g, [0, 0], "vertex")
    with pytest.raises(GraphError):
        verify_certificate(g, [(0, 1, 2)], "edge")


def test_budget_failure_and_success():
    g = complete_graph(3)
    r = iv_exact(g, budget=1)
    assert r.value == 2 and r.certificate == () and not r.timed_out
    r = iv_exact(g, budget=5)
    assert r.value == 2 and verify_certificate(g, r.certificate)
    with pytest.raises(ValueError):
        ie_exact(g, budget=-1)


def test_node_cap_times_out_with_valid_certificate():
    g = petersen_graph()
    r = ie_exact(g, node_cap=5)
    assert r.timed_out
    assert verify_certificate(g, r.certificate, "edge")
    assert r.value <= len(r.certificate)


def test_node_cap_from_environment(monkeypatch):
    monkeypatch.setenv("IRREG_NODE_CAP", "3")
    assert iv_exact(petersen_graph()).timed_out
    monkeypatch.setenv("IRREG_NODE_CAP", "lots")
    with pytest.raises(GraphError):
        iv_exact(petersen_graph())


def test_deterministic():
    rng = random.Random(5)
    for _ in range(10):
        g = gnp_random_graph(9, 0.5, rng)
        assert iv_exact(g) == iv_exact(g)
        assert ie_exact(g) == ie_exact(g)


@given(graphs(max_n=7, max_m=12))
def test_vertex_matches_enumeration(g):
    r = iv_exact(g)
    assert r.value == iv_brute(g)[0]
    assert len(r.certificate) == r.value
    assert is_locally_irregular(delete_vertices(g, r.certificate)[0])
    assert (r.value == 0) == is_locally_irregular(g)


@given(graphs(max_n=7, max_m=12))
def test_edge_matches_enumeration(g):
    r = ie_exact(g)
    assert r.value == ie_brute(g)[0]
    assert verify_certificate(g, r.certificate, "edge")
    assert (r.value == 0) == is_locally_irregular(g)


@given(graphs(max_n=7, max_m=12))
def test_budgeted_answers_are_sound(g):
    opt = iv_exact(g).value
    for b in range(opt + 2):
        r = iv_exact(g, budget=b)
        if b >= opt:
            assert r.value == opt and verify_certificate(g, r.certificate, "vertex")
        else:
            assert r.value == b + 1 and r.certificate == ()
