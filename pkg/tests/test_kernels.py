import random
import subprocess
import sys

import pytest

from irreg import kernels
from irreg.diseq import compile_program
from irreg.graph import gnp_random_graph
from irreg.oracle import csr, edge_csr

from test_diseq import random_program

MODS = kernels.backends()


def test_python_backend_always_present():
    assert "python" in MODS
    assert kernels.BACKEND in MODS


def test_forced_fallback():
    out = subprocess.run([sys.executable, "-c", "from irreg import kernels; print(kernels.BACKEND)"],
                         env={"IRREG_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif("cython" not in MODS, reason="compiled kernels not built")
def test_backends_agree_on_searches():
    py, cy = MODS["python"], MODS["cython"]
    rng = random.Random(8)
    for _ in range(40):
        g = gnp_random_graph(rng.randint(3, 10), rng.random(), rng)
        indptr, indices = csr(g)
        for k in range(3):
            for cap in (5, 10**6):
                a = py.vertex_search(g.n, indptr, indices, k, cap)
                b = cy.vertex_search(g.n, indptr, indices, k, cap)
                assert (a[0], list(a[1]), a[2]) == (b[0], list(b[1]), b[2])
        edges, indptr, indices, eids = edge_csr(g)
        eu, ev = [u for u, _ in edges], [v for _, v in edges]
        for k in range(3):
            a = py.edge_search(g.n, indptr, indices, eids, eu, ev, k, 10**6)
            b = cy.edge_search(g.n, indptr, indices, eids, eu, ev, k, 10**6)
            assert (a[0], list(a[1]), a[2]) == (b[0], list(b[1]), b[2])


@pytest.mark.skipif("cython" not in MODS, reason="compiled kernels not built")
def test_backends_agree_on_programs(monkeypatch):
    rng = random.Random(9)
    for _ in range(200):
        p = random_program(rng)
        out = []
        for mod in (MODS["python"], MODS["cython"]):
            monkeypatch.setattr(kernels, "diseq_search", mod.diseq_search)
            out.append(compile_program(p).solve())
        assert out[0] == out[1]
