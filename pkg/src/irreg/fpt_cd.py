"""Vertex-irregulators parameterized by cluster deletion number.

Shrinking twins inside the cliques left by a cluster deletion set ``S``
bounds every clique by ``2^|S|``, so ``S`` becomes a vertex-integrity
separator of the reduced graph.
"""

from __future__ import annotations

from .fpt_vi import solve_iv_vi
from .graph import Graph
from .oracle import OracleResult
from .params import ViSeparator, cluster_deletion_set, components_without
from .twins import shrink_clique_classes


def solve_iv_cd(g: Graph) -> OracleResult:
    cd = cluster_deletion_set(g)
    trace = shrink_clique_classes(g, cd.cliques)
    h = trace.reduced
    new_id = {old: new for new, old in enumerate(trace.kept)}
    S = tuple(sorted(new_id[v] for v in cd.S))
    comps = tuple(components_without(h, S))
    limit = 1 << len(S)
    for c in comps:
        if len(c) > limit:
            raise AssertionError(f"clique of {len(c)} vertices survived shrinking (bound {limit})")
    sep = ViSeparator(S, len(S) + max((len(c) for c in comps), default=0), comps)
    res = solve_iv_vi(h, sep, cap=None)
    cert = tuple(sorted(trace.to_original(res.certificate) + trace.removed_vertices))
    return OracleResult(res.value + trace.d, cert, res.nodes_explored, False)
