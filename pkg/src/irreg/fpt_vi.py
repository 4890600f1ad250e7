"""Irregulators parameterized by vertex integrity.

With a separator ``U`` whose removal leaves only small components, guess
which part of ``U`` is deleted (vertex mode) or which edges inside ``U``
are deleted (edge mode).  Components are grouped into types (isomorphism
classes fixing the kept separator pointwise) and every way of deleting
inside a representative is a sub-type.  A counting program then decides
how many components of each type use each sub-type, so that no edge is
left between equal degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Sequence

from . import diseq
from .graph import Graph, GraphError
from .oracle import OracleResult, ie_exact
from .params import ParameterTooLarge, ViSeparator, vertex_integrity

DEFAULT_VI_CAP = 12
# total sub-types above which the literal enumeration is refused
LITERAL_S1_LIMIT = 14


@dataclass
class ComponentType:
    key: tuple
    members: list[int] = field(default_factory=list)
    orders: list[tuple[int, ...]] = field(default_factory=list)
    size: int = 0
    edges: tuple[tuple[int, int], ...] = ()     # position pairs a < b
    attach: tuple[tuple[int, ...], ...] = ()    # separator vertices per position

    @property
    def no(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SubType:
    cost: int
    deleted: tuple  # positions in vertex mode, edge keys in edge mode
    b: tuple[int, ...]
    pairs: frozenset  # (separator vertex, degree) that must differ
    d: tuple[int | None, ...] = ()


# -- typing ---------------------------------------------------------------------


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _structure(g: Graph, comp: Sequence[int], sep_pos: dict[int, int]):
    local = {v: i for i, v in enumerate(comp)}
    nbrs = [[local[w] for w in g.adj[v] if w in local] for v in comp]
    att = [sum(1 << sep_pos[w] for w in g.adj[v] if w in sep_pos) for v in comp]
    return nbrs, att


def _encode(order: Sequence[int], nbrs, att):
    pos = {v: i for i, v in enumerate(order)}
    bits = []
    for i, v in enumerate(order):
        row = 0
        for w in nbrs[v]:
            if pos[w] > i:
                row |= 1 << pos[w]
        bits.append(row)
    return tuple(att[v] for v in order), tuple(bits)


def canonical_order(g: Graph, comp: Sequence[int], sep_pos: dict[int, int]):
    """Least encoding of ``comp`` over orderings that respect refined colours.

    Returns ``(key, order)`` where ``order`` lists the component's vertices
    in canonical position order.
    """
    comp = list(comp)
    nbrs, att = _structure(g, comp, sep_pos)
    c = len(comp)
    col = _rank([(att[i], len(nbrs[i])) for i in range(c)])
    while True:
        new = _rank([(col[i], tuple(sorted(col[j] for j in nbrs[i]))) for i in range(c)])
        if len(set(new)) == len(set(col)):
            col = new
            break
        col = new
    cells: list[list[int]] = []
    for colour in sorted(set(col)):
        cells.append([i for i in range(c) if col[i] == colour])
    best = None
    best_order = None
    for parts in product(*(permutations(cell) for cell in cells)):
        order = [i for part in parts for i in part]
        enc = _encode(order, nbrs, att)
        if best is None or enc < best:
            best, best_order = enc, order
    return (c, tuple(sorted(col)), best), tuple(comp[i] for i in best_order)


def component_types(g: Graph, separator_kept: Sequence[int], components: Sequence[Sequence[int]],
                    max_size: int | None = None) -> list[ComponentType]:
    """Group components by their attachment to the kept separator."""
    sep = sorted(separator_kept)
    sep_pos = {u: i for i, u in enumerate(sep)}
    coarse: dict[tuple, list[int]] = {}
    for j, comp in enumerate(components):
        if max_size is not None and len(comp) > max_size:
            raise GraphError(f"component {tuple(comp)} has more than {max_size} vertices")
        nbrs, att = _structure(g, comp, sep_pos)
        coarse.setdefault((len(comp), tuple(sorted((a, len(nb)) for a, nb in zip(att, nbrs)))), []).append(j)
    by_key: dict[tuple, ComponentType] = {}
    types: list[ComponentType] = []
    for group in coarse.values():
        for j in group:
            comp = sorted(components[j])
            if len(group) == 1:
                key, order = ("single", j), tuple(comp)
            else:
                key, order = canonical_order(g, comp, sep_pos)
            t = by_key.get(key)
            if t is None:
                pos = {v: i for i, v in enumerate(order)}
                edges = tuple(sorted((min(pos[v], pos[w]), max(pos[v], pos[w]))
                                     for v in order for w in g.adj[v] if w in pos and pos[v] < pos[w]))
                attach = tuple(tuple(w for w in g.adj[v] if w in sep_pos) for v in order)
                t = ComponentType(key, size=len(order), edges=edges, attach=attach)
                by_key[key] = t
                types.append(t)
            t.members.append(j)
            t.orders.append(order)
    types.sort(key=lambda t: t.members[0])
    return types


def check_type_bijection(g: Graph, sep_kept: Sequence[int], a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether position-wise ``a[i] -> b[i]`` fixes ``sep_kept`` and preserves adjacency."""
    f = dict(zip(a, b))
    for u in sep_kept:
        f[u] = u
    dom = list(a) + list(sep_kept)
    for x in dom:
        for y in dom:
            if x != y and g.has_edge(x, y) != g.has_edge(f[x], f[y]):
                return False
    return len(set(b)) == len(b) == len(a)


# -- sub-types ------------------------------------------------------------------


def _dedupe(subs: list[SubType]) -> list[SubType]:
    """Drop sub-types another one dominates (same b, no extra pairs, no dearer)."""
    subs = sorted(subs, key=lambda s: (s.cost, len(s.pairs)))
    kept: list[SubType] = []
    by_b: dict[tuple, list[SubType]] = {}
    for s in subs:
        rivals = by_b.setdefault(s.b, [])
        if any(r.cost <= s.cost and r.pairs <= s.pairs for r in rivals):
            continue
        rivals.append(s)
        kept.append(s)
    return kept


def vertex_subtypes(t: ComponentType, sep: Sequence[int]) -> list[SubType]:
    c = t.size
    adj = [[] for _ in range(c)]
    for a, b in t.edges:
        adj[a].append(b)
        adj[b].append(a)
    out = []
    for mask in sorted(range(1 << c), key=lambda m: (bin(m).count("1"), m)):
        alive = [not (mask >> i & 1) for i in range(c)]
        d = [sum(alive[w] for w in adj[i]) + len(t.attach[i]) if alive[i] else None for i in range(c)]
        if any(alive[a] and alive[b] and d[a] == d[b] for a, b in t.edges):
            continue
        b_vec = tuple(sum(1 for i in range(c) if alive[i] and u in t.attach[i]) for u in sep)
        pairs = frozenset((u, d[i]) for i in range(c) if alive[i] for u in t.attach[i])
        deleted = tuple(i for i in range(c) if not alive[i])
        out.append(SubType(len(deleted), deleted, b_vec, pairs, tuple(d)))
    return _dedupe(out)


def edge_subtypes(t: ComponentType, sep: Sequence[int], max_cost: int | None = None) -> list[SubType]:
    """Sub-types by deleted incident edges, cheapest first, costing below ``max_cost``."""
    c = t.size
    pool = [("c", a, b) for a, b in t.edges] + [("s", i, u) for i in range(c) for u in t.attach[i]]
    has_attach = any(t.attach)
    if not has_attach:
        return _isolated_edge_subtype(t.size, t.edges, max_cost, len(sep))
    top = len(pool) if max_cost is None else min(len(pool), max_cost - 1)
    out = []
    for size in range(top + 1):
        for gone in combinations(range(len(pool)), size):
            dead = set(gone)
            live = [pool[x] for x in range(len(pool)) if x not in dead]
            deg = [0] * c
            for kind, a, b in live:
                deg[a] += 1
                if kind == "c":
                    deg[b] += 1
            if any(kind == "c" and deg[a] == deg[b] for kind, a, b in live):
                continue
            b_vec = tuple(sum(1 for kind, _, w in live if kind == "s" and w == u) for u in sep)
            pairs = frozenset((w, deg[a]) for kind, a, w in live if kind == "s")
            out.append(SubType(size, tuple(pool[x] for x in gone), b_vec, pairs, tuple(deg)))
    return _dedupe(out)


@lru_cache(maxsize=256)
def _isolated_edge_subtype(c: int, edges: tuple, max_cost: int | None, width: int) -> list[SubType]:
    # nothing outside sees this component, so its cheapest irregulator is all that matters
    r = ie_exact(Graph(c, edges), budget=None if max_cost is None else max_cost - 1)
    if r.timed_out or (max_cost is not None and r.value >= max_cost):
        return []
    gone = set(r.certificate)
    deg = [0] * c
    for a, b in edges:
        if (a, b) not in gone:
            deg[a] += 1
            deg[b] += 1
    return [SubType(r.value, tuple(("c", a, b) for a, b in r.certificate), (0,) * width,
                    frozenset(), tuple(deg))]


# -- the counting program --------------------------------------------------------


def build_program(types: list[ComponentType], subs: list[list[SubType]], sep: Sequence[int],
                  base: dict[int, int], sep_edges: Sequence[tuple[int, int]],
                  chosen: list[list[int]] | None = None, free_edges: Sequence[tuple[int, int]] = ()):
    """Counting program.

    Returns ``(program, where, c5, c6)``: ``where[var]`` is the
    ``(type, sub-type)`` a variable counts, ``c5`` maps each separator edge
    to its disequality and ``c6`` lists ``(index, u, d)`` for the
    component-side ones.  With ``chosen`` only those sub-types get
    variables, each used at least once and with unconditional constraints.

    Each of ``free_edges`` gets a 0/1 variable saying whether it is kept;
    deleting it costs one, so the objective is off by ``len(free_edges)``.
    Those variables come after the counting ones and ``where`` does not
    list them.
    """
    p = diseq.DiseqProgram()
    where = []
    for i, t in enumerate(types):
        idx = range(len(subs[i])) if chosen is None else chosen[i]
        # dearest first: the search tries zero first, so early leaves are cheap
        for q in sorted(idx, key=lambda q: (-subs[i][q].cost, q)):
            lo = 0 if chosen is None else 1
            where.append((i, q))
            p.add_var(f"no_{i}_{q}", lo, t.no)
    sep_pos = {u: k for k, u in enumerate(sep)}
    deg = {u: {} for u in sep}
    for var, (i, q) in enumerate(where):
        for u, k in sep_pos.items():
            bu = subs[i][q].b[k]
            if bu:
                deg[u][var] = bu
    per_type: dict[int, dict[int, int]] = {i: {} for i in range(len(types))}
    for var, (i, q) in enumerate(where):
        per_type[i][var] = 1
    for i, t in enumerate(types):
        p.add_eq(per_type[i], t.no)
    keep = {}
    for u, v in free_edges:
        x = p.add_var(f"keep_{u}_{v}", 0, 1)
        keep[(u, v)] = x
        deg[u][x] = 1
        deg[v][x] = 1
    c5 = {}
    for u, v in sep_edges:
        c5[(u, v)] = len(p.disequalities)
        p.add_ne(deg[u], deg[v], base[u], base[v])
    for (u, v), x in keep.items():
        p.add_ne(deg[u], deg[v], base[u], base[v], when=x)
    c6 = []
    for var, (i, q) in enumerate(where):
        for u, dv in sorted(subs[i][q].pairs):
            c6.append((len(p.disequalities), u, dv))
            p.add_ne(deg[u], {}, base[u], dv, when=None if chosen is not None else var)
    obj = {var: subs[i][q].cost for var, (i, q) in enumerate(where) if subs[i][q].cost}
    obj.update({x: -1 for x in keep.values()})
    p.set_objective("min", obj)
    return p, where, c5, c6


class CountingTemplate:
    """One compiled counting program reused across guesses.

    Guesses may only change separator degrees and drop separator edges.
    """

    def __init__(self, types, subs, sep, sep_edges):
        p, self.where, self.c5, self.c6 = build_program(types, subs, sep, {u: 0 for u in sep}, sep_edges)
        self.compiled = diseq.compile_program(p)

    def run(self, base: dict[int, int], dropped, cutoff):
        consts = {k: base[u] - base[v] for (u, v), k in self.c5.items()}
        for k, u, dv in self.c6:
            consts[k] = base[u] - dv
        sol = self.compiled.solve(cutoff, consts, {self.c5[e] for e in dropped})
        if not sol.feasible:
            return None, sol.nodes
        return (sol.objective_value, dict(zip(self.where, sol.assignment))), sol.nodes


def _solve_counts(types, subs, sep, base, sep_edges, cutoff, literal_s1):
    """Best sub-type counts strictly under ``cutoff``: ``(cost, counts, nodes)`` or None."""
    if not literal_s1:
        return CountingTemplate(types, subs, sep, sep_edges).run(base, (), cutoff)
    total = sum(len(s) for s in subs)
    if total > LITERAL_S1_LIMIT:
        raise ValueError(f"literal sub-type enumeration refused: {total} sub-types")
    best = None
    nodes = 0
    flat = [(i, q) for i in range(len(types)) for q in range(len(subs[i]))]
    for mask in range(1, 1 << len(flat)):
        chosen = [[] for _ in types]
        for x, (i, q) in enumerate(flat):
            if mask >> x & 1:
                chosen[i].append(q)
        if any(not ch or len(ch) > t.no for ch, t in zip(chosen, types)):
            continue
        p, where, _, _ = build_program(types, subs, sep, base, sep_edges, chosen)
        bound = cutoff if best is None else min(cutoff, best[0]) if cutoff is not None else best[0]
        sol = diseq.solve(p, cutoff=bound)
        nodes += sol.nodes
        if sol.feasible and (best is None or sol.objective_value < best[0]):
            best = (sol.objective_value, dict(zip(where, sol.assignment)))
    return best, nodes


def _assign(types, subs, counts):
    """Per type, the sub-type index each member component receives."""
    plan = []
    for i, t in enumerate(types):
        seq = []
        for q in range(len(subs[i])):
            seq.extend([q] * counts.get((i, q), 0))
        assert len(seq) == t.no
        plan.append(seq)
    return plan


def _separator(g: Graph, sep: ViSeparator | None, cap: int | None) -> ViSeparator:
    if sep is None:
        return vertex_integrity(g, cap)
    try:
        sep.check(g)
    except ValueError as exc:
        raise GraphError(f"invalid separator: {exc}") from None
    if cap is not None and sep.k > cap:
        raise ParameterTooLarge(f"separator has k={sep.k} above cap {cap}")
    return sep


def solve_iv_vi(g: Graph, sep: ViSeparator | None = None, cap: int | None = DEFAULT_VI_CAP,
                literal_s1: bool = False) -> OracleResult:
    """Minimum vertex-irregulator using a vertex-integrity separator."""
    sep = _separator(g, sep, cap)
    U = list(sep.U)
    comps = [list(c) for c in sep.components]
    best = None
    nodes = 0
    for size in range(len(U) + 1):
        if best is not None and size >= best[0]:
            break
        for gone in combinations(U, size):
            kept = [u for u in U if u not in gone]
            kset = set(kept)
            types = component_types(g, kept, comps)
            subs = [vertex_subtypes(t, kept) for t in types]
            base = {u: sum(1 for w in g.adj[u] if w in kset) for u in kept}
            sep_edges = [(u, w) for u in kept for w in g.adj[u] if u < w and w in kset]
            cutoff = None if best is None else best[0] - size
            found, n = _solve_counts(types, subs, kept, base, sep_edges, cutoff, literal_s1)
            nodes += n + 1
            if found is None:
                continue
            cost, counts = found
            if best is None or size + cost < best[0]:
                cert = list(gone)
                for i, seq in enumerate(_assign(types, subs, counts)):
                    for order, q in zip(types[i].orders, seq):
                        cert.extend(order[pos] for pos in subs[i][q].deleted)
                best = (size + cost, tuple(sorted(cert)))
    assert best is not None
    return OracleResult(best[0], best[1], nodes, False)


def solve_ie_vi(g: Graph, sep: ViSeparator | None = None, cap: int | None = DEFAULT_VI_CAP,
                literal_s1: bool = False) -> OracleResult:
    """Minimum edge-irregulator using a vertex-integrity separator.

    Deepens on the answer ``T``; only sub-types costing at most ``T`` exist.
    Which separator edges go is decided by 0/1 variables inside the counting
    program.  With ``literal_s1`` the deleted separator edges are guessed
    one set at a time instead and every choice of used sub-types gets its
    own program.
    """
    sep = _separator(g, sep, cap)
    U = list(sep.U)
    uset = set(U)
    comps = [list(c) for c in sep.components]
    inner = [(u, w) for u in U for w in g.adj[u] if u < w and w in uset]
    types = component_types(g, U, comps)
    nodes = 0
    for T in range(g.m + 1):
        subs = [edge_subtypes(t, U, max_cost=T + 1) for t in types]
        if literal_s1:
            found = _guess_inner(types, subs, U, inner, T)
        else:
            found = _free_inner(types, subs, U, inner, T)
        if found[0] is None:
            nodes += found[1]
            continue
        (fs, gone, cost, counts), n = found
        nodes += n
        cert = list(gone)
        for i, seq in enumerate(_assign(types, fs, counts)):
            for order, q in zip(types[i].orders, seq):
                for kind, a, b in fs[i][q].deleted:
                    x = order[a]
                    y = order[b] if kind == "c" else b
                    cert.append((min(x, y), max(x, y)))
        return OracleResult(cost, tuple(sorted(cert)), nodes, False)
    raise AssertionError("deleting every edge always works")


def _free_inner(types, subs, U, inner, T):
    fs = [[st for st in sub if st.cost <= T] for sub in subs]
    p, where, _, _ = build_program(types, fs, U, {u: 0 for u in U}, (), free_edges=inner)
    sol = diseq.solve(p, cutoff=T + 1 - len(inner))
    if not sol.feasible:
        return None, sol.nodes
    counts = dict(zip(where, sol.assignment))
    kept = sol.assignment[len(where):]
    gone = [e for e, k in zip(inner, kept) if k == 0]
    return (fs, gone, sol.objective_value + len(inner), counts), sol.nodes


def _guess_inner(types, subs, U, inner, T):
    nodes = 0
    for size in range(min(T, len(inner)) + 1):
        fs = [[st for st in sub if st.cost <= T - size] for sub in subs]
        for gone in combinations(inner, size):
            gset = set(gone)
            sep_edges = [e for e in inner if e not in gset]
            base = {u: 0 for u in U}
            for u, w in sep_edges:
                base[u] += 1
                base[w] += 1
            found, n = _solve_counts(types, fs, U, base, sep_edges, T - size + 1, True)
            nodes += n + 1
            if found is not None:
                cost, counts = found
                return (fs, list(gone), size + cost, counts), nodes
    return None, nodes
