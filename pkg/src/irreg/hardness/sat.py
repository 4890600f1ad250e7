"""Edge-irregulator instances from 3-CNF formulas.

Every variable gets a 24-vertex gadget between its positive side ``v_i``
and its negative side ``v'_i``; every clause is a 5-vertex star with one
leaf ``c_j`` joined to the literal vertices of the clause.  A satisfying
assignment gives an edge-irregulator of exactly three edges per variable.

Two gadget wirings ship.  ``"figure"`` is the drawing as published.  Its
three-edge deletion sets do not verify: on the true side ``u_7`` drops to
the degree of its three children, on the false side ``v_i`` drops to 3
next to clause vertices that may also sit at 3.  The default
``"repaired"`` wiring keeps the interface, the degree identities and the
vertex count, and both deletion sets verify on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from ..graph import EdgeSet, norm_edge
from .labeled import Builder, LabeledGraph


class CnfError(ValueError):
    """Formula outside the supported normal form."""


@dataclass(frozen=True)
class Cnf3:
    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, clauses: Iterable[Sequence[int]]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "clauses", tuple(tuple(int(l) for l in c) for c in clauses))
        self.validate()

    def validate(self) -> None:
        if self.n < 1:
            raise CnfError("need at least one variable")
        pos = [0] * (self.n + 1)
        neg = [0] * (self.n + 1)
        for j, c in enumerate(self.clauses, 1):
            if not 1 <= len(c) <= 3:
                raise CnfError(f"clause {j} has {len(c)} literals")
            if len(set(c)) != len(c):
                raise CnfError(f"clause {j} repeats a literal")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise CnfError(f"clause {j}: literal {lit} out of range")
                (pos if lit > 0 else neg)[abs(lit)] += 1
        for i in range(1, self.n + 1):
            if pos[i] != 2 or neg[i] != 1:
                raise CnfError(f"x{i} occurs {pos[i]}x positively and {neg[i]}x negatively, "
                               "need 2 and 1")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.n:
            raise CnfError(f"assignment has {len(assignment)} values for {self.n} variables")
        return all(any(bool(assignment[abs(l) - 1]) == (l > 0) for l in c) for c in self.clauses)

    def satisfying_assignments(self):
        for a in product((False, True), repeat=self.n):
            if self.satisfied_by(a):
                yield a

    def is_satisfiable(self) -> bool:
        return next(self.satisfying_assignments(), None) is not None


def normal_form_formulas(n: int, exact: bool = False):
    """Every normal-form formula on ``n`` variables, up to clause order.

    With ``exact`` only formulas whose clauses have three literals each are
    produced.
    """
    lits = []
    for i in range(1, n + 1):
        lits += [i, i, -i]
    seen = set()

    def rec(k, blocks):
        if k == len(lits):
            key = tuple(sorted(tuple(sorted(b)) for b in blocks))
            if key not in seen and (not exact or all(len(b) == 3 for b in key)):
                seen.add(key)
                yield key
            return
        lit = lits[k]
        for b in blocks:
            if len(b) < 3 and lit not in b:
                b.append(lit)
                yield from rec(k + 1, blocks)
                b.pop()
        blocks.append([lit])
        yield from rec(k + 1, blocks)
        blocks.pop()

    for key in rec(0, []):
        yield Cnf3(n, key)


def random_formula(n: int, rng, exact: bool = False) -> Cnf3:
    """A random normal-form formula; clause lengths vary unless ``exact``."""
    lits = []
    for i in range(1, n + 1):
        lits += [i, i, -i]
    for _ in range(1000):
        rng.shuffle(lits)
        clauses, cur = [], []
        want = 3 if exact else rng.randint(1, 3)
        ok = True
        for lit in lits:
            if lit in cur:
                ok = False
                break
            cur.append(lit)
            if len(cur) == want:
                clauses.append(cur)
                cur = []
                want = 3 if exact else rng.randint(1, 3)
        if cur:
            ok = ok and not exact
            clauses.append(cur)
        if ok:
            return Cnf3(n, clauses)
    raise CnfError(f"could not draw a formula on {n} variables")


# Gadgets.  Local names "v" and "v'" are the literal vertices and "l4" the
# leaf behind e^4; the other names are internal.  "true"/"false" list the
# gadget edges deleted alongside e^1, e^2 or e^3, e^4.

FIGURE_GADGET = {
    "edges": [
        ("a1", "a3"), ("a2", "u1"), ("a3", "u2"), ("u1", "u2"), ("u3", "u4"),
        ("u2", "u5"), ("u4", "u5"), ("u5", "v"), ("u5", "v'"), ("v'", "u6"),
        ("v", "u6"), ("u6", "u8"), ("u6", "u7"), ("u8", "a4"), ("u7", "u11"),
        ("u7", "u10"), ("u7", "u9"), ("u11", "b1"), ("u11", "b2"), ("u10", "b3"),
        ("u10", "b4"), ("u9", "b5"), ("u9", "b6"), ("v'", "l4"),
    ],
    "true": [("u6", "u7")],
    "false": [("v", "u6")],
}

REPAIRED_GADGET = {
    "edges": [
        ("v", "u5"), ("u5", "u6"), ("u6", "u7"), ("u7", "v'"), ("v'", "l4"),
        ("v", "p"), ("p", "p1"), ("p1", "p1l"), ("p", "pl"),
        ("v'", "r"), ("r", "r1"), ("r1", "r1l"), ("r", "rl"),
        ("u5", "y"), ("y", "yl"), ("u5", "y0"),
        ("u6", "x"), ("x", "xl"), ("u6", "x0"),
        ("u7", "z1"), ("z1", "z1l"), ("u7", "z2"), ("z2", "z2l"),
    ],
    "true": [("u6", "u7")],
    "false": [("u5", "u6")],
}

GADGETS = {"figure": FIGURE_GADGET, "repaired": REPAIRED_GADGET}


def _local_names(gadget) -> list[str]:
    names = ["v", "v'"]
    for a, b in gadget["edges"]:
        for x in (a, b):
            if x not in names:
                names.append(x)
    return names


def gen_from_3sat(phi: Cnf3, gadget: str = "repaired") -> LabeledGraph:
    if not isinstance(phi, Cnf3):
        raise CnfError("expected a Cnf3 formula")
    phi.validate()
    if gadget not in GADGETS:
        raise CnfError(f"unknown gadget {gadget!r}")
    gad = GADGETS[gadget]
    bld = Builder()
    clause_v = []
    for j in range(1, phi.m + 1):
        c = bld.add(f"c_{j}")
        s = bld.add(f"s_{j}")
        bld.join(c, s)
        bld.leaves(s, 3)
        clause_v.append(c)
    for i in range(1, phi.n + 1):
        local = {}
        for name in _local_names(gad):
            if name in ("v", "v'") or name.startswith("u"):
                label = {"v": f"v_{i}", "v'": f"v'_{i}"}.get(name, f"{name}_{i}")
                local[name] = bld.add(label)
            else:
                local[name] = bld.add()
        for a, b in gad["edges"]:
            if {a, b} == {"v'", "l4"}:
                bld.join(local[a], local[b], f"e4_{i}")
            else:
                bld.join(local[a], local[b], f"{a}{b}_{i}")
        poss = [j for j, c in enumerate(phi.clauses) if i in c]
        negc = [j for j, c in enumerate(phi.clauses) if -i in c]
        bld.join(local["v"], clause_v[poss[0]], f"e1_{i}")
        bld.join(local["v"], clause_v[poss[1]], f"e2_{i}")
        bld.join(local["v'"], clause_v[negc[0]], f"e3_{i}")
    return bld.freeze(kind="3sat", gadget=gadget, n=phi.n, m=phi.m)


def witness_from_assignment(phi: Cnf3, lg: LabeledGraph, assignment: Sequence[bool]) -> EdgeSet:
    """The three-edges-per-variable deletion set for a satisfying assignment."""
    if not phi.satisfied_by(assignment):
        raise CnfError("assignment does not satisfy the formula")
    gad = GADGETS[lg.meta.get("gadget", "repaired")]
    out = []
    for i, val in enumerate(assignment, 1):
        names = ["e1", "e2"] if val else ["e3", "e4"]
        out += [lg.e(f"{x}_{i}") for x in names]
        for a, b in gad["true" if val else "false"]:
            out.append(lg.e(f"{a}{b}_{i}"))
    return tuple(sorted(norm_edge(*e) for e in out))


def gadget_degree_identity(lg: LabeledGraph) -> bool:
    """Per variable, ``d(u5) = d(v) = d(u6) = d(u7)``."""
    g = lg.graph
    for i in range(1, lg.meta["n"] + 1):
        ds = {g.degree(lg.v(f"{x}_{i}")) for x in ("u5", "v", "u6", "u7")}
        if len(ds) != 1:
            return False
    return True
