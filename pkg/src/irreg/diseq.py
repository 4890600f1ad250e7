"""Integer programs over bounded domains with linear (dis)equalities.

A program has integer variables with closed domains ``[lo, hi]``, linear
equalities ``expr == const``, disequalities ``lhs != rhs`` that may be
conditioned on an activation variable being positive, and a linear
objective.  :func:`solve` runs an exhaustive depth-first search in
declaration order with ascending values, using bound propagation on the
equalities and branch-and-bound on the objective.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import kernels
from .kernels import _pykernels

# values whose magnitude stays below this fit the compiled kernel's int64
_INT64_SAFE = 1 << 62


class ProgramError(ValueError):
    """Malformed program or program text."""


@dataclass
class Disequality:
    lhs: dict[int, int]
    rhs: dict[int, int]
    lhs_const: int = 0
    rhs_const: int = 0
    when: int | None = None


@dataclass
class DiseqProgram:
    names: list[str] = field(default_factory=list)
    lo: list[int] = field(default_factory=list)
    hi: list[int] = field(default_factory=list)
    equalities: list[tuple[dict[int, int], int]] = field(default_factory=list)
    disequalities: list[Disequality] = field(default_factory=list)
    sense: str = "min"
    objective: dict[int, int] = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def add_var(self, name: str, lo: int, hi: int) -> int:
        if lo > hi:
            raise ProgramError(f"empty domain for {name}: [{lo}, {hi}]")
        if not name or any(ch.isspace() for ch in name) or "*" in name:
            raise ProgramError(f"bad variable name {name!r}")
        self.names.append(name)
        self.lo.append(int(lo))
        self.hi.append(int(hi))
        return len(self.names) - 1

    def add_eq(self, coeffs: dict[int, int], const: int) -> None:
        """Require ``sum(c * x) == const``."""
        self._check(coeffs)
        self.equalities.append((dict(coeffs), int(const)))

    def add_ne(self, lhs: dict[int, int], rhs: dict[int, int], lhs_const: int = 0,
               rhs_const: int = 0, when: int | None = None) -> None:
        """Require ``lhs + lhs_const != rhs + rhs_const`` (only if ``x[when] > 0`` when given)."""
        self._check(lhs)
        self._check(rhs)
        if when is not None:
            self._check({when: 1})
        self.disequalities.append(Disequality(dict(lhs), dict(rhs), int(lhs_const), int(rhs_const), when))

    def set_objective(self, sense: str, coeffs: dict[int, int]) -> None:
        if sense not in ("min", "max"):
            raise ProgramError(f"objective sense must be min or max, got {sense!r}")
        self._check(coeffs)
        self.sense = sense
        self.objective = dict(coeffs)

    def _check(self, coeffs: dict[int, int]) -> None:
        n = len(self.names)
        for j in coeffs:
            if not (type(j) is int and 0 <= j < n):
                raise ProgramError(f"unknown variable index {j!r}")

    def validate(self) -> None:
        if not (len(self.names) == len(self.lo) == len(self.hi)):
            raise ProgramError("variable tables out of sync")
        for j in range(self.nvars):
            if self.lo[j] > self.hi[j]:
                raise ProgramError(f"empty domain for {self.names[j]}")
        if self.sense not in ("min", "max"):
            raise ProgramError(f"bad sense {self.sense!r}")
        for coeffs, _ in self.equalities:
            self._check(coeffs)
        for d in self.disequalities:
            self._check(d.lhs)
            self._check(d.rhs)
            if d.when is not None:
                self._check({d.when: 1})
        self._check(self.objective)

    def evaluate(self, values) -> int:
        return sum(c * values[j] for j, c in self.objective.items())

    def satisfied_by(self, values) -> bool:
        if len(values) != self.nvars:
            return False
        for j, v in enumerate(values):
            if not self.lo[j] <= v <= self.hi[j]:
                return False
        for coeffs, const in self.equalities:
            if sum(c * values[j] for j, c in coeffs.items()) != const:
                return False
        for d in self.disequalities:
            if d.when is not None and values[d.when] <= 0:
                continue
            left = d.lhs_const + sum(c * values[j] for j, c in d.lhs.items())
            right = d.rhs_const + sum(c * values[j] for j, c in d.rhs.items())
            if left == right:
                return False
        return True


@dataclass(frozen=True)
class DiseqSolution:
    feasible: bool
    assignment: tuple[int, ...]
    objective_value: int | None
    nodes: int = 0


def _clean(coeffs):
    return {j: c for j, c in coeffs.items() if c != 0}


class CompiledProgram:
    """A program flattened into the array tuple the search kernels take.

    The constant of any disequality can be overridden and any disequality
    switched off per call, so a family of programs differing only in those
    respects compiles once.
    """

    def __init__(self, p: DiseqProgram):
        nv = p.nvars
        lo, hi = p.lo, p.hi
        self.sign = sign = -1 if p.sense == "max" else 1
        obj = [0] * nv
        for j, c in p.objective.items():
            obj[j] = sign * c

        def span(c, j):
            a, b = c * lo[j], c * hi[j]
            return (a, b) if a <= b else (b, a)

        amax = [max(abs(lo[j]), abs(hi[j])) for j in range(nv)]
        magnitude = max(amax, default=1) or 1
        self.infeasible = False

        # equalities: per variable occurrence, the range of the not-yet-assigned tail
        eq_rhs: list[int] = []
        eq_vars: list[list[tuple[int, int]]] = []
        for coeffs, const in p.equalities:
            terms = sorted(_clean(coeffs).items())
            if not terms:
                if const != 0:
                    self.infeasible = True
                continue
            eq_rhs.append(const)
            eq_vars.append(terms)
            magnitude = max(magnitude, abs(const) + sum(abs(c) * amax[j] for j, c in terms))
        occ: list[list[tuple[int, int, int, int]]] = [[] for _ in range(nv)]
        for e, terms in enumerate(eq_vars):
            rmin = rmax = 0
            for j, c in reversed(terms):
                occ[j].append((e, c, rmin, rmax))
                a, b = span(c, j)
                rmin += a
                rmax += b
        occ_ptr, occ_eq, occ_coef, occ_rmin, occ_rmax = [0], [], [], [], []
        for j in range(nv):
            for e, c, rmin, rmax in occ[j]:
                occ_eq.append(e)
                occ_coef.append(c)
                occ_rmin.append(rmin)
                occ_rmax.append(rmax)
            occ_ptr.append(len(occ_eq))

        # disequalities become lhs - rhs != 0, checked once their last variable is set
        dq_ptr, dq_var, dq_coef, dq_const, dq_act = [0], [], [], [], []
        self.rows: list[int | None] = []
        self.static: dict[int, int] = {}
        self.row_pos: list[int] = []
        self.row_mag: list[int] = []
        for k, d in enumerate(p.disequalities):
            diff = dict(d.lhs)
            for j, c in d.rhs.items():
                diff[j] = diff.get(j, 0) - c
            terms = sorted(_clean(diff).items())
            touched = [j for j, _ in terms] + ([d.when] if d.when is not None else [])
            if not touched:
                self.rows.append(None)
                self.static[k] = d.lhs_const - d.rhs_const
                continue
            self.rows.append(len(dq_const))
            for j, c in terms:
                dq_var.append(j)
                dq_coef.append(c)
            dq_ptr.append(len(dq_var))
            dq_const.append(d.lhs_const - d.rhs_const)
            dq_act.append(-1 if d.when is None else d.when)
            self.row_pos.append(max(touched))
            self.row_mag.append(sum(abs(c) * amax[j] for j, c in terms))

        free_suffix = [0] * (nv + 1)
        for j in range(nv - 1, -1, -1):
            free_suffix[j] = free_suffix[j + 1] + span(obj[j], j)[0]
        magnitude = max(magnitude, sum(abs(obj[j]) * amax[j] for j in range(nv)), max(self.row_mag, default=0))

        # partition equalities (unit coefficients, zero lower bounds, non-negative
        # costs, pairwise disjoint) give a tighter bound: the rest still has to be
        # spread over the unassigned variables, each unit costing at least the
        # cheapest of them
        pe_eq: list[int] = []
        pe_min: list[int] = []
        claimed: set[int] = set()
        for e, terms in enumerate(eq_vars):
            vs = [j for j, _ in terms]
            if any(c != 1 for _, c in terms) or any(lo[j] != 0 or obj[j] < 0 for j in vs):
                continue
            if claimed.intersection(vs):
                continue
            claimed.update(vs)
            row = [0] * (nv + 1)
            best = None
            for pos in range(nv - 1, -1, -1):
                if pos in vs:
                    best = obj[pos] if best is None else min(best, obj[pos])
                row[pos] = best or 0
            if not any(row):
                continue
            pe_eq.append(e)
            pe_min.extend(row)
        self.scale = 4 * max(1, nv) * max(1, max(map(abs, obj), default=1))
        self.magnitude = magnitude
        self.nv = nv
        self._head = (nv, list(lo), list(hi), obj, eq_rhs, occ_ptr, occ_eq, occ_coef, occ_rmin, occ_rmax,
                      dq_ptr, dq_var, dq_coef)
        self._dq_const = dq_const
        self._dq_act = dq_act
        self._tail = (free_suffix, pe_eq, pe_min)
        self._default_checks = self._checks(())

    def _checks(self, disabled):
        per = [[] for _ in range(self.nv)]
        for r, pos in enumerate(self.row_pos):
            if r not in disabled:
                per[pos].append(r)
        ptr, idx = [0], []
        for lst in per:
            idx.extend(lst)
            ptr.append(len(idx))
        return ptr, idx

    def kernel_input(self, consts=None, disabled=()):
        """``(prog, magnitude)`` or ``None`` when a variable-free constraint fails."""
        if self.infeasible:
            return None
        dq_const = self._dq_const
        magnitude = self.magnitude
        off_rows = set()
        for k in disabled:
            r = self.rows[k]
            if r is not None:
                off_rows.add(r)
        for k, c in self.static.items():
            if k not in disabled and (consts or {}).get(k, c) == 0:
                return None
        if consts:
            dq_const = list(dq_const)
            for k, c in consts.items():
                r = self.rows[k]
                if r is not None:
                    dq_const[r] = c
                    magnitude = max(magnitude, abs(c) + self.row_mag[r])
        else:
            magnitude = max([magnitude] + [abs(c) for c in dq_const])
        chk_ptr, chk_idx = self._checks(off_rows) if off_rows else self._default_checks
        prog = self._head + (dq_const, self._dq_act, chk_ptr, chk_idx) + self._tail
        return prog, magnitude * self.scale

    def solve(self, cutoff: int | None = None, consts: dict[int, int] | None = None,
              disabled=()) -> DiseqSolution:
        """Solve with disequality ``k`` reading ``lhs - rhs + consts[k] != 0``.

        ``consts`` replaces the combined constant (``lhs_const - rhs_const``)
        of the given disequalities; those listed in ``disabled`` are dropped.
        """
        ready = self.kernel_input(consts, disabled)
        if ready is None:
            return DiseqSolution(False, (), None, 0)
        prog, magnitude = ready
        sign = self.sign
        if cutoff is None:
            kcut = magnitude + 1
        else:
            kcut = sign * cutoff
            magnitude = max(magnitude, abs(kcut))
        search = kernels.diseq_search if magnitude < _INT64_SAFE else _pykernels.diseq_search
        found, values, objective, nodes = search(prog, kcut)
        if not found:
            return DiseqSolution(False, (), None, nodes)
        return DiseqSolution(True, tuple(int(v) for v in values), sign * int(objective), nodes)


def compile_program(p: DiseqProgram) -> CompiledProgram:
    p.validate()
    return CompiledProgram(p)


def solve(p: DiseqProgram, cutoff: int | None = None) -> DiseqSolution:
    """Optimal assignment of ``p``.

    With ``cutoff`` only assignments strictly better than it count (lower
    for min, higher for max); the result is infeasible if none exists.
    """
    return compile_program(p).solve(cutoff)


def solve_brute(p: DiseqProgram) -> DiseqSolution:
    """Reference: full Cartesian-product enumeration (tiny programs only)."""
    from itertools import product

    p.validate()
    best = None
    best_vals: tuple[int, ...] = ()
    for vals in product(*(range(p.lo[j], p.hi[j] + 1) for j in range(p.nvars))):
        if not p.satisfied_by(vals):
            continue
        val = p.evaluate(vals)
        if best is None or (val < best if p.sense == "min" else val > best):
            best, best_vals = val, vals
    if best is None:
        return DiseqSolution(False, (), None)
    return DiseqSolution(True, tuple(best_vals), best)


# -- text form -----------------------------------------------------------------


def _fmt_expr(p: DiseqProgram, coeffs: dict[int, int], const: int = 0) -> str:
    parts = [f"{c}*{p.names[j]}" for j, c in sorted(coeffs.items())]
    if const or not parts:
        parts.append(str(const))
    return " ".join(parts)


def dump(p: DiseqProgram) -> str:
    lines = [f"var {p.names[j]} {p.lo[j]} {p.hi[j]}" for j in range(p.nvars)]
    for coeffs, const in p.equalities:
        lines.append(f"eq {_fmt_expr(p, coeffs)} = {const}")
    for d in p.disequalities:
        line = f"ne {_fmt_expr(p, d.lhs, d.lhs_const)} != {_fmt_expr(p, d.rhs, d.rhs_const)}"
        if d.when is not None:
            line += f" if {p.names[d.when]}"
        lines.append(line)
    lines.append(f"obj {p.sense} {_fmt_expr(p, p.objective)}")
    return "\n".join(lines) + "\n"


_TERM = re.compile(r"^(-?\d+)\*(\S+)$")


def _parse_expr(tokens, index, lineno):
    coeffs: dict[int, int] = {}
    const = 0
    for tok in tokens:
        m = _TERM.match(tok)
        if m:
            name = m.group(2)
            if name not in index:
                raise ProgramError(f"line {lineno}: unknown variable {name}")
            j = index[name]
            coeffs[j] = coeffs.get(j, 0) + int(m.group(1))
        else:
            try:
                const += int(tok)
            except ValueError:
                raise ProgramError(f"line {lineno}: bad term {tok!r}") from None
    return coeffs, const


def parse(text: str) -> DiseqProgram:
    p = DiseqProgram()
    index: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head, rest = tok[0], tok[1:]
        try:
            if head == "var":
                if len(rest) != 3:
                    raise ProgramError(f"line {lineno}: expected 'var name lo hi'")
                if rest[0] in index:
                    raise ProgramError(f"line {lineno}: duplicate variable {rest[0]}")
                index[rest[0]] = p.add_var(rest[0], int(rest[1]), int(rest[2]))
            elif head == "eq":
                if "=" not in rest or rest.index("=") != len(rest) - 2:
                    raise ProgramError(f"line {lineno}: expected 'eq <terms> = c'")
                coeffs, const = _parse_expr(rest[:-2], index, lineno)
                p.add_eq(coeffs, int(rest[-1]) - const)
            elif head == "ne":
                when = None
                if len(rest) >= 2 and rest[-2] == "if":
                    if rest[-1] not in index:
                        raise ProgramError(f"line {lineno}: unknown variable {rest[-1]}")
                    when = index[rest[-1]]
                    rest = rest[:-2]
                if rest.count("!=") != 1:
                    raise ProgramError(f"line {lineno}: expected one '!='")
                k = rest.index("!=")
                lc, lk = _parse_expr(rest[:k], index, lineno)
                rc, rk = _parse_expr(rest[k + 1:], index, lineno)
                p.add_ne(lc, rc, lk, rk, when)
            elif head == "obj":
                if not rest or rest[0] not in ("min", "max"):
                    raise ProgramError(f"line {lineno}: expected 'obj min|max <terms>'")
                coeffs, const = _parse_expr(rest[1:], index, lineno)
                if const:
                    raise ProgramError(f"line {lineno}: objective constants are not supported")
                p.set_objective(rest[0], coeffs)
            else:
                raise ProgramError(f"line {lineno}: unknown directive {head!r}")
        except ValueError as exc:
            if isinstance(exc, ProgramError):
                raise
            raise ProgramError(f"line {lineno}: {exc}") from None
    return p
