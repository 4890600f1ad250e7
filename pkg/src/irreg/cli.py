"""Command line front end: ``irreg solve|gen|check|params|bench``.

Exit codes: 0 ok, 1 usage or input error, 2 certificate rejected by
``check``, 3 a solver produced a certificate that failed re-verification.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from itertools import combinations
from pathlib import Path

from . import kernels
from .bench import run_bench
from .corpus import default_corpus, load_corpus, write_corpus
from .graph import GraphError, gnp_random_graph
from .hardness import factor, mcc, sat
from .io import emit_graph, parse_certificate, read_graph
from .oracle import verify_certificate
from .params import ParameterTooLarge, cluster_deletion_set, neighbourhood_diversity, vertex_integrity
from .runner import SOLVERS, TARGETS, UsageError, VerificationFailed, run

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _write_instance(prefix: str, lg, witness=None, target: str = "edge") -> dict:
    base = Path(prefix)
    base.parent.mkdir(parents=True, exist_ok=True)
    gpath = base.with_suffix(".txt")
    gpath.write_text(emit_graph(lg.graph))
    npath = base.with_suffix(".names")
    npath.write_text("\n".join(lg.name_map_lines()) + "\n")
    out = {"graph": str(gpath), "names": str(npath), "n": lg.graph.n, "m": lg.graph.m}
    if witness is not None:
        wpath = base.with_suffix(".witness.json")
        wpath.write_text(json.dumps({"target": target, "certificate": [list(e) for e in witness]}) + "\n")
        out["witness"] = str(wpath)
        out["witness_size"] = len(witness)
    return out


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    rep = run(g, args.target, args.solver, budget=args.budget, node_cap=args.node_cap,
              name=Path(args.graph).stem)
    _dump(rep.as_json())
    return EXIT_OK


def _parse_formula(text: str, n: int | None) -> sat.Cnf3:
    clauses = [[int(t) for t in part.split()] for part in text.split(";") if part.strip()]
    if n is None:
        n = max((abs(l) for c in clauses for l in c), default=0)
    return sat.Cnf3(n, clauses)


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    kind = args.kind
    if kind == "random":
        g = gnp_random_graph(args.n, args.p, rng)
        text = emit_graph(g, f"gnp n={args.n} p={args.p} seed={args.seed}")
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if kind == "corpus":
        if not args.out:
            raise UsageError("gen corpus needs --out DIR")
        paths = write_corpus(args.out, default_corpus(args.seed, args.count, args.max_n))
        _dump({"corpus": args.out, "graphs": len(paths)})
        return EXIT_OK
    if kind == "3sat":
        if args.formula:
            phi = _parse_formula(args.formula, args.vars)
        else:
            phi = sat.random_formula(args.vars or 2, rng, exact=args.exact)
        lg = sat.gen_from_3sat(phi, args.gadget)
        witness = None
        if args.witness:
            a = next(phi.satisfying_assignments(), None)
            if a is not None:
                witness = sat.witness_from_assignment(phi, lg, a)
        info = {"clauses": [list(c) for c in phi.clauses], "satisfiable": phi.is_satisfiable()}
    elif kind == "mcc":
        inst, clique = mcc.random_instance(args.k, args.n, args.p, rng, plant=args.witness)
        lg = mcc.gen_from_mcc(inst)
        witness = mcc.witness_from_clique(inst, lg, clique) if clique is not None else None
        info = {"k": args.k, "n": args.n, "clique": clique}
    else:
        h = read_graph(args.graph)
        lists = [[int(x) for x in part.split(",") if x.strip()] for part in args.lists.split("|")]
        inst = factor.GfInstance(h, lists)
        lg = factor.gen_from_general_factor(inst, scale=args.scale, max_vertices=args.max_vertices)
        witness = None
        if args.witness:
            if h.m > 20:
                raise UsageError("factor search for a witness is limited to 20 edges")
            for size in range(h.m + 1):
                hit = next((s for s in combinations(h.edges(), size) if inst.is_factor(s)), None)
                if hit is not None:
                    witness = factor.witness_from_factor(inst, lg, hit)
                    break
        info = {"scale": lg.meta["scale"]}
    if not args.out:
        sys.stdout.write(emit_graph(lg.graph))
        return EXIT_OK
    out = _write_instance(args.out, lg, witness)
    out.update(info)
    _dump(out)
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    mode, members = parse_certificate(Path(args.certificate).read_text(), args.target)
    ok = verify_certificate(g, members, mode)
    _dump({"verified": ok, "target": mode, "size": len(members)})
    return EXIT_OK if ok else EXIT_REJECTED


def cmd_params(args) -> int:
    g = read_graph(args.graph)
    nd, part = neighbourhood_diversity(g)
    out = {"nd": nd, "nd_classes": [list(c) for c in part.classes]}
    try:
        sep = vertex_integrity(g, args.cap)
        out.update(vi=sep.k, vi_separator=list(sep.U))
    except ParameterTooLarge:
        out.update(vi=None, vi_separator=None)
    try:
        cd = cluster_deletion_set(g, args.cap)
        out.update(cd=len(cd.S), cd_set=list(cd.S))
    except ParameterTooLarge:
        out.update(cd=None, cd_set=None)
    _dump(out)
    return EXIT_OK


def cmd_bench(args) -> int:
    graphs = load_corpus(args.corpus)
    if args.max_n is not None:
        graphs = [(name, g) for name, g in graphs if g.n <= args.max_n]
    solvers = SOLVERS if args.solvers == "all" else tuple(args.solvers.split(","))
    targets = TARGETS if args.targets == "all" else tuple(args.targets.split(","))
    for s in solvers:
        if s not in SOLVERS:
            raise UsageError(f"unknown solver {s!r}")
    for t in targets:
        if t not in TARGETS:
            raise UsageError(f"unknown target {t!r}")
    text = run_bench(graphs, solvers, targets, seed=args.seed, sample=args.sample,
                     node_cap=args.node_cap, jobs=args.jobs, timings=args.timings)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="irreg", description="Locally irregular subgraphs by deletion.")
    p.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    s = sub.add_parser("solve", help="solve one graph and print a JSON report")
    s.add_argument("graph")
    s.add_argument("--target", choices=TARGETS, default="vertex")
    s.add_argument("--solver", choices=("auto",) + SOLVERS, default="auto")
    s.add_argument("--budget", type=int)
    s.add_argument("--node-cap", type=int, help="search-node limit (default from IRREG_NODE_CAP)")
    s.add_argument("--seed", type=int, default=0, help="accepted for symmetry; solvers are deterministic")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="generate instances")
    g.add_argument("kind", choices=("random", "corpus", "3sat", "mcc", "genfactor"))
    g.add_argument("--out", help="output file, directory (corpus) or prefix (reductions)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=8, help="vertices (random) or class size (mcc)")
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--count", type=int, default=100)
    g.add_argument("--max-n", type=int, default=10)
    g.add_argument("--vars", type=int)
    g.add_argument("--formula", help="clauses as '1 2 -3; -1 2'")
    g.add_argument("--exact", action="store_true", help="three literals in every clause")
    g.add_argument("--gadget", choices=tuple(sat.GADGETS), default="repaired")
    g.add_argument("--graph", help="base graph H for genfactor")
    g.add_argument("--lists", default="", help="allowed degrees per vertex, e.g. '0|0,1|1'")
    g.add_argument("--scale", type=int)
    g.add_argument("--max-vertices", type=int, default=factor.DEFAULT_MAX_VERTICES)
    g.add_argument("--witness", action="store_true", help="also write a planted solution")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="verify a certificate")
    c.add_argument("graph")
    c.add_argument("certificate")
    c.add_argument("--target", choices=TARGETS)
    c.set_defaults(func=cmd_check)

    pa = sub.add_parser("params", help="structural parameters as JSON")
    pa.add_argument("graph")
    pa.add_argument("--cap", type=int)
    pa.set_defaults(func=cmd_params)

    b = sub.add_parser("bench", help="solver matrix over a corpus, as CSV")
    b.add_argument("corpus")
    b.add_argument("--out")
    b.add_argument("--solvers", default="all")
    b.add_argument("--targets", default="all")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--sample", type=int)
    b.add_argument("--max-n", type=int)
    b.add_argument("--node-cap", type=int)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--timings", action="store_true", help="add a wall_ms column (not reproducible)")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.backend:
        print(kernels.BACKEND)
        return EXIT_OK
    if args.cmd is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except VerificationFailed as exc:
        print(f"irreg: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"irreg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
