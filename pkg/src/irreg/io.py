"""Plain-text graph formats, name maps and certificate files.

The native format is an edge list: optional ``#`` comments, a header line
``n m``, then ``m`` lines ``u v`` with 0-based ids.  DIMACS ``.col`` files
(``c`` comments, ``p edge n m``, ``e u v`` with 1-based ids) are read too.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError, norm_edge


class ParseError(GraphError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _ints(tok: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tok]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tok)!r}", lineno) from None


def _build(n: int, m: int | None, pairs: list[tuple[int, int, int]]) -> Graph:
    seen = set()
    for u, v, lineno in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
    if m is not None and m != len(pairs):
        raise ParseError(f"header promises {m} edges, found {len(pairs)}")
    return Graph(n, [(u, v) for u, v, _ in pairs])


def parse_edge_list(text: str) -> Graph:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ParseError(f"expected two fields, got {len(tok)}", lineno)
        a, b = _ints(tok, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
        else:
            pairs.append((a, b, lineno))
    if header is None:
        raise ParseError("missing 'n m' header")
    return _build(header[0], header[1], pairs)


def parse_dimacs(text: str) -> Graph:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge n m'", lineno)
            header = tuple(_ints(tok[2:], lineno))
        elif tok[0] == "e":
            if header is None:
                raise ParseError("edge before the problem line", lineno)
            if len(tok) != 3:
                raise ParseError("expected 'e u v'", lineno)
            u, v = _ints(tok[1:], lineno)
            pairs.append((u - 1, v - 1, lineno))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge n m' line")
    return _build(header[0], header[1], pairs)


def looks_like_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if line and line[0] not in "c#":
            return line.split()[0] in ("p", "e")
    return False


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse ``text``; ``fmt`` is ``"edgelist"``, ``"dimacs"`` or ``None`` to sniff."""
    if fmt is None:
        fmt = "dimacs" if looks_like_dimacs(text) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(path) -> Graph:
    path = Path(path)
    fmt = "dimacs" if path.suffix in (".col", ".dimacs") else None
    return parse_graph(path.read_text(), fmt)


def emit_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_name_map(text: str):
    """Vertex and edge names from a tab-separated sidecar."""
    vertices, edges = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        tok = raw.split("\t")
        if len(tok) == 2:
            vertices[tok[0]] = _ints(tok[1:], lineno)[0]
        elif len(tok) == 3:
            edges[tok[0]] = tuple(_ints(tok[1:], lineno))
        else:
            raise ParseError("expected name<TAB>id or name<TAB>u<TAB>v", lineno)
    return vertices, edges


def parse_certificate(text: str, mode: str | None = None):
    """Read a certificate, returning ``(mode, members)``.

    Accepts the JSON object printed by ``irreg solve``, a bare JSON list,
    or plain text: whitespace-separated ids for vertices, one ``u v`` pair
    per line for edges.  Plain text is read as vertices unless ``mode`` says
    otherwise.
    """
    text = text.strip()
    if text[:1] in ("[", "{"):
        data = json.loads(text)
        if isinstance(data, dict):
            mode = mode or data.get("target")
            data = data.get("certificate")
        if not isinstance(data, list):
            raise ParseError("certificate JSON has no list")
        members = [tuple(x) if isinstance(x, list) else x for x in data]
        if mode is None:
            mode = "edge" if members and isinstance(members[0], tuple) else "vertex"
        return mode, members
    mode = mode or "vertex"
    rows = [(i, l.split()) for i, l in enumerate(text.splitlines(), 1)
            if l.strip() and not l.lstrip().startswith("#")]
    if mode == "edge":
        out = []
        for i, r in rows:
            if len(r) != 2:
                raise ParseError("expected 'u v'", i)
            out.append(tuple(_ints(r, i)))
        return mode, out
    out = []
    for i, r in rows:
        out += _ints(r, i)
    return mode, out
