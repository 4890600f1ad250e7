"""A small seeded corpus of test graphs."""

from __future__ import annotations

import random
from pathlib import Path

from .graph import (Graph, complete_bipartite, complete_graph, cycle_graph, gnp_random_graph, path_graph,
                    petersen_graph, star_graph)
from .io import emit_graph, read_graph


def named_graphs() -> dict[str, Graph]:
    return {
        "K2": complete_graph(2),
        "P3": path_graph(3),
        "K3": complete_graph(3),
        "C4": cycle_graph(4),
        "K4": complete_graph(4),
        "K1_4": star_graph(4),
        "K3_3": complete_bipartite(3, 3),
        "petersen": petersen_graph(),
    }


def default_corpus(seed: int = 0, count: int = 100, max_n: int = 10) -> list[tuple[str, Graph]]:
    """The named graphs followed by seeded G(n, p) samples, ``count`` in total."""
    out = list(named_graphs().items())
    rng = random.Random(seed)
    i = 0
    while len(out) < count:
        n = rng.randint(4, max_n)
        p = rng.choice([0.2, 0.5, 0.8])
        out.append((f"gnp{i:03d}_n{n}_p{int(p * 10)}", gnp_random_graph(n, p, rng)))
        i += 1
    return out[:count]


def write_corpus(directory, graphs) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, g in graphs:
        p = directory / f"{name}.txt"
        p.write_text(emit_graph(g, name))
        paths.append(p)
    return paths


def load_corpus(directory) -> list[tuple[str, Graph]]:
    directory = Path(directory)
    files = sorted(p for p in directory.iterdir() if p.suffix in (".txt", ".col", ".dimacs"))
    return [(p.stem, read_graph(p)) for p in files]
