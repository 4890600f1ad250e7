from itertools import combinations

from hypothesis import strategies as st

from irreg.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if max_m is not None:
        edges = edges[:max_m]
    return Graph(n, edges)
