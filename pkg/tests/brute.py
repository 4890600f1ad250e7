"""Reference answers by plain enumeration.

Nothing here imports the solvers; only adjacency lists are read from the
graph object, so a bug in the search code cannot leak into the reference.
"""

from itertools import combinations


def _adj(g):
    return [set(g.neighbours(u)) for u in range(g.n)]


def _irregular(adj, alive):
    deg = {u: sum(1 for w in adj[u] if w in alive) for u in alive}
    return all(deg[u] != deg[w] for u in alive for w in adj[u] if w in alive)


def iv_brute(g):
    adj = _adj(g)
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if _irregular(adj, set(range(g.n)) - set(s)):
                return k, s
    raise AssertionError("unreachable")


def ie_brute(g):
    edges = [(u, w) for u in range(g.n) for w in g.neighbours(u) if u < w]
    for k in range(len(edges) + 1):
        for s in combinations(edges, k):
            gone = set(s)
            deg = [0] * g.n
            live = [e for e in edges if e not in gone]
            for u, w in live:
                deg[u] += 1
                deg[w] += 1
            if all(deg[u] != deg[w] for u, w in live):
                return k, s
    raise AssertionError("unreachable")


def _components(adj, alive):
    seen, out = set(), []
    for s in sorted(alive):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for w in adj[x]:
                if w in alive and w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def vi_brute(g):
    """min over all U of |U| + largest component of G - U."""
    adj = _adj(g)
    best = g.n
    for k in range(g.n + 1):
        for U in combinations(range(g.n), k):
            rest = set(range(g.n)) - set(U)
            big = max((len(c) for c in _components(adj, rest)), default=0)
            best = min(best, k + big)
    return best


def cd_brute(g):
    adj = _adj(g)
    for k in range(g.n + 1):
        for S in combinations(range(g.n), k):
            rest = set(range(g.n)) - set(S)
            if all(all(w in adj[v] for v in c for w in c if v != w) for c in _components(adj, rest)):
                return k
    raise AssertionError("unreachable")


def twin_classes(g):
    """Classes of the twin relation, from the pairwise definition."""
    adj = _adj(g)
    cls = []
    for u in range(g.n):
        for c in cls:
            v = c[0]
            if adj[u] - {v} == adj[v] - {u}:
                c.append(u)
                break
        else:
            cls.append([u])
    return sorted(tuple(c) for c in cls)
