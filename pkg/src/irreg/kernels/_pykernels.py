"""Pure-Python search kernels.

Line-for-line mirror of ``_ckernels.pyx``; both must return identical
results (including certificates and node counts) on identical input.
"""

FOUND = 0
EXHAUSTED = 1
TIMEOUT = 2

BACKEND = "python"


class _Timeout(Exception):
    pass


def vertex_search(n, indptr, indices, budget, node_cap):
    """Depth-first search for a vertex-irregulator of size <= budget.

    Returns ``(status, deleted_vertices, nodes)``.
    """
    alive = [1] * n
    kept = [0] * n
    deg = [indptr[u + 1] - indptr[u] for u in range(n)]
    mark = [0] * n
    used = [0] * n
    stamp = [0]
    sol = []
    nodes = [0]

    def cand_set(u, v):
        # distinct alive, non-kept vertices of N[u] | N[v]
        stamp[0] += 1
        st = stamp[0]
        out = []
        for w in (u, v):
            if alive[w] and not kept[w] and mark[w] != st:
                mark[w] = st
                out.append(w)
            for i in range(indptr[w], indptr[w + 1]):
                x = indices[i]
                if alive[x] and not kept[x] and mark[x] != st:
                    mark[x] = st
                    out.append(x)
        return out

    def candidates(u, v):
        stamp[0] += 1
        st = stamp[0]
        for i in range(indptr[u], indptr[u + 1]):
            x = indices[i]
            if alive[x]:
                mark[x] = st
        out = []
        for i in range(indptr[v], indptr[v + 1]):
            x = indices[i]
            if alive[x] and mark[x] == st and not kept[x]:
                out.append(x)
        stamp[0] += 1
        st2 = stamp[0]
        for x in out:
            mark[x] = st2
        for x in (u, v):
            if not kept[x]:
                mark[x] = st2
                out.append(x)
        for w in (u, v):
            for i in range(indptr[w], indptr[w + 1]):
                x = indices[i]
                if alive[x] and not kept[x] and mark[x] != st2:
                    mark[x] = st2
                    out.append(x)
        return out

    def rec(b):
        nodes[0] += 1
        if nodes[0] > node_cap:
            raise _Timeout
        best_u = -1
        best_v = -1
        best = n + 1
        stamp[0] += 1
        pack = stamp[0]
        lb = 0
        for u in range(n):
            if not alive[u]:
                continue
            du = deg[u]
            for i in range(indptr[u], indptr[u + 1]):
                v = indices[i]
                if v <= u or not alive[v] or deg[v] != du:
                    continue
                cl = cand_set(u, v)
                cnt = len(cl)
                if cnt == 0:
                    return EXHAUSTED
                if cnt < best:
                    best = cnt
                    best_u = u
                    best_v = v
                # greedy packing of pairwise disjoint candidate sets
                disjoint = True
                for x in cl:
                    if used[x] == pack:
                        disjoint = False
                        break
                if disjoint:
                    for x in cl:
                        used[x] = pack
                    lb += 1
        if best_u < 0:
            return FOUND
        if lb > b:
            return EXHAUSTED
        cands = candidates(best_u, best_v)
        tried = 0
        status = EXHAUSTED
        for c in cands:
            alive[c] = 0
            for i in range(indptr[c], indptr[c + 1]):
                x = indices[i]
                if alive[x]:
                    deg[x] -= 1
            sol.append(c)
            try:
                r = rec(b - 1)
            except _Timeout:
                r = TIMEOUT
            if r == FOUND:
                status = FOUND
                break
            sol.pop()
            alive[c] = 1
            for i in range(indptr[c], indptr[c + 1]):
                x = indices[i]
                if alive[x]:
                    deg[x] += 1
            if r == TIMEOUT:
                status = TIMEOUT
                break
            kept[c] = 1
            tried += 1
        for j in range(tried):
            kept[cands[j]] = 0
        if status == TIMEOUT:
            raise _Timeout
        return status

    try:
        status = rec(budget)
    except _Timeout:
        return TIMEOUT, [], nodes[0]
    return status, sorted(sol) if status == FOUND else [], nodes[0]


def edge_search(n, indptr, indices, eids, eu, ev, budget, node_cap):
    """Depth-first search for an edge-irregulator of size <= budget.

    ``eids[i]`` is the edge id of adjacency slot ``i``; edge ``e`` joins
    ``eu[e] < ev[e]``.  Returns ``(status, deleted_edge_ids, nodes)``.
    """
    m = len(eu)
    dead = [0] * m
    kept = [0] * m
    deg = [indptr[u + 1] - indptr[u] for u in range(n)]
    mark = [0] * m
    used = [0] * m
    stamp = [0]
    sol = []
    nodes = [0]

    def cand_list(e):
        stamp[0] += 1
        st = stamp[0]
        out = []
        if not kept[e]:
            mark[e] = st
            out.append(e)
        for w in (eu[e], ev[e]):
            for i in range(indptr[w], indptr[w + 1]):
                f = eids[i]
                if not dead[f] and not kept[f] and mark[f] != st:
                    mark[f] = st
                    out.append(f)
        return out

    def rec(b):
        nodes[0] += 1
        if nodes[0] > node_cap:
            raise _Timeout
        best_e = -1
        best = m + 1
        stamp[0] += 1
        pack = stamp[0]
        lb = 0
        for e in range(m):
            if dead[e] or deg[eu[e]] != deg[ev[e]]:
                continue
            cl = cand_list(e)
            cnt = len(cl)
            if cnt == 0:
                return EXHAUSTED
            if cnt < best:
                best = cnt
                best_e = e
            disjoint = True
            for f in cl:
                if used[f] == pack:
                    disjoint = False
                    break
            if disjoint:
                for f in cl:
                    used[f] = pack
                lb += 1
        if best_e < 0:
            return FOUND
        if lb > b:
            return EXHAUSTED
        cands = cand_list(best_e)
        tried = 0
        status = EXHAUSTED
        for c in cands:
            dead[c] = 1
            deg[eu[c]] -= 1
            deg[ev[c]] -= 1
            sol.append(c)
            try:
                r = rec(b - 1)
            except _Timeout:
                r = TIMEOUT
            if r == FOUND:
                status = FOUND
                break
            sol.pop()
            dead[c] = 0
            deg[eu[c]] += 1
            deg[ev[c]] += 1
            if r == TIMEOUT:
                status = TIMEOUT
                break
            kept[c] = 1
            tried += 1
        for j in range(tried):
            kept[cands[j]] = 0
        if status == TIMEOUT:
            raise _Timeout
        return status

    try:
        status = rec(budget)
    except _Timeout:
        return TIMEOUT, [], nodes[0]
    return status, sorted(sol) if status == FOUND else [], nodes[0]


def diseq_search(prog, cutoff):
    """Exhaustive branch-and-bound over a compiled disequality program.

    ``prog`` is the tuple produced by ``irreg.diseq.compile_program``;
    the objective is minimised.  Only assignments with objective strictly
    below ``cutoff`` are accepted.  Returns ``(found, values, objective, nodes)``.
    """
    (nv, lo, hi, obj, eq_rhs,
     occ_ptr, occ_eq, occ_coef, occ_rmin, occ_rmax,
     dq_ptr, dq_var, dq_coef, dq_const, dq_act, chk_ptr, chk_idx,
     free_suffix, pe_eq, pe_min) = prog
    ne = len(eq_rhs)
    npe = len(pe_eq)
    stride = nv + 1
    vals = [0] * nv
    eqsum = [0] * ne
    best_vals = [None]
    inc = [cutoff]
    nodes = [0]

    def rec(pos, cur):
        nodes[0] += 1
        if pos == nv:
            if cur < inc[0]:
                inc[0] = cur
                best_vals[0] = vals[:]
            return
        lb = cur + free_suffix[pos]
        for p in range(npe):
            mn = pe_min[p * stride + pos]
            if mn > 0:
                e = pe_eq[p]
                lb += (eq_rhs[e] - eqsum[e]) * mn
        if lb >= inc[0]:
            return
        a = lo[pos]
        z = hi[pos]
        for k in range(occ_ptr[pos], occ_ptr[pos + 1]):
            c = occ_coef[k]
            base = eq_rhs[occ_eq[k]] - eqsum[occ_eq[k]]
            left = base - occ_rmax[k]
            right = base - occ_rmin[k]
            if c > 0:
                a = max(a, -((-left) // c))
                z = min(z, right // c)
            else:
                a = max(a, -((-right) // c))
                z = min(z, left // c)
        oc = obj[pos]
        for v in range(a, z + 1):
            vals[pos] = v
            ok = True
            for k in range(chk_ptr[pos], chk_ptr[pos + 1]):
                d = chk_idx[k]
                act = dq_act[d]
                if act >= 0 and vals[act] <= 0:
                    continue
                s = dq_const[d]
                for t in range(dq_ptr[d], dq_ptr[d + 1]):
                    s += dq_coef[t] * vals[dq_var[t]]
                if s == 0:
                    ok = False
                    break
            if not ok:
                continue
            for k in range(occ_ptr[pos], occ_ptr[pos + 1]):
                eqsum[occ_eq[k]] += occ_coef[k] * v
            rec(pos + 1, cur + oc * v)
            for k in range(occ_ptr[pos], occ_ptr[pos + 1]):
                eqsum[occ_eq[k]] -= occ_coef[k] * v

    rec(0, 0)
    if best_vals[0] is None:
        return False, [], 0, nodes[0]
    return True, best_vals[0], inc[0], nodes[0]
