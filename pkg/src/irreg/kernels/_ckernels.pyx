# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same algorithms and visit order as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free

DEF FOUND = 0
DEF EXHAUSTED = 1
DEF TIMEOUT = 2

BACKEND = "cython"


cdef int* _ints(object seq) except NULL:
    cdef Py_ssize_t k, L = len(seq)
    cdef int* out = <int*> malloc((L + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for k in range(L):
        out[k] = seq[k]
    return out


cdef long long* _longs(object seq) except NULL:
    cdef Py_ssize_t k, L = len(seq)
    cdef long long* out = <long long*> malloc((L + 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    for k in range(L):
        out[k] = seq[k]
    return out


# ---------------------------------------------------------------------------
# vertex deletion


cdef struct VState:
    int n
    int* indptr
    int* indices
    int* alive
    int* kept
    int* deg
    int* mark
    int* used
    int* buf        # candidate scratch, (budget + 2) * n entries
    int* sol
    int nsol
    int stamp
    long long nodes
    long long cap


cdef int _v_cand_set(VState* s, int u, int v, int* out) nogil:
    cdef int st, cnt = 0, w, i, x, k
    s.stamp += 1
    st = s.stamp
    for k in range(2):
        w = u if k == 0 else v
        if s.alive[w] and not s.kept[w] and s.mark[w] != st:
            s.mark[w] = st
            out[cnt] = w
            cnt += 1
        for i in range(s.indptr[w], s.indptr[w + 1]):
            x = s.indices[i]
            if s.alive[x] and not s.kept[x] and s.mark[x] != st:
                s.mark[x] = st
                out[cnt] = x
                cnt += 1
    return cnt


cdef int _v_candidates(VState* s, int u, int v, int* out) nogil:
    cdef int st, st2, cnt = 0, i, x, k, w
    s.stamp += 1
    st = s.stamp
    for i in range(s.indptr[u], s.indptr[u + 1]):
        x = s.indices[i]
        if s.alive[x]:
            s.mark[x] = st
    for i in range(s.indptr[v], s.indptr[v + 1]):
        x = s.indices[i]
        if s.alive[x] and s.mark[x] == st and not s.kept[x]:
            out[cnt] = x
            cnt += 1
    s.stamp += 1
    st2 = s.stamp
    for k in range(cnt):
        s.mark[out[k]] = st2
    for k in range(2):
        x = u if k == 0 else v
        if not s.kept[x]:
            s.mark[x] = st2
            out[cnt] = x
            cnt += 1
    for k in range(2):
        w = u if k == 0 else v
        for i in range(s.indptr[w], s.indptr[w + 1]):
            x = s.indices[i]
            if s.alive[x] and not s.kept[x] and s.mark[x] != st2:
                s.mark[x] = st2
                out[cnt] = x
                cnt += 1
    return cnt


cdef int _v_rec(VState* s, int b, int depth) nogil:
    cdef int u, v, i, j, du, cnt, best_u = -1, best_v = -1, best, pack, lb = 0
    cdef int disjoint, ncand, c, r, tried = 0, status = EXHAUSTED, x
    cdef int* scratch = s.buf + (2 * depth) * s.n
    cdef int* cands = s.buf + (2 * depth + 1) * s.n
    s.nodes += 1
    if s.nodes > s.cap:
        return TIMEOUT
    best = s.n + 1
    s.stamp += 1
    pack = s.stamp
    for u in range(s.n):
        if not s.alive[u]:
            continue
        du = s.deg[u]
        for i in range(s.indptr[u], s.indptr[u + 1]):
            v = s.indices[i]
            if v <= u or not s.alive[v] or s.deg[v] != du:
                continue
            cnt = _v_cand_set(s, u, v, scratch)
            if cnt == 0:
                return EXHAUSTED
            if cnt < best:
                best = cnt
                best_u = u
                best_v = v
            disjoint = 1
            for j in range(cnt):
                if s.used[scratch[j]] == pack:
                    disjoint = 0
                    break
            if disjoint:
                for j in range(cnt):
                    s.used[scratch[j]] = pack
                lb += 1
    if best_u < 0:
        return FOUND
    if lb > b:
        return EXHAUSTED
    ncand = _v_candidates(s, best_u, best_v, cands)
    for j in range(ncand):
        c = cands[j]
        s.alive[c] = 0
        for i in range(s.indptr[c], s.indptr[c + 1]):
            x = s.indices[i]
            if s.alive[x]:
                s.deg[x] -= 1
        s.sol[s.nsol] = c
        s.nsol += 1
        r = _v_rec(s, b - 1, depth + 1)
        if r == FOUND:
            status = FOUND
            break
        s.nsol -= 1
        s.alive[c] = 1
        for i in range(s.indptr[c], s.indptr[c + 1]):
            x = s.indices[i]
            if s.alive[x]:
                s.deg[x] += 1
        if r == TIMEOUT:
            status = TIMEOUT
            break
        s.kept[c] = 1
        tried += 1
    for j in range(tried):
        s.kept[cands[j]] = 0
    return status


def vertex_search(int n, indptr, indices, int budget, long long node_cap):
    cdef VState s
    cdef int status, k
    s.n = n
    s.indptr = _ints(indptr)
    s.indices = _ints(indices)
    s.alive = <int*> malloc((n + 1) * sizeof(int))
    s.kept = <int*> calloc(n + 1, sizeof(int))
    s.deg = <int*> malloc((n + 1) * sizeof(int))
    s.mark = <int*> calloc(n + 1, sizeof(int))
    s.used = <int*> calloc(n + 1, sizeof(int))
    s.buf = <int*> malloc((2 * (budget + 2) * (n + 1) + 1) * sizeof(int))
    s.sol = <int*> malloc((budget + 2) * sizeof(int))
    s.nsol = 0
    s.stamp = 0
    s.nodes = 0
    s.cap = node_cap
    try:
        for k in range(n):
            s.alive[k] = 1
            s.deg[k] = s.indptr[k + 1] - s.indptr[k]
        with nogil:
            status = _v_rec(&s, budget, 0)
        if status == FOUND:
            sol = sorted(s.sol[k] for k in range(s.nsol))
        else:
            sol = []
        return status, sol, s.nodes
    finally:
        free(s.indptr); free(s.indices); free(s.alive); free(s.kept)
        free(s.deg); free(s.mark); free(s.used); free(s.buf); free(s.sol)


# ---------------------------------------------------------------------------
# edge deletion


cdef struct EState:
    int n
    int m
    int* indptr
    int* eids
    int* eu
    int* ev
    int* dead
    int* kept
    int* deg
    int* mark
    int* used
    int* buf
    int* sol
    int nsol
    int stamp
    long long nodes
    long long cap


cdef int _e_cand_list(EState* s, int e, int* out) nogil:
    cdef int st, cnt = 0, k, w, i, f
    s.stamp += 1
    st = s.stamp
    if not s.kept[e]:
        s.mark[e] = st
        out[cnt] = e
        cnt += 1
    for k in range(2):
        w = s.eu[e] if k == 0 else s.ev[e]
        for i in range(s.indptr[w], s.indptr[w + 1]):
            f = s.eids[i]
            if not s.dead[f] and not s.kept[f] and s.mark[f] != st:
                s.mark[f] = st
                out[cnt] = f
                cnt += 1
    return cnt


cdef int _e_rec(EState* s, int b, int depth) nogil:
    cdef int e, j, cnt, best_e = -1, best, pack, lb = 0, disjoint
    cdef int ncand, c, r, tried = 0, status = EXHAUSTED
    cdef int width = 2 * s.n + 1
    cdef int* scratch = s.buf + (2 * depth) * width
    cdef int* cands = s.buf + (2 * depth + 1) * width
    s.nodes += 1
    if s.nodes > s.cap:
        return TIMEOUT
    best = s.m + 1
    s.stamp += 1
    pack = s.stamp
    for e in range(s.m):
        if s.dead[e] or s.deg[s.eu[e]] != s.deg[s.ev[e]]:
            continue
        cnt = _e_cand_list(s, e, scratch)
        if cnt == 0:
            return EXHAUSTED
        if cnt < best:
            best = cnt
            best_e = e
        disjoint = 1
        for j in range(cnt):
            if s.used[scratch[j]] == pack:
                disjoint = 0
                break
        if disjoint:
            for j in range(cnt):
                s.used[scratch[j]] = pack
            lb += 1
    if best_e < 0:
        return FOUND
    if lb > b:
        return EXHAUSTED
    ncand = _e_cand_list(s, best_e, cands)
    for j in range(ncand):
        c = cands[j]
        s.dead[c] = 1
        s.deg[s.eu[c]] -= 1
        s.deg[s.ev[c]] -= 1
        s.sol[s.nsol] = c
        s.nsol += 1
        r = _e_rec(s, b - 1, depth + 1)
        if r == FOUND:
            status = FOUND
            break
        s.nsol -= 1
        s.dead[c] = 0
        s.deg[s.eu[c]] += 1
        s.deg[s.ev[c]] += 1
        if r == TIMEOUT:
            status = TIMEOUT
            break
        s.kept[c] = 1
        tried += 1
    for j in range(tried):
        s.kept[cands[j]] = 0
    return status


def edge_search(int n, indptr, indices, eids, eu, ev, int budget, long long node_cap):
    cdef EState s
    cdef int status, k
    cdef int m = len(eu)
    cdef int width = 2 * n + 1
    s.n = n
    s.m = m
    s.indptr = _ints(indptr)
    s.eids = _ints(eids)
    s.eu = _ints(eu)
    s.ev = _ints(ev)
    s.dead = <int*> calloc(m + 1, sizeof(int))
    s.kept = <int*> calloc(m + 1, sizeof(int))
    s.deg = <int*> malloc((n + 1) * sizeof(int))
    s.mark = <int*> calloc(m + 1, sizeof(int))
    s.used = <int*> calloc(m + 1, sizeof(int))
    s.buf = <int*> malloc((2 * (budget + 2) * width + 1) * sizeof(int))
    s.sol = <int*> malloc((budget + 2) * sizeof(int))
    s.nsol = 0
    s.stamp = 0
    s.nodes = 0
    s.cap = node_cap
    try:
        for k in range(n):
            s.deg[k] = s.indptr[k + 1] - s.indptr[k]
        with nogil:
            status = _e_rec(&s, budget, 0)
        if status == FOUND:
            sol = sorted(s.sol[k] for k in range(s.nsol))
        else:
            sol = []
        return status, sol, s.nodes
    finally:
        free(s.indptr); free(s.eids); free(s.eu); free(s.ev); free(s.dead)
        free(s.kept); free(s.deg); free(s.mark); free(s.used); free(s.buf); free(s.sol)


# ---------------------------------------------------------------------------
# disequality programs


cdef struct DState:
    int nv
    int npe
    long long* lo
    long long* hi
    long long* obj
    long long* eq_rhs
    long long* eqsum
    int* occ_ptr
    int* occ_eq
    long long* occ_coef
    long long* occ_rmin
    long long* occ_rmax
    int* dq_ptr
    int* dq_var
    long long* dq_coef
    long long* dq_const
    int* dq_act
    int* chk_ptr
    int* chk_idx
    long long* free_suffix
    int* pe_eq
    long long* pe_min
    long long* vals
    long long* best
    long long inc
    int found
    long long nodes


cdef inline long long _floordiv(long long a, long long b) nogil:
    # C division truncates toward zero; round toward minus infinity instead
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef void _d_rec(DState* s, int pos, long long cur) nogil:
    cdef long long lb, mn, a, z, c, base, left, right, oc, v, sm
    cdef int p, e, k, d, act, t, ok
    s.nodes += 1
    if pos == s.nv:
        if cur < s.inc:
            s.inc = cur
            s.found = 1
            for k in range(s.nv):
                s.best[k] = s.vals[k]
        return
    lb = cur + s.free_suffix[pos]
    for p in range(s.npe):
        mn = s.pe_min[p * (s.nv + 1) + pos]
        if mn > 0:
            e = s.pe_eq[p]
            lb += (s.eq_rhs[e] - s.eqsum[e]) * mn
    if lb >= s.inc:
        return
    a = s.lo[pos]
    z = s.hi[pos]
    for k in range(s.occ_ptr[pos], s.occ_ptr[pos + 1]):
        c = s.occ_coef[k]
        base = s.eq_rhs[s.occ_eq[k]] - s.eqsum[s.occ_eq[k]]
        left = base - s.occ_rmax[k]
        right = base - s.occ_rmin[k]
        if c > 0:
            a = max(a, -_floordiv(-left, c))
            z = min(z, _floordiv(right, c))
        else:
            a = max(a, -_floordiv(-right, c))
            z = min(z, _floordiv(left, c))
    oc = s.obj[pos]
    v = a
    while v <= z:
        s.vals[pos] = v
        ok = 1
        for k in range(s.chk_ptr[pos], s.chk_ptr[pos + 1]):
            d = s.chk_idx[k]
            act = s.dq_act[d]
            if act >= 0 and s.vals[act] <= 0:
                continue
            sm = s.dq_const[d]
            for t in range(s.dq_ptr[d], s.dq_ptr[d + 1]):
                sm += s.dq_coef[t] * s.vals[s.dq_var[t]]
            if sm == 0:
                ok = 0
                break
        if ok:
            for k in range(s.occ_ptr[pos], s.occ_ptr[pos + 1]):
                s.eqsum[s.occ_eq[k]] += s.occ_coef[k] * v
            _d_rec(s, pos + 1, cur + oc * v)
            for k in range(s.occ_ptr[pos], s.occ_ptr[pos + 1]):
                s.eqsum[s.occ_eq[k]] -= s.occ_coef[k] * v
        v += 1


def diseq_search(prog, cutoff):
    (nv, lo, hi, obj, eq_rhs,
     occ_ptr, occ_eq, occ_coef, occ_rmin, occ_rmax,
     dq_ptr, dq_var, dq_coef, dq_const, dq_act, chk_ptr, chk_idx,
     free_suffix, pe_eq, pe_min) = prog
    cdef DState s
    cdef int k
    s.nv = nv
    s.npe = len(pe_eq)
    s.lo = _longs(lo)
    s.hi = _longs(hi)
    s.obj = _longs(obj)
    s.eq_rhs = _longs(eq_rhs)
    s.eqsum = <long long*> calloc(len(eq_rhs) + 1, sizeof(long long))
    s.occ_ptr = _ints(occ_ptr)
    s.occ_eq = _ints(occ_eq)
    s.occ_coef = _longs(occ_coef)
    s.occ_rmin = _longs(occ_rmin)
    s.occ_rmax = _longs(occ_rmax)
    s.dq_ptr = _ints(dq_ptr)
    s.dq_var = _ints(dq_var)
    s.dq_coef = _longs(dq_coef)
    s.dq_const = _longs(dq_const)
    s.dq_act = _ints(dq_act)
    s.chk_ptr = _ints(chk_ptr)
    s.chk_idx = _ints(chk_idx)
    s.free_suffix = _longs(free_suffix)
    s.pe_eq = _ints(pe_eq)
    s.pe_min = _longs(pe_min)
    s.vals = <long long*> calloc(nv + 1, sizeof(long long))
    s.best = <long long*> calloc(nv + 1, sizeof(long long))
    s.inc = cutoff
    s.found = 0
    s.nodes = 0
    try:
        with nogil:
            _d_rec(&s, 0, 0)
        if not s.found:
            return False, [], 0, s.nodes
        return True, [s.best[k] for k in range(nv)], s.inc, s.nodes
    finally:
        free(s.lo); free(s.hi); free(s.obj); free(s.eq_rhs); free(s.eqsum)
        free(s.occ_ptr); free(s.occ_eq); free(s.occ_coef); free(s.occ_rmin)
        free(s.occ_rmax); free(s.dq_ptr); free(s.dq_var); free(s.dq_coef)
        free(s.dq_const); free(s.dq_act); free(s.chk_ptr); free(s.chk_idx)
        free(s.free_suffix); free(s.pe_eq); free(s.pe_min); free(s.vals); free(s.best)
