# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, same contract as ``_pykernels`` for graphs with m <= 64."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

MAX_EDGES = 64

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil


cdef struct Ctx:
    int n
    int m
    int *us
    int *vs
    int *ranks
    int *parent
    int *size
    int *aux
    int target
    # activity scratch
    int *head
    int *nxt
    int *to
    int *eid
    int *up
    int *pedge
    int *depth
    int *stack
    # histograms
    uint64_t *hist
    int hist_cols


cdef inline int find(int *parent, int x) nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef inline int find_aux(int *aux, int x) nogil:
    while aux[x] != x:
        x = aux[x]
    return x


cdef void* _alloc(Py_ssize_t nbytes) except NULL:
    cdef void *p = malloc(nbytes if nbytes > 0 else 1)
    if p == NULL:
        raise MemoryError()
    return p


cdef void _clear(Ctx *c):
    c.us = c.vs = c.ranks = c.parent = c.size = c.aux = NULL
    c.head = c.nxt = c.to = c.eid = NULL
    c.up = c.pedge = c.depth = c.stack = NULL
    c.hist = NULL


cdef int _load(Ctx *c, int n, us, vs, ranks) except -1:
    cdef int j
    _clear(c)
    c.n = n
    c.m = len(us)
    if c.m > MAX_EDGES:
        raise ValueError(f"compiled kernels handle at most {MAX_EDGES} edges")
    c.us = <int*>_alloc(c.m * sizeof(int))
    c.vs = <int*>_alloc(c.m * sizeof(int))
    c.ranks = <int*>_alloc(c.m * sizeof(int))
    for j in range(c.m):
        c.us[j] = us[j]
        c.vs[j] = vs[j]
        c.ranks[j] = ranks[j] if ranks is not None else j + 1
    c.parent = <int*>_alloc(n * sizeof(int))
    c.size = <int*>_alloc((n + 2) * sizeof(int))
    c.aux = <int*>_alloc(n * sizeof(int))
    c.head = <int*>_alloc(n * sizeof(int))
    c.nxt = <int*>_alloc(2 * c.m * sizeof(int))
    c.to = <int*>_alloc(2 * c.m * sizeof(int))
    c.eid = <int*>_alloc(2 * c.m * sizeof(int))
    c.up = <int*>_alloc(n * sizeof(int))
    c.pedge = <int*>_alloc(n * sizeof(int))
    c.depth = <int*>_alloc(n * sizeof(int))
    c.stack = <int*>_alloc(n * sizeof(int))
    for j in range(n):
        c.parent[j] = j
        c.size[j] = 1
    return 0


cdef void _release(Ctx *c):
    free(c.us); free(c.vs); free(c.ranks)
    free(c.parent); free(c.size); free(c.aux)
    free(c.head); free(c.nxt); free(c.to); free(c.eid)
    free(c.up); free(c.pedge); free(c.depth); free(c.stack)
    free(c.hist)
    _clear(c)


cdef int _components(Ctx *c) nogil:
    cdef int j, a, b, k = c.n
    for j in range(c.n):
        c.aux[j] = j
    for j in range(c.m):
        a = find_aux(c.aux, c.us[j])
        b = find_aux(c.aux, c.vs[j])
        if a != b:
            c.aux[a] = b
            k -= 1
    return k


cdef bint _reconnectable(Ctx *c, int j, int a, int b) nogil:
    cdef int t, x, y, i
    for i in range(c.n):
        c.aux[i] = i
    for t in range(j + 1, c.m):
        x = find_aux(c.aux, find(c.parent, c.us[t]))
        y = find_aux(c.aux, find(c.parent, c.vs[t]))
        if x != y:
            c.aux[x] = y
            if find_aux(c.aux, a) == find_aux(c.aux, b):
                return True
    return False


cdef void _activity(Ctx *c, uint64_t forest, uint64_t *internal, uint64_t *external) nogil:
    cdef int j, x, y, e, root, sp, k, u, v, r, re, top, cnt = 0
    cdef uint64_t bit, inte = forest, ext = 0
    for j in range(c.n):
        c.head[j] = -1
        c.depth[j] = -1
    for j in range(c.m):
        if (forest >> j) & 1:
            c.to[cnt] = c.vs[j]; c.eid[cnt] = j; c.nxt[cnt] = c.head[c.us[j]]; c.head[c.us[j]] = cnt; cnt += 1
            c.to[cnt] = c.us[j]; c.eid[cnt] = j; c.nxt[cnt] = c.head[c.vs[j]]; c.head[c.vs[j]] = cnt; cnt += 1
    for root in range(c.n):
        if c.depth[root] >= 0:
            continue
        c.depth[root] = 0
        sp = 0
        c.stack[sp] = root
        sp += 1
        while sp > 0:
            sp -= 1
            x = c.stack[sp]
            k = c.head[x]
            while k >= 0:
                y = c.to[k]
                if c.depth[y] < 0:
                    c.depth[y] = c.depth[x] + 1
                    c.up[y] = x
                    c.pedge[y] = c.eid[k]
                    c.stack[sp] = y
                    sp += 1
                k = c.nxt[k]
    for j in range(c.m):
        bit = (<uint64_t>1) << j
        if forest & bit:
            continue
        u = c.us[j]
        v = c.vs[j]
        r = c.ranks[j]
        top = 0
        while u != v:
            if c.depth[u] < c.depth[v]:
                u, v = v, u
            e = c.pedge[u]
            re = c.ranks[e]
            if re > top:
                top = re
            if re < r:
                inte &= ~((<uint64_t>1) << e)
            u = c.up[u]
        if r > top:
            ext |= bit
    internal[0] = inte
    external[0] = ext




# mode 0: collect forest masks; 1: collect (forest, internal, external); 2: histogram of (i, e)
cdef int _forests(Ctx *c, list out, int j, int chosen, uint64_t mask, int mode) except -1:
    cdef int a, b, t
    cdef uint64_t inte, ext
    if chosen == c.target:
        if mode == 0:
            out.append(mask)
        else:
            _activity(c, mask, &inte, &ext)
            if mode == 1:
                out.append((mask, inte, ext))
            else:
                c.hist[popcount(inte) * c.hist_cols + popcount(ext)] += 1
        return 0
    a = find(c.parent, c.us[j])
    b = find(c.parent, c.vs[j])
    if a == b:
        return _forests(c, out, j + 1, chosen, mask, mode)
    if c.size[a] > c.size[b]:
        a, b = b, a
    c.parent[a] = b
    c.size[b] += c.size[a]
    _forests(c, out, j + 1, chosen + 1, mask | ((<uint64_t>1) << j), mode)
    c.size[b] -= c.size[a]
    c.parent[a] = a
    if _reconnectable(c, j, a, b):
        _forests(c, out, j + 1, chosen, mask, mode)
    return 0


cdef object _run_forests(int n, us, vs, ranks, int mode):
    cdef Ctx c
    cdef int i, e
    _clear(&c)
    try:
        _load(&c, n, us, vs, ranks)
        c.target = n - _components(&c)
        out = []
        if mode == 2:
            c.hist_cols = c.m + 1
            c.hist = <uint64_t*>_alloc((c.m + 1) * (c.m + 1) * sizeof(uint64_t))
            for i in range((c.m + 1) * (c.m + 1)):
                c.hist[i] = 0
        _forests(&c, out, 0, 0, 0, mode)
        if mode != 2:
            return out
        hist = {}
        for i in range(c.m + 1):
            for e in range(c.m + 1):
                if c.hist[i * c.hist_cols + e]:
                    hist[(i, e)] = int(c.hist[i * c.hist_cols + e])
        return hist
    finally:
        _release(&c)


def spanning_forests(int n, us, vs):
    return _run_forests(n, us, vs, None, 0)


def forest_activities(int n, us, vs, ranks):
    return _run_forests(n, us, vs, ranks, 1)


def activity_histogram(int n, us, vs, ranks):
    return _run_forests(n, us, vs, ranks, 2)


def forest_activity(int n, us, vs, ranks, forest):
    cdef Ctx c
    cdef uint64_t inte, ext
    _clear(&c)
    try:
        _load(&c, n, us, vs, ranks)
        _activity(&c, <uint64_t>forest, &inte, &ext)
        return int(inte), int(ext)
    finally:
        _release(&c)


cdef void _subsets(Ctx *c, int j, int k, int s) nogil:
    cdef int a, b
    if j == c.m:
        c.hist[k * c.hist_cols + s] += 1
        return
    _subsets(c, j + 1, k, s)
    a = find(c.parent, c.us[j])
    b = find(c.parent, c.vs[j])
    if a == b:
        _subsets(c, j + 1, k, s + 1)
        return
    if c.size[a] > c.size[b]:
        a, b = b, a
    c.parent[a] = b
    c.size[b] += c.size[a]
    _subsets(c, j + 1, k - 1, s + 1)
    c.size[b] -= c.size[a]
    c.parent[a] = a


def subset_histogram(int n, us, vs):
    cdef Ctx c
    cdef int k, s
    _clear(&c)
    try:
        _load(&c, n, us, vs, None)
        c.hist_cols = c.m + 1
        c.hist = <uint64_t*>_alloc((n + 1) * (c.m + 1) * sizeof(uint64_t))
        for k in range((n + 1) * (c.m + 1)):
            c.hist[k] = 0
        with nogil:
            _subsets(&c, 0, n, 0)
        hist = {}
        for k in range(n + 1):
            for s in range(c.m + 1):
                if c.hist[k * c.hist_cols + s]:
                    hist[(k, s)] = int(c.hist[k * c.hist_cols + s])
        return hist
    finally:
        _release(&c)


cdef int _profiles(Ctx *c, int *cnt, int j, int s, dict hist) except -1:
    cdef int a, b, sa, sb, i
    if j == c.m:
        key = (tuple([cnt[i] for i in range(1, c.n + 1)]), s)
        hist[key] = hist.get(key, 0) + 1
        return 0
    _profiles(c, cnt, j + 1, s, hist)
    a = find(c.parent, c.us[j])
    b = find(c.parent, c.vs[j])
    if a == b:
        return _profiles(c, cnt, j + 1, s + 1, hist)
    if c.size[a] > c.size[b]:
        a, b = b, a
    sa = c.size[a]
    sb = c.size[b]
    c.parent[a] = b
    c.size[b] = sa + sb
    cnt[sa] -= 1
    cnt[sb] -= 1
    cnt[sa + sb] += 1
    _profiles(c, cnt, j + 1, s + 1, hist)
    cnt[sa + sb] -= 1
    cnt[sb] += 1
    cnt[sa] += 1
    c.size[b] = sb
    c.parent[a] = a
    return 0


def subset_profile_histogram(int n, us, vs):
    cdef Ctx c
    cdef int i
    cdef int *cnt
    cnt = NULL
    _clear(&c)
    try:
        _load(&c, n, us, vs, None)
        cnt = <int*>_alloc((n + 2) * sizeof(int))
        for i in range(n + 2):
            cnt[i] = 0
        cnt[1] = n
        hist = {}
        _profiles(&c, cnt, 0, 0, hist)
        return hist
    finally:
        free(cnt)
        _release(&c)
