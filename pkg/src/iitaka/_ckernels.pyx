# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef enum:
    MAX_DEPTH = 256
SIGMA_EPS = 1e-9


cdef int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef struct Walk:
    int ntypes
    int64_t *rs
    int64_t *bs
    double *ws
    int64_t chi
    double cut
    double floor_
    int depth
    int path[MAX_DEPTH]
    # scratch for the e3 check
    int64_t krs[MAX_DEPTH]
    int64_t kbs[MAX_DEPTH]
    int64_t kmul[MAX_DEPTH]
    int64_t kres[MAX_DEPTH]
    int64_t kscale[MAX_DEPTH]
    long long nodes
    long long hits


cdef bint _e3(Walk *w) nogil:
    cdef int nk = 0
    cdef int i, t
    cdef int64_t period = 1, r, c, acc = 0, base, m
    for i in range(w.depth):
        t = w.path[i]
        if nk > 0 and w.krs[nk - 1] == w.rs[t] and w.kbs[nk - 1] == w.bs[t]:
            w.kmul[nk - 1] += 1
        else:
            w.krs[nk] = w.rs[t]
            w.kbs[nk] = w.bs[t]
            w.kmul[nk] = 1
            nk += 1
    for i in range(nk):
        r = w.krs[i]
        period = period // _gcd(period, r) * r
    for i in range(nk):
        w.kres[i] = 0
        w.kscale[i] = period // w.krs[i]
    base = 2 * period * w.chi
    for m in range(2, period + 2):
        for i in range(nk):
            r = w.krs[i]
            c = w.kres[i] + w.kbs[i]
            if c >= r:
                c -= r
            w.kres[i] = c
            acc += w.kmul[i] * c * (r - c) * w.kscale[i]
        if acc < (2 * m - 1) * base:
            return False
    return True


cdef int _visit(Walk *w, int start, double s, list out) except -1:
    cdef int i
    cdef double t
    for i in range(start, w.ntypes):
        t = s + w.ws[i]
        if t >= w.cut:
            break
        if w.depth >= MAX_DEPTH:
            raise OverflowError("basket walk exceeded maximum depth")
        w.nodes += 1
        w.path[w.depth] = i
        w.depth += 1
        if t > w.floor_:
            w.hits += 1
            if _e3(w):
                out.append(tuple([w.path[k] for k in range(w.depth)]))
        _visit(w, i, t, out)
        w.depth -= 1
    return 0


def walk_baskets(rs, bs, ws, long long chi, double lo, double hi, int first):
    cdef int n = len(rs)
    cdef Walk *w = <Walk *> malloc(sizeof(Walk))
    if w == NULL:
        raise MemoryError()
    w.rs = <int64_t *> malloc(n * sizeof(int64_t))
    w.bs = <int64_t *> malloc(n * sizeof(int64_t))
    w.ws = <double *> malloc(n * sizeof(double))
    cdef list out = []
    cdef int i
    cdef double w0
    try:
        if w.rs == NULL or w.bs == NULL or w.ws == NULL:
            raise MemoryError()
        for i in range(n):
            w.rs[i] = rs[i]
            w.bs[i] = bs[i]
            w.ws[i] = ws[i]
        w.ntypes = n
        w.chi = chi
        w.cut = hi + SIGMA_EPS
        w.floor_ = lo - SIGMA_EPS
        w.depth = 0
        w.nodes = 0
        w.hits = 0
        w0 = w.ws[first]
        if w0 < w.cut:
            w.nodes += 1
            w.path[0] = first
            w.depth = 1
            if w0 > w.floor_:
                w.hits += 1
                if _e3(w):
                    out.append((first,))
            _visit(w, first, w0, out)
        return out, w.nodes, w.hits
    finally:
        free(w.rs)
        free(w.bs)
        free(w.ws)
        free(w)


def dega_min_grid(long long b, long long u, long long n, long long m, long long mp):
    cdef int64_t ka = m * mp
    cdef int64_t kb = u * n * mp
    cdef int64_t kg = u * n * m
    cdef int64_t target = b * n * m * mp
    cdef int64_t gcap = b * mp
    cdef int64_t alpha, beta, gamma, ra, rest, num
    cdef int64_t best = -1, ba = 0, bb = 0, bg = 0
    for alpha in range(1, b * u * n + 1):
        ra = target - alpha * ka
        for beta in range(1, b * m + 1):
            rest = ra - beta * kb
            if rest < 0:
                gamma = 1
            else:
                gamma = rest // kg + 1
                if gamma > gcap:
                    continue
            num = gamma * kg - rest
            if best < 0 or num < best:
                best = num
                ba = alpha
                bb = beta
                bg = gamma
            if rest < 0:
                break
        if ra - kb < 0:
            break
    if best < 0:
        return None
    return best, b * u * n * m * mp, (ba, bb, bg)
