"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built or ``IITAKA_PURE_PYTHON`` is set.
"""
from __future__ import annotations

from math import lcm

from .baskets import e3_scaled_check

# Float slack for sigma-window pruning. Exact window membership is decided
# later with Fractions, so this only has to exceed accumulated rounding.
SIGMA_EPS = 1e-9


def walk_baskets(rs, bs, ws, chi, lo, hi, first):
    """Depth-first walk over multisets of entry types starting with ``first``.

    Types are given by parallel lists ``rs``, ``bs`` (sorted by (r, b)) and
    float weights ``ws = r - 1/r``. Entries are added in nondecreasing type
    index, so each multiset is produced once. A branch is cut as soon as its
    weight reaches ``hi + SIGMA_EPS``.

    Returns ``(survivors, nodes, window_hits)`` where ``survivors`` lists the
    index tuples whose weight lies in ``(lo - eps, hi + eps)`` and which pass
    the periodic e3 test.
    """
    ntypes = len(rs)
    cut = hi + SIGMA_EPS
    floor_ = lo - SIGMA_EPS
    survivors = []
    stack = []
    nodes = 0
    window_hits = 0

    def check(path):
        kinds, mults = [], []
        for t in path:
            if kinds and kinds[-1] == t:
                mults[-1] += 1
            else:
                kinds.append(t)
                mults.append(1)
        krs = [rs[t] for t in kinds]
        period = lcm(*krs)
        return e3_scaled_check(krs, [bs[t] for t in kinds], mults, chi, period)

    def visit(start, s):
        nonlocal nodes, window_hits
        for i in range(start, ntypes):
            t = s + ws[i]
            if t >= cut:
                break
            nodes += 1
            stack.append(i)
            if t > floor_:
                window_hits += 1
                if check(stack):
                    survivors.append(tuple(stack))
            visit(i, t)
            stack.pop()

    w0 = ws[first]
    if w0 < cut:
        nodes += 1
        stack.append(first)
        if w0 > floor_:
            window_hits += 1
            if check(stack):
                survivors.append(tuple(stack))
        visit(first, w0)
    return survivors, nodes, window_hits


def dega_min_grid(b, u, n, m, mp):
    """Least positive ``a/(bun) + c/(bm) + g/(bm') - 1/u`` on the capped grid.

    ``a <= b*u*n``, ``c <= b*m``, ``g <= b*m'``. The value is returned as the
    numerator over the common denominator ``b*u*n*m*mp`` together with
    ``(alpha, beta, gamma)``; ties keep the lexicographically first triple.
    Returns ``None`` when no grid point is positive.
    """
    ka = m * mp          # alpha coefficient
    kb = u * n * mp      # beta coefficient
    kg = u * n * m       # gamma coefficient
    target = b * n * m * mp
    best = None
    best_abg = None
    gcap = b * mp
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
            if best is None or num < best:
                best = num
                best_abg = (alpha, beta, gamma)
            if rest < 0:
                # larger beta only increases the value
                break
        if ra - kb < 0:
            # (alpha, 1, 1) is already positive; larger alpha cannot do better
            break
    if best is None:
        return None
    return best, b * u * n * m * mp, best_abg
