"""Exhaustive search for baskets in a lambda window.

For a fiber with ``chi(O_F)`` and a threefold with ``chi(O_X) = chi``,
``lambda > N`` (or ``>= N``) is equivalent to

    24 chi < sigma < 24 chi + 12 chi(O_F) / N     (or ``<=`` on the right)

with ``sigma = sum (r - 1/r)``. Every entry weighs at least 3/2, so the
window bounds both the indices and the number of entries. Baskets in the
window are then filtered by the e3 condition.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Literal

from . import kernels
from .baskets import (Basket, basket_sigma, lambda_from_basket, local_contribution,
                      satisfies_e3)
from .rational import RationalLike, format_rational, to_rational

Comparison = Literal["strict", "closed"]

FIBER_CHI_F = {"k3": 2, "enriques": 1}
# chi(O_X) ranges established for each fiber type
FIBER_CHI_X = {"k3": (0, 1, 2), "enriques": (1,)}

ORACLE_MAX_R = 12
ORACLE_MAX_COUNT = 8


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchWindow:
    chi_F: int
    chi_X_values: tuple[int, ...]
    threshold: Fraction
    comparison: Comparison = "strict"

    def __post_init__(self) -> None:
        object.__setattr__(self, "threshold", to_rational(self.threshold))
        object.__setattr__(self, "chi_X_values",
                           tuple(sorted(set(self.chi_X_values))))
        if self.chi_F not in (1, 2):
            raise SearchError(f"chi(O_F) must be 1 or 2, got {self.chi_F}")
        if self.threshold <= 0:
            raise SearchError("threshold must be positive")
        if self.comparison not in ("strict", "closed"):
            raise SearchError(f"unknown comparison {self.comparison!r}")
        if not self.chi_X_values:
            raise SearchError("no chi(O_X) values given")
        if min(self.chi_X_values) < 0:
            raise SearchError("chi(O_X) values must be non-negative")

    @classmethod
    def for_fiber(cls, fiber: str, threshold: RationalLike,
                  comparison: Comparison = "strict",
                  chi_X_values: Iterable[int] | None = None) -> "SearchWindow":
        fiber = fiber.lower()
        if fiber not in FIBER_CHI_F:
            raise SearchError(f"unknown fiber {fiber!r}")
        chis = FIBER_CHI_X[fiber] if chi_X_values is None else tuple(chi_X_values)
        return cls(FIBER_CHI_F[fiber], tuple(chis), to_rational(threshold), comparison)

    def upper(self, chi: int) -> Fraction:
        return 24 * chi + Fraction(12 * self.chi_F) / self.threshold

    def contains(self, chi: int, sigma: Fraction) -> bool:
        if sigma <= 24 * chi:
            return False
        if self.comparison == "strict":
            return sigma < self.upper(chi)
        return sigma <= self.upper(chi)

    def describe(self) -> dict[str, object]:
        return {
            "chi_F": self.chi_F,
            "chi_X_values": list(self.chi_X_values),
            "threshold": format_rational(self.threshold),
            "comparison": self.comparison,
        }


@dataclass(frozen=True)
class SearchResult:
    basket: Basket
    sigma: Fraction
    lam: Fraction

    @property
    def chi_X(self) -> int:
        return self.basket.chi_X

    def sort_key(self) -> tuple:
        return (self.basket.chi_X, tuple(self.basket.points()))

    def to_dict(self) -> dict[str, object]:
        return {
            "chi_X": self.basket.chi_X,
            "basket": self.basket.format(),
            "sigma": format_rational(self.sigma),
            "lambda": format_rational(self.lam),
        }


@dataclass
class SearchRun:
    window: SearchWindow
    results: list[SearchResult]
    nodes: int = 0
    window_hits: int = 0
    per_chi: dict[int, dict[str, int]] = field(default_factory=dict)


def entry_types(upper: Fraction) -> list[tuple[int, int]]:
    """Canonical ``(r, b)`` with ``r - 1/r <= upper``, sorted."""
    out = []
    r = 2
    while r - Fraction(1, r) <= upper:
        out.extend((r, b) for b in range(1, r // 2 + 1) if gcd(r, b) == 1)
        r += 1
    return out


def make_result(basket: Basket, chi_F: int) -> SearchResult:
    return SearchResult(basket, basket_sigma(basket), lambda_from_basket(basket, chi_F))


def _walk_task(args):
    rs, bs, ws, chi, lo, hi, first, depth = args
    return kernels.walk_baskets(rs, bs, ws, chi, lo, hi, first, depth)


def search_window(window: SearchWindow, jobs: int = 1) -> SearchRun:
    """Run the pruned walk for every chi in the window; see module docstring.

    The work is split by chi and by the first (smallest) entry type; the
    merge sorts into canonical order, so ``jobs`` never changes the output.
    """
    if jobs < 1:
        raise SearchError("jobs must be >= 1")
    tasks, owners = [], []
    plans = {}
    for chi in window.chi_X_values:
        upper = window.upper(chi)
        types = entry_types(upper)
        plans[chi] = types
        rs = [r for r, _ in types]
        bs = [b for _, b in types]
        ws = [r - 1.0 / r for r in rs]
        depth = int(upper / Fraction(3, 2)) + 1
        for first in range(len(types)):
            tasks.append((rs, bs, ws, chi, float(24 * chi), float(upper), first, depth))
            owners.append(chi)

    if jobs == 1 or len(tasks) <= 1:
        outputs = [_walk_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_walk_task, tasks, chunksize=4))

    run = SearchRun(window, [])
    for chi in window.chi_X_values:
        run.per_chi[chi] = {"types": len(plans[chi]), "nodes": 0, "window_hits": 0,
                            "survivors": 0}
    for chi, (survivors, nodes, hits) in zip(owners, outputs):
        stats = run.per_chi[chi]
        stats["nodes"] += nodes
        stats["window_hits"] += hits
        types = plans[chi]
        for path in survivors:
            basket = Basket.from_pairs((types[i] for i in path), chi_X=chi)
            sigma = basket_sigma(basket)
            if not window.contains(chi, sigma):
                continue
            stats["survivors"] += 1
            run.results.append(make_result(basket, window.chi_F))
    run.results.sort(key=SearchResult.sort_key)
    run.nodes = sum(s["nodes"] for s in run.per_chi.values())
    run.window_hits = sum(s["window_hits"] for s in run.per_chi.values())
    return run


def enumerate_baskets(window: SearchWindow, jobs: int = 1) -> list[SearchResult]:
    return search_window(window, jobs).results


def verify_result(result: SearchResult, window: SearchWindow) -> bool:
    """Independent soundness re-check of one search result."""
    b = result.basket
    if b.chi_X not in window.chi_X_values or b.k_cubed != 0:
        return False
    sigma = basket_sigma(b)
    if sigma != result.sigma or not window.contains(b.chi_X, sigma):
        return False
    if result.lam * (sigma - 24 * b.chi_X) != 12 * window.chi_F:
        return False
    return satisfies_e3(b)


@dataclass
class LambdaCheck:
    fiber: str
    claimed_bound: Fraction
    empty_above: bool
    above: list[SearchResult]
    witnesses_at_bound: list[SearchResult]


def max_lambda_check(fiber: str, claimed_bound: RationalLike, jobs: int = 1) -> LambdaCheck:
    """Check that no basket has lambda above ``claimed_bound``.

    Runs the strict window (expected empty) and the closed window, whose
    results are then exactly the baskets attaining the bound.
    """
    bound = to_rational(claimed_bound)
    if bound <= 0:
        raise SearchError("claimed bound must be positive")
    strict = enumerate_baskets(SearchWindow.for_fiber(fiber, bound, "strict"), jobs)
    closed = enumerate_baskets(SearchWindow.for_fiber(fiber, bound, "closed"), jobs)
    at_bound = [r for r in closed if r.lam == bound]
    return LambdaCheck(fiber.lower(), bound, not strict, strict, at_bound)


def _chi_mK_values(basket: Basket, last_m: int) -> Iterable[Fraction]:
    """chi(mK) for m = 2 .. last_m, accumulating l(m) term by term."""
    l_m = Fraction(0)
    for m in range(2, last_m + 1):
        l_m += sum((e.multiplicity * local_contribution(e, m - 1)
                    for e in basket.entries), Fraction(0))
        yield (1 - 2 * m) * basket.chi_X + l_m


def max_lambda(fiber: str, start: int = 1024, floor: int = 4, jobs: int = 1) -> tuple[Fraction, list[SearchResult]]:
    """Largest lambda over all admissible baskets of ``fiber``.

    Halves the threshold from ``start`` until the closed window is non-empty
    (windows grow quickly as the threshold drops, hence ``floor``).
    That window holds every basket with lambda >= N, so its largest lambda is
    the global maximum. Returns it with the baskets attaining it.
    """
    n = Fraction(start)
    while n >= floor:
        found = enumerate_baskets(SearchWindow.for_fiber(fiber, n, "closed"), jobs)
        if found:
            top = max(r.lam for r in found)
            return top, [r for r in found if r.lam == top]
        n /= 2
    raise SearchError(f"no admissible basket with lambda >= {floor} for {fiber}")


def brute_force_oracle(window: SearchWindow, r_cap: int, count_cap: int) -> list[SearchResult]:
    """Unpruned generate-and-filter search over small baskets.

    Every multiset of at most ``count_cap`` entries with indices ``<= r_cap``
    is built and tested exactly, with e3 checked straight from the
    plurigenus formula. Only for cross-checking the pruned walk.
    """
    if not 2 <= r_cap <= ORACLE_MAX_R:
        raise SearchError(f"r_cap must lie in [2, {ORACLE_MAX_R}]")
    if not 0 <= count_cap <= ORACLE_MAX_COUNT:
        raise SearchError(f"count_cap must lie in [0, {ORACLE_MAX_COUNT}]")
    types = [(r, b) for r in range(2, r_cap + 1) for b in range(1, r // 2 + 1)
             if gcd(r, b) == 1]
    out = []
    for chi in window.chi_X_values:
        for k in range(1, count_cap + 1):
            for combo in itertools.combinations_with_replacement(types, k):
                sigma = sum((r - Fraction(1, r) for r, _ in combo), Fraction(0))
                if not window.contains(chi, sigma):
                    continue
                basket = Basket.from_pairs(combo, chi_X=chi)
                if all(v >= 0 for v in _chi_mK_values(basket, basket.period + 1)):
                    out.append(make_result(basket, window.chi_F))
    out.sort(key=SearchResult.sort_key)
    return out
