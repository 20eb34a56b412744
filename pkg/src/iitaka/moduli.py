"""Lower bounds for deg A = deg(K_C + M + B) over a rational base curve.

Covers the reduced three-term expression searched in the abelian (b = 1)
and bielliptic (b in {4, 6}) cases, the closed-form case bounds around it,
the orbifold bound for isotrivial fibrations, and the admissible Cartier
indices of the moduli part.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Literal

from . import kernels
from .rational import format_rational, lcm_of

Fiber = Literal["abelian", "bielliptic"]

# Denominators from the Cartier indices of M: every admissible index for an
# abelian cover divides one of these.
DENOMS = (12, 10, 8)
# Searched in this order; it fixes the tie-break among equal minima.
DENOM_ORDER = tuple(permutations(DENOMS))
U_RANGE = range(2, 13)
FIBER_INDICES = (1, 4, 6)
# dim H^2_prim of an abelian surface
ABELIAN_H2_PRIM = 5
FIBER_B_VALUES = {"abelian": (1,), "bielliptic": (4, 6)}


class ModuliError(ValueError):
    pass


@dataclass(frozen=True)
class DegAWitness:
    u: int
    denoms: tuple[int, int, int]
    alpha: int
    beta: int
    gamma: int
    b: int
    value: Fraction

    def to_dict(self) -> dict[str, object]:
        return {
            "u": self.u,
            "denoms": list(self.denoms),
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "b": self.b,
            "value": format_rational(self.value),
        }


@dataclass(frozen=True)
class CaseBound:
    case_label: str
    bound: Fraction
    witness: DegAWitness | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "case": self.case_label,
            "bound": format_rational(self.bound),
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class HurwitzSignature:
    orders: tuple[int, ...]
    delta: Fraction

    def to_dict(self) -> dict[str, object]:
        return {"orders": list(self.orders), "delta": format_rational(self.delta)}


def _check_params(u, denoms, alpha, beta, gamma, b) -> None:
    if u not in U_RANGE:
        raise ModuliError(f"u must lie in [2, 12], got {u}")
    if sorted(denoms) != sorted(DENOMS):
        raise ModuliError(f"denominators must permute {DENOMS}, got {denoms}")
    if min(alpha, beta, gamma) < 1:
        raise ModuliError("alpha, beta, gamma must be >= 1")
    if b not in FIBER_INDICES:
        raise ModuliError(f"b must be one of {FIBER_INDICES}, got {b}")


def eval_degA_expr(u: int, denoms: tuple[int, int, int], alpha: int, beta: int,
                   gamma: int, b: int = 1) -> Fraction:
    """``alpha/(bun) + beta/(bm) + gamma/(bm') - 1/u`` exactly."""
    _check_params(u, tuple(denoms), alpha, beta, gamma, b)
    n, m, mp = denoms
    return (Fraction(alpha, b * u * n) + Fraction(beta, b * m)
            + Fraction(gamma, b * mp) - Fraction(1, u))


def make_witness(u, denoms, alpha, beta, gamma, b) -> DegAWitness:
    denoms = tuple(denoms)
    return DegAWitness(u, denoms, alpha, beta, gamma, b,
                       eval_degA_expr(u, denoms, alpha, beta, gamma, b))


def min_positive_degA(b_values: Iterable[int]) -> DegAWitness:
    """Least positive value of the reduced expression over the capped grid.

    The grid is u in [2, 12], the six orders of (12, 10, 8), and
    ``alpha <= b*u*n``, ``beta <= b*m``, ``gamma <= b*m'``. The expression
    increases strictly in alpha, beta and gamma, and at a cap the capped
    term alone is already >= 1 > 1/u, so nothing past the caps can be a
    smaller positive value. Ties go to the first point in (b, u, denominator
    order, alpha, beta, gamma) order.
    """
    bs = sorted(set(b_values))
    if not bs:
        raise ModuliError("b_values must be non-empty")
    for b in bs:
        if b not in FIBER_INDICES:
            raise ModuliError(f"b must be one of {FIBER_INDICES}, got {b}")
    best: DegAWitness | None = None
    for b in bs:
        for u in U_RANGE:
            for denoms in DENOM_ORDER:
                hit = kernels.dega_min_grid(b, u, *denoms)
                if hit is None:
                    continue
                num, den, (alpha, beta, gamma) = hit
                value = Fraction(num, den)
                if best is None or value < best.value:
                    best = DegAWitness(u, denoms, alpha, beta, gamma, b, value)
    assert best is not None
    return best


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi is defined for n >= 1")
    result, p, k = n, 2, n
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def admissible_indices(betti_bound: int) -> frozenset[int]:
    """All n with phi(n) <= betti_bound.

    phi(n) >= sqrt(n/2), so no n beyond 2 * betti_bound**2 qualifies.
    """
    if betti_bound < 1:
        raise ModuliError("betti_bound must be >= 1")
    limit = max(2, 2 * betti_bound * betti_bound)
    return frozenset(n for n in range(1, limit + 1) if euler_phi(n) <= betti_bound)


def _delta(orders: Iterable[int]) -> Fraction:
    return -2 + sum((1 - Fraction(1, k) for k in orders), Fraction(0))


def hurwitz_min_positive(order_cap: int = 84, count_cap: int = 4) -> HurwitzSignature:
    """Least positive ``-2 + sum(1 - 1/m_i)`` over small orbifold signatures.

    Each term is at least 1/2, so any signature with five or more orders
    already has delta >= 1/2; four orders suffice for values below 1/6.
    """
    if order_cap < 7:
        raise ModuliError("order_cap must be >= 7")
    if count_cap < 3:
        raise ModuliError("count_cap must be >= 3")
    best: list = [None, None]

    def visit(prefix: list[int], partial: Fraction) -> None:
        if len(prefix) == count_cap:
            return
        lo = prefix[-1] if prefix else 2
        for k in range(lo, order_cap + 1):
            value = partial + 1 - Fraction(1, k)
            if value > 0:
                if best[0] is None or value < best[0]:
                    best[0], best[1] = value, tuple(prefix + [k])
                # larger orders and longer signatures only increase delta
                break
            visit(prefix + [k], value)

    visit([], Fraction(-2))
    if best[0] is None:
        raise ModuliError("no signature with positive delta under these caps")
    return HurwitzSignature(best[1], best[0])


def dega_lower_bound(fiber: Fiber) -> tuple[Fraction, list[CaseBound]]:
    """Case-by-case lower bounds on deg A and their minimum.

    Cases follow the set I of points whose u_P > 1. The non-searched cases
    are closed forms in the largest admissible index n_max = 12 (and
    lcm 120 of all admissible indices).
    """
    if fiber not in FIBER_B_VALUES:
        raise ModuliError(f"unknown fiber {fiber!r}")
    indices = admissible_indices(ABELIAN_H2_PRIM)
    cartier = lcm_of(indices)
    n_max = max(indices)
    b_max = max(FIBER_B_VALUES[fiber])

    # two points with u = 2 and u = 3 give -1 + 1/2 + 2/3; three or more
    # points with u >= 2 give at least -1 + 3/2
    many = min(_delta([2, 3]) + 1, _delta([2, 2, 2]) + 1)
    two_halves = Fraction(2, n_max)
    past_twelve = Fraction(1, n_max) - Fraction(1, 13)
    searched = min_positive_degA(FIBER_B_VALUES[fiber])

    if fiber == "abelian":
        cases = [
            CaseBound("|I|=0", Fraction(1, cartier)),
            CaseBound("|I|>=3 or some u>=3", many),
            CaseBound("|I|=2, u=2", two_halves),
        ]
    else:
        cases = [
            CaseBound("|I|=0", Fraction(1, cartier * b_max)),
            CaseBound("|I|>=3 or some u>=3", many),
            CaseBound("|I|=2", two_halves),
        ]
    cases.append(CaseBound("|I|=1, u>=13", past_twelve))
    cases.append(CaseBound("|I|=1, u<=12", searched.value, searched))
    return min(c.bound for c in cases), cases
