"""Reid baskets and the plurigenus formula for D = mK.

A basket is a multiset of terminal cyclic quotient data ``(r, b)`` with
``gcd(b, r) = 1``. Every quantity computed here is symmetric under
``b -> r - b``, so baskets are stored with ``b <= r // 2``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .rational import format_rational, lcm_of, to_rational


class BasketError(ValueError):
    """Invalid basket data or a basket outside an operation's domain."""


@dataclass(frozen=True, order=True)
class BasketEntry:
    r: int
    b: int
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.r < 2:
            raise BasketError(f"local index must be >= 2, got r={self.r}")
        if not 1 <= self.b <= self.r - 1:
            raise BasketError(f"need 1 <= b <= r-1, got ({self.r},{self.b})")
        if gcd(self.r, self.b) != 1:
            raise BasketError(f"gcd(b, r) must be 1, got ({self.r},{self.b})")
        if self.multiplicity < 1:
            raise BasketError(f"multiplicity must be >= 1, got {self.multiplicity}")

    @property
    def key(self) -> tuple[int, int]:
        return (self.r, self.b)

    def canonical(self) -> "BasketEntry":
        return BasketEntry(self.r, min(self.b, self.r - self.b), self.multiplicity)


def _merge(entries: Iterable[BasketEntry]) -> tuple[BasketEntry, ...]:
    counts: Counter[tuple[int, int]] = Counter()
    for e in entries:
        e = e.canonical()
        counts[e.key] += e.multiplicity
    return tuple(BasketEntry(r, b, k) for (r, b), k in sorted(counts.items()))


@dataclass(frozen=True)
class Basket:
    entries: tuple[BasketEntry, ...] = ()
    chi_X: int = 0
    k_cubed: Fraction = field(default=Fraction(0))

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _merge(self.entries))
        object.__setattr__(self, "k_cubed", to_rational(self.k_cubed))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], chi_X: int = 0,
                   k_cubed: Fraction = Fraction(0)) -> "Basket":
        return cls(tuple(BasketEntry(r, b) for r, b in pairs), chi_X, k_cubed)

    @classmethod
    def parse(cls, text: str, chi_X: int = 0) -> "Basket":
        return cls(parse_entries(text), chi_X)

    def points(self) -> Iterator[tuple[int, int]]:
        """Yield each ``(r, b)`` once per unit of multiplicity."""
        for e in self.entries:
            for _ in range(e.multiplicity):
                yield e.key

    @property
    def size(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def period(self) -> int:
        """lcm of the local indices (1 for the empty basket)."""
        return lcm_of(e.r for e in self.entries)

    def format(self) -> str:
        return format_entries(self.entries)

    def __str__(self) -> str:
        return self.format() or "{}"


_ENTRY_RE = re.compile(r"^(\d+),(\d+)(?:x(\d+))?$")


def parse_entries(text: str) -> tuple[BasketEntry, ...]:
    """Parse ``"2,1x8;3,1x6;7,1"``. Whitespace is ignored; "" is empty."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        return ()
    out = []
    for chunk in compact.split(";"):
        m = _ENTRY_RE.match(chunk)
        if m is None:
            raise BasketError(f"malformed basket entry {chunk!r}")
        r, b, k = int(m.group(1)), int(m.group(2)), int(m.group(3) or 1)
        out.append(BasketEntry(r, b, k))
    return tuple(out)


def format_entries(entries: Iterable[BasketEntry]) -> str:
    parts = []
    for e in entries:
        s = f"{e.r},{e.b}"
        if e.multiplicity > 1:
            s += f"x{e.multiplicity}"
        parts.append(s)
    return ";".join(parts)


def normalize(basket: Basket) -> Basket:
    # Construction already canonicalizes; kept as an explicit operation.
    return Basket(basket.entries, basket.chi_X, basket.k_cubed)


def local_contribution(e: BasketEntry, j: int) -> Fraction:
    """``c(r - c) / 2r`` with ``c = jb mod r``; multiplicity is not applied."""
    if j < 0:
        raise ValueError("j must be >= 0")
    c = (j * e.b) % e.r
    return Fraction(c * (e.r - c), 2 * e.r)


def l_of_m(basket: Basket, m: int) -> Fraction:
    if m < 1:
        raise ValueError("m must be >= 1")
    total = Fraction(0)
    for e in basket.entries:
        s = sum(local_contribution(e, j) for j in range(1, m))
        total += e.multiplicity * s
    return total


def chi_mK(basket: Basket, m: int) -> Fraction:
    if m < 1:
        raise ValueError("m must be >= 1")
    cubic = Fraction(m * (m - 1) * (2 * m - 1), 12) * basket.k_cubed
    return cubic + (1 - 2 * m) * basket.chi_X + l_of_m(basket, m)


def basket_sigma(basket: Basket) -> Fraction:
    return sum((e.multiplicity * (e.r - Fraction(1, e.r)) for e in basket.entries),
               Fraction(0))


def k_dot_c2(basket: Basket) -> Fraction:
    return -24 * basket.chi_X + basket_sigma(basket)


def _require_kod_one(basket: Basket) -> Fraction:
    if basket.k_cubed != 0:
        raise BasketError("K^3 must vanish for Kodaira dimension one")
    excess = basket_sigma(basket) - 24 * basket.chi_X
    if excess <= 0:
        raise BasketError(
            f"sigma - 24 chi = {format_rational(excess)} is not positive")
    return excess


def lambda_from_basket(basket: Basket, chi_F: int) -> Fraction:
    """The fiber multiple ``lambda`` with ``12 chi_F / lambda = K.c2``."""
    if chi_F not in (1, 2):
        raise BasketError(f"chi(O_F) must be 1 or 2, got {chi_F}")
    return Fraction(12 * chi_F) / _require_kod_one(basket)


def e3_scaled_check(rs: list[int], bs: list[int], mults: list[int], chi: int,
                    period: int) -> bool:
    """``chi(mK) >= 0`` for m = 2 .. period + 1, in integers.

    Everything is multiplied by ``2 * period`` so each local term
    ``c(r - c) / 2r`` becomes the integer ``c(r - c) * (period / r)``.
    Residues ``c = (m - 1) b mod r`` are advanced incrementally.
    """
    scale = [period // r for r in rs]
    res = [0] * len(rs)
    acc = 0
    base = 2 * period * chi
    for m in range(2, period + 2):
        for i, r in enumerate(rs):
            c = res[i] + bs[i]
            if c >= r:
                c -= r
            res[i] = c
            acc += mults[i] * c * (r - c) * scale[i]
        if acc < (2 * m - 1) * base:
            return False
    return True


def satisfies_e3(basket: Basket) -> bool:
    """Whether ``(1 - 2m) chi(O_X) + l(m) >= 0`` for every ``m > 1``.

    Over one period ``L`` of the residues the left side changes by exactly
    ``L (sigma - 24 chi) / 12``. If that is negative the statement fails for
    large m; otherwise checking ``m <= L + 1`` decides it for all m.
    """
    if basket.k_cubed != 0:
        raise BasketError("K^3 must vanish for Kodaira dimension one")
    if basket_sigma(basket) < 24 * basket.chi_X:
        return False
    es = basket.entries
    return e3_scaled_check([e.r for e in es], [e.b for e in es],
                           [e.multiplicity for e in es], basket.chi_X,
                           basket.period)
