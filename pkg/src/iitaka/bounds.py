"""Effective pluricanonical bounds assembled from the searches.

With ``F = lambda K_X`` numerically, two sections of ``mK_X`` exist once
``m > 2 lambda + 1`` (and ``|mK_F|`` is non-empty), and over P^1 two
sections are enough to define the Iitaka fibration. Every lambda used here
is recomputed by the corresponding search in the same call.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import max_lambda, max_lambda_check
from .moduli import dega_lower_bound, hurwitz_min_positive
from .rational import RationalLike, format_rational, to_rational

# number of sections needed on a rational base
SECTIONS = 2
NONRATIONAL_B = (2, 3, 4, 6)


class ReproductionError(RuntimeError):
    """A search could not establish the bound it is supposed to provide."""


class FiberType(enum.Enum):
    K3 = ("K3", (1,))
    ENRIQUES = ("Enriques", (2,))
    ABELIAN_NON_ISOTRIVIAL = ("AbelianNonIsotrivial", (1,))
    ABELIAN_ISOTRIVIAL = ("AbelianIsotrivial", (1,))
    BIELLIPTIC_ISOTRIVIAL = ("BiellipticIsotrivial", (4, 6))
    BIELLIPTIC_NON_ISOTRIVIAL = ("BiellipticNonIsotrivial", (4, 6))
    NON_RATIONAL_BASE = ("NonRationalBase", NONRATIONAL_B)

    def __init__(self, tag: str, b_values: tuple[int, ...]) -> None:
        self.tag = tag
        self.b_values = b_values

    @classmethod
    def parse(cls, text: str) -> "FiberType":
        key = text.replace("-", "").replace("_", "").lower()
        for ft in cls:
            if ft.tag.lower() == key:
                return ft
        raise ValueError(f"unknown fiber type {text!r}")


@dataclass
class BoundCertificate:
    fiber: FiberType
    lambda_bound: Fraction | None
    divisibility: int
    m_min: int
    provenance: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, object]:
        return {
            "fiber": self.fiber.tag,
            "b_values": list(self.fiber.b_values),
            "lambda_bound": (None if self.lambda_bound is None
                             else format_rational(self.lambda_bound)),
            "divisibility": self.divisibility,
            "m_min": self.m_min,
            "provenance": list(self.provenance),
        }


def pluricanonical_threshold(lambda_bound: RationalLike, divisibility: int) -> int:
    """Least m with ``m > 2 * lambda_bound + 1`` and ``divisibility | m``."""
    lam = to_rational(lambda_bound)
    if lam < 0:
        raise ValueError("lambda_bound must be >= 0")
    if divisibility < 1:
        raise ValueError("divisibility must be >= 1")
    first = math.floor(lam * SECTIONS + 1) + 1
    return -(-first // divisibility) * divisibility


def nonrational_bound(b_fiber: int) -> tuple[int, int]:
    """For a base of genus >= 1: ``(3b, m12)``.

    ``|3bK_X|`` defines the fibration, hence so does ``|mK_X|`` for every
    multiple m of b with m >= 3b. ``m12`` is the least multiple of 12 past
    which this holds for all b in {2, 3, 4, 6} at once.
    """
    if b_fiber not in NONRATIONAL_B:
        raise ValueError(f"b must be one of {NONRATIONAL_B}, got {b_fiber}")
    need = max(3 * b for b in NONRATIONAL_B)
    return 3 * b_fiber, -(-need // 12) * 12


def _certificate(fiber: FiberType, lam: Fraction, d: int, notes: list[str]) -> BoundCertificate:
    m = pluricanonical_threshold(lam, d)
    notes.append(f"pluricanonical_threshold({format_rational(lam)}, {d}) = {m}")
    return BoundCertificate(fiber, lam, d, m, notes)


def _surface_lambda(kind: str, jobs: int) -> tuple[Fraction, list[str]]:
    top, attained = max_lambda(kind, jobs=jobs)
    check = max_lambda_check(kind, top, jobs=jobs)
    if not check.empty_above:
        raise ReproductionError(f"{kind}: baskets found with lambda > {top}")
    notes = [
        f"max_lambda({kind}) = {format_rational(top)}",
        f"max_lambda_check({kind}, {format_rational(top)}): empty_above = true, "
        f"{len(check.witnesses_at_bound)} witness(es) at bound",
    ]
    notes += [f"witness chi_X={w.chi_X} basket={w.basket.format()}"
              for w in check.witnesses_at_bound]
    return top, notes


def fiber_bound(fiber: FiberType, jobs: int = 1) -> BoundCertificate:
    if fiber is FiberType.K3:
        lam, notes = _surface_lambda("k3", jobs)
        return _certificate(fiber, lam, 1, notes)
    if fiber is FiberType.ENRIQUES:
        lam, notes = _surface_lambda("enriques", jobs)
        # |mK_F| is non-empty only for even m
        return _certificate(fiber, lam, 2, notes)
    if fiber in (FiberType.ABELIAN_NON_ISOTRIVIAL, FiberType.BIELLIPTIC_NON_ISOTRIVIAL):
        kind = "abelian" if fiber is FiberType.ABELIAN_NON_ISOTRIVIAL else "bielliptic"
        overall, cases = dega_lower_bound(kind)
        notes = [f"dega_lower_bound({kind}) = {format_rational(overall)}"]
        notes += [f"case {c.case_label}: {format_rational(c.bound)}" for c in cases]
        witness = cases[-1].witness
        if witness is not None:
            notes.append(
                f"search witness b={witness.b} u={witness.u} denoms={witness.denoms} "
                f"alpha={witness.alpha} beta={witness.beta} gamma={witness.gamma}")
        d = 1 if kind == "abelian" else 12
        return _certificate(fiber, 1 / overall, d, notes)
    if fiber in (FiberType.ABELIAN_ISOTRIVIAL, FiberType.BIELLIPTIC_ISOTRIVIAL):
        sig = hurwitz_min_positive()
        notes = [f"hurwitz_min_positive() = {format_rational(sig.delta)} "
                 f"at orders {sig.orders}",
                 "threshold applied as m >= bound; the isotrivial proof text reads "
                 "'r <= 86', taken as a typo for the m >= 86 direction"]
        d = 1 if fiber is FiberType.ABELIAN_ISOTRIVIAL else 12
        return _certificate(fiber, 1 / sig.delta, d, notes)
    if fiber is FiberType.NON_RATIONAL_BASE:
        notes, m12 = [], None
        for b in NONRATIONAL_B:
            first, m12 = nonrational_bound(b)
            notes.append(f"nonrational_bound({b}) = ({first}, {m12})")
        return BoundCertificate(fiber, None, 12, m12, notes)
    raise ValueError(f"unhandled fiber type {fiber!r}")


def theorem_table(jobs: int = 1) -> list[BoundCertificate]:
    return [fiber_bound(ft, jobs) for ft in FiberType]
