"""Exact rational helpers.

All fractional quantities are :class:`fractions.Fraction`; this module only
adds the text form used in reports ("p/q", or "p" when q == 1).
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: RationalLike) -> str:
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def lcm_of(values: Iterable[int]) -> int:
    """lcm of ``values``; 1 for an empty iterable."""
    return lcm(1, *values)
