"""Intervals with open/closed/infinite bounds over the rationals.

An interval is a pair of bounds.  A bound is either finite -- carrying a
rational value and an open/closed flag -- or infinite (the lower bound then
reads as -oo, the upper as +oo).  Intervals may be empty; emptiness is
decidable and ``subint`` treats an empty interval as a subset of anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .rational import format_rational, parse_rational


@dataclass(frozen=True)
class Bound:
    """Finite bound (value + open/closed flag) or infinite bound (value None)."""

    value: Optional[Fraction]
    closed: bool = False

    @property
    def infinite(self) -> bool:
        return self.value is None


def finite(value: Fraction, closed: bool) -> Bound:
    return Bound(Fraction(value), closed)


INF = Bound(None)


@dataclass(frozen=True)
class Interval:
    lo: Bound
    hi: Bound

    def __str__(self) -> str:
        return format_interval(self)


def closed(a: Fraction, b: Fraction) -> Interval:
    """[a, b]"""
    return Interval(finite(a, True), finite(b, True))


def open_(a: Fraction, b: Fraction) -> Interval:
    """]a, b["""
    return Interval(finite(a, False), finite(b, False))


def full_line() -> Interval:
    """]-oo, +oo["""
    return Interval(INF, INF)


def mem(x: Fraction, i: Interval) -> bool:
    """Membership: strict comparison on open bounds, non-strict on closed,
    vacuous on infinite."""
    lo, hi = i.lo, i.hi
    if not lo.infinite:
        if x < lo.value or (x == lo.value and not lo.closed):
            return False
    if not hi.infinite:
        if x > hi.value or (x == hi.value and not hi.closed):
            return False
    return True


def is_empty(i: Interval) -> bool:
    """Decide whether the interval contains no real point."""
    lo, hi = i.lo, i.hi
    if lo.infinite or hi.infinite:
        return False
    if lo.value < hi.value:
        return False
    if lo.value == hi.value:
        return not (lo.closed and hi.closed)
    return True


def subint(i1: Interval, i2: Interval) -> bool:
    """Semantic inclusion: every point of i1 belongs to i2.

    Decided from bound comparisons; an interval detected empty is a subset
    of everything.
    """
    if is_empty(i1):
        return True
    # Lower bound of i2 must admit everything i1's lower bound admits.
    if not i2.lo.infinite:
        if i1.lo.infinite:
            return False
        if i2.lo.value > i1.lo.value:
            return False
        if i2.lo.value == i1.lo.value and i1.lo.closed and not i2.lo.closed:
            return False
    if not i2.hi.infinite:
        if i1.hi.infinite:
            return False
        if i2.hi.value < i1.hi.value:
            return False
        if i2.hi.value == i1.hi.value and i1.hi.closed and not i2.hi.closed:
            return False
    return True


def intersect(i1: Interval, i2: Interval) -> Interval:
    """Set intersection (the result may be empty)."""

    def tighter_lo(a: Bound, b: Bound) -> Bound:
        if a.infinite:
            return b
        if b.infinite:
            return a
        if a.value != b.value:
            return a if a.value > b.value else b
        return a if not a.closed else b

    def tighter_hi(a: Bound, b: Bound) -> Bound:
        if a.infinite:
            return b
        if b.infinite:
            return a
        if a.value != b.value:
            return a if a.value < b.value else b
        return a if not a.closed else b

    return Interval(tighter_lo(i1.lo, i2.lo), tighter_hi(i1.hi, i2.hi))


def midpoint(i: Interval) -> Fraction:
    """(lo + hi) / 2; requires finite non-degenerate bounds."""
    if i.lo.infinite or i.hi.infinite:
        raise ValueError("midpoint requires finite bounds")
    if i.lo.value >= i.hi.value:
        raise ValueError("midpoint requires lo < hi")
    return (i.lo.value + i.hi.value) / 2


def split(i: Interval) -> tuple[Interval, Interval]:
    """Cut i at its midpoint m into (lo, m] and ]m, hi) halves.

    The halves are disjoint and their union is i.
    """
    m = midpoint(i)
    left = Interval(i.lo, finite(m, True))
    right = Interval(finite(m, False), i.hi)
    return left, right


def constraints_of(x: Fraction, i: Interval) -> list[tuple[str, Fraction]]:
    """Atomic comparisons implied by mem(x, i), as (op, bound value) pairs.

    Ops are among ">", ">=", "<", "<=" with x on the left.
    """
    out: list[tuple[str, Fraction]] = []
    if not i.lo.infinite:
        out.append((">=" if i.lo.closed else ">", i.lo.value))
    if not i.hi.infinite:
        out.append(("<=" if i.hi.closed else "<", i.hi.value))
    return out


def format_interval(i: Interval) -> str:
    if i.lo.infinite:
        left, lval = "]", "-oo"
    else:
        left = "[" if i.lo.closed else "]"
        lval = format_rational(i.lo.value)
    if i.hi.infinite:
        right, rval = "[", "+oo"
    else:
        right = "]" if i.hi.closed else "["
        rval = format_rational(i.hi.value)
    return f"{left}{lval},{rval}{right}"


def parse_interval(text: str) -> Interval:
    """Parse the paper-style notation: [a,b], ]a,b[, [a,+oo[, ]-oo,b]."""
    s = text.strip().replace(" ", "")
    if len(s) < 2 or s[0] not in "[]" or s[-1] not in "[]":
        raise ValueError(f"not an interval: {text!r}")
    body = s[1:-1]
    if "," not in body:
        raise ValueError(f"not an interval: {text!r}")
    ltxt, rtxt = body.split(",", 1)
    if ltxt in ("-oo", "-inf"):
        lo = INF
    else:
        lo = finite(parse_rational(ltxt), s[0] == "[")
    if rtxt in ("+oo", "oo", "+inf", "inf"):
        hi = INF
    else:
        hi = finite(parse_rational(rtxt), s[-1] == "]")
    if lo.infinite and s[0] == "[":
        raise ValueError("infinite lower bound must be open: ]-oo,...")
    if hi.infinite and s[-1] == "]":
        raise ValueError("infinite upper bound must be open: ...,+oo[")
    return Interval(lo, hi)
