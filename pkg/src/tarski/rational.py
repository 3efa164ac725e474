"""Exact rational scalars: sign, absolute value, comparison, parsing.

Rationals are plain ``fractions.Fraction`` values.  Fraction keeps its
operands normalized (positive denominator, numerator coprime with it), so
structural equality coincides with semantic equality and values can be
hashed and compared cheaply.  No floats enter the computation anywhere.
"""

from __future__ import annotations

from fractions import Fraction

LESS = -1
EQUAL = 0
GREATER = 1


def sgr(x: Fraction) -> int:
    """Sign of x as an integer in {-1, 0, 1}."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def rabs(x: Fraction) -> Fraction:
    """Absolute value of x."""
    return -x if x < 0 else x


def cmp(x: Fraction, y: Fraction) -> int:
    """Total-order comparison: LESS, EQUAL or GREATER, matching sgr(y - x)
    up to orientation (cmp(x, y) == sgr(x - y))."""
    return sgr(x - y)


def parse_rational(text: str) -> Fraction:
    """Parse "3", "-7/2" or "0.25" into an exact rational.

    Decimal literals are read exactly ("0.25" is 1/4).  Unicode minus is
    accepted alongside ASCII minus.
    """
    s = text.strip().replace("−", "-")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    """Print as "p/q", or just "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
