"""Univariate polynomials over the rationals, dense and always normalized.

Coefficients are stored lowest degree first; the zero polynomial is the
empty sequence and a nonzero polynomial never carries a trailing zero.
``size`` is the length of the coefficient sequence, so size == 0 exactly
for the zero polynomial and size == degree + 1 otherwise; this convention
avoids option-typed degrees throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .rational import rabs, sgr


class Poly:
    """Immutable dense univariate polynomial over Fraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c: Fraction) -> "Poly":
        return Poly([Fraction(c)])

    @staticmethod
    def x() -> "Poly":
        return Poly([Fraction(0), Fraction(1)])

    @staticmethod
    def from_roots(roots: Iterable[Fraction]) -> "Poly":
        """Monic product of (X - r) over the given roots (with repetition)."""
        p = Poly.const(Fraction(1))
        for r in roots:
            p = p * Poly([-Fraction(r), Fraction(1)])
        return p

    # -- basic structure ---------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c: Fraction) -> "Poly":
        return Poly([c * a for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by X^k."""
        if self.is_zero:
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.const(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation and derivative ----------------------------------------

    def eval(self, x: Fraction) -> Fraction:
        """Horner evaluation; the zero polynomial evaluates to 0."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    # -- division ----------------------------------------------------------

    def divmod(self, q: "Poly") -> tuple["Poly", "Poly"]:
        """Exact Euclidean division over the field: self = quot*q + rem,
        rem = 0 or size(rem) < size(q)."""
        if q.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = q.degree
        lcq = q.lc
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        while len(rem) > dq:
            c = rem[-1] / lcq
            k = len(rem) - 1 - dq
            quot[k] = c
            for i in range(dq):
                rem[k + i] -= c * q.coeffs[i]
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quot), Poly(rem)

    def __floordiv__(self, q: "Poly") -> "Poly":
        return self.divmod(q)[0]

    def __mod__(self, q: "Poly") -> "Poly":
        return self.divmod(q)[1]

    def pseudo_divmod(self, q: "Poly") -> "PseudoDivResult":
        """Pseudo-division: scalp * self = quot * q + rem, exactly, with
        scalp = lc(q) ** max(0, size(self) - size(q) + 1)."""
        if q.is_zero:
            raise ZeroDivisionError("polynomial pseudo-division by zero")
        d = max(0, self.size - q.size + 1)
        scalp = q.lc ** d
        quot, rem = self.scale(scalp).divmod(q)
        return PseudoDivResult(scalp, quot, rem)

    # -- gcd and square-free structure ------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor; gcd(0, 0) = 0."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "Poly":
        """self / gcd(self, self'), made monic; same root set, all simple."""
        if self.is_zero:
            raise ValueError("squarefree_part of the zero polynomial")
        g = self.gcd(self.deriv())
        return (self // g).monic()

    def squarefree_decomposition(self) -> list[tuple["Poly", int]]:
        """Yun decomposition: pairs (f_i, i) with self = lc * prod f_i^i,
        the f_i monic, square-free, pairwise coprime and non-constant."""
        if self.is_zero:
            raise ValueError("decomposition of the zero polynomial")
        p = self.monic()
        if p.degree < 1:
            return []
        out: list[tuple[Poly, int]] = []
        g = p.gcd(p.deriv())
        c = p // g
        d = p.deriv() // g - c.deriv()
        i = 1
        while c.degree >= 1:
            f = c.gcd(d)
            if f.degree >= 1:
                out.append((f.monic(), i))
            c, d = c // f, d // f - (c // f).deriv()
            i += 1
        return out

    def mu(self, x: Fraction) -> int:
        """Multiplicity of x as a root; 0 when x is not a root."""
        if self.is_zero:
            raise ValueError("multiplicity in the zero polynomial")
        lin = Poly([-Fraction(x), Fraction(1)])
        k = 0
        p = self
        while True:
            quot, rem = p.divmod(lin)
            if not rem.is_zero:
                return k
            k += 1
            p = quot

    # -- bounds and normal forms ------------------------------------------

    def cauchy_bound(self) -> Fraction:
        """Sum of |coefficients| divided by |leading coefficient|.

        Every real root x satisfies |x| < the returned value (strictly,
        since the sum includes the leading term itself).
        """
        if self.is_zero:
            raise ValueError("Cauchy bound of the zero polynomial")
        return sum((rabs(c) for c in self.coeffs), Fraction(0)) / rabs(self.lc)

    def monic_transform(self) -> tuple["Poly", Fraction]:
        """Monic change of variable: returns (s, lead) with s monic of the
        same size and s(lead*X) = lead^(size-2) * self(X); x0 is a root of
        self iff lead*x0 is a root of s."""
        if self.size < 2:
            raise ValueError("monic_transform requires a non-constant polynomial")
        n = self.degree
        lead = self.lc
        cs = [self.coeffs[i] * lead ** (n - 1 - i) for i in range(n)]
        cs.append(Fraction(1))
        return Poly(cs), lead


@dataclass(frozen=True)
class PseudoDivResult:
    scalp: Fraction
    quot: Poly
    rem: Poly
