"""Monomial valuations over smooth and cyclic-quotient surface points.

Log discrepancies, orders of vanishing on curve germs, Newton-polygon log
canonical thresholds, Gorenstein index bounds, and stability-threshold upper
bounds.  Germ data is a monomial support with generic coefficients; fixtures
whose conclusions need coefficient relations carry an explicit flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import rat


class DomainError(ValueError):
    """Argument outside the documented domain (e.g. coefficient out of range)."""


@dataclass(frozen=True)
class CyclicQuot:
    """Cyclic quotient point of type 1/n(a, b); n = 1 is a smooth point."""

    n: int
    a: int = 1
    b: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("quotient order must be positive")
        if self.n > 1:
            object.__setattr__(self, "a", self.a % self.n)
            object.__setattr__(self, "b", self.b % self.n)
            if math.gcd(self.a, self.n) != 1:
                raise DomainError("first action weight must be coprime to the order")

    @property
    def smooth(self) -> bool:
        return self.n == 1


SMOOTH_POINT = CyclicQuot(1)


@dataclass(frozen=True)
class MonomialVal:
    """Monomial valuation of weights (w1, w2) on the covering chart of ``point``.

    ``scale`` absorbs the two normalizations in use: scale = 1 gives the
    divisorial valuation ord_E with A = (w1 + w2)/n, while scale = n gives the
    pushforward of the chart valuation without dividing.  All downstream
    quantities (A, orders, S) are linear in scale.
    """

    point: CyclicQuot
    weights: tuple[Fraction, Fraction]
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        w1, w2 = rat(self.weights[0]), rat(self.weights[1])
        object.__setattr__(self, "weights", (w1, w2))
        object.__setattr__(self, "scale", rat(self.scale))
        if w1 <= 0 or w2 <= 0:
            raise DomainError("monomial weights must be positive")
        if self.scale <= 0:
            raise DomainError("scale must be positive")

    def rescale(self, lam) -> "MonomialVal":
        return MonomialVal(self.point, self.weights, self.scale * rat(lam))


@dataclass(frozen=True)
class GermSupport:
    """Support of a curve germ f(x, y) on the covering chart.

    Coefficients are assumed generic (no cancellation) unless
    ``assumes_generic`` is cleared by a fixture that has checked its own
    coefficient conditions.
    """

    monomials: frozenset[tuple[int, int]]
    assumes_generic: bool = True

    def __post_init__(self):
        mons = frozenset((int(i), int(j)) for i, j in self.monomials)
        if not mons:
            raise DomainError("germ support must be nonempty")
        if any(i < 0 or j < 0 for i, j in mons):
            raise DomainError("exponents must be nonnegative")
        object.__setattr__(self, "monomials", mons)


def germ(*monomials: tuple[int, int], assumes_generic: bool = True) -> GermSupport:
    return GermSupport(frozenset(monomials), assumes_generic)


@dataclass(frozen=True)
class QuasiHomogGerm:
    """Quasi-homogeneous curve germ: weights (w1, w2) and weighted degree."""

    w1: int
    w2: int
    degree: int

    def __post_init__(self):
        if self.w1 <= 0 or self.w2 <= 0 or self.degree <= 0:
            raise DomainError("weights and degree must be positive")
        if self.degree < max(self.w1, self.w2):
            raise DomainError("degree must be at least each weight")


def log_discrepancy(v: MonomialVal) -> Fraction:
    """A_X(v) = scale (w1 + w2)/n for the weighted blow-up valuation over the quotient."""
    return v.scale * (v.weights[0] + v.weights[1]) / v.point.n


def ord_on_germ(v: MonomialVal, g: GermSupport) -> Fraction:
    """v(f) = scale min_{(i,j) in supp f} (i w1 + j w2)/n, assuming generic coefficients."""
    return v.scale * min(i * v.weights[0] + j * v.weights[1] for i, j in g.monomials) / v.point.n


def lct_newton(g: GermSupport) -> Fraction:
    """lct of a generic germ with the given Newton polygon: min(1, 1/t*) where
    (t*, t*) is the diagonal's entry point into the polygon."""
    if (0, 0) in g.monomials:
        raise DomainError("lct undefined for a unit germ")
    pts = [(Fraction(i), Fraction(j)) for i, j in sorted(g.monomials)]
    tstar = min(max(i, j) for i, j in pts)
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            (ia, ja), (ib, jb) = pts[a], pts[b]
            # diagonal crossing of the segment, if any: solve x(lam) = y(lam)
            dx, dy = ib - ia, jb - ja
            if dx == dy:
                continue
            lam = (ja - ia) / (dx - dy)
            if 0 <= lam <= 1:
                tstar = min(tstar, ia + lam * dx)
    return min(Fraction(1), 1 / tstar)


def lct_quasihomog(g: QuasiHomogGerm) -> Fraction:
    """lct of a quasi-homogeneous germ: min(1, (w1 + w2)/degree)."""
    return min(Fraction(1), Fraction(g.w1 + g.w2, g.degree))


def index_bound(d: int, c: Fraction) -> int:
    """Largest local Gorenstein index allowed on a surface in the coefficient-c
    moduli of degree-d curve pairs.

    min(floor(3/(3 - cd)), d) when 3 does not divide d, with d replaced by
    2d/3 when it does.
    """
    c = rat(c)
    if d < 1:
        raise DomainError("degree must be positive")
    if not (0 < c < Fraction(3, d)):
        raise DomainError(f"coefficient must lie in (0, 3/{d})")
    cap = Fraction(2 * d, 3) if d % 3 == 0 else Fraction(d)
    return int(min(Fraction(3) / (3 - c * d), cap).__floor__())


def local_volume_bound_check(point: CyclicQuot, c: Fraction, d: int, ord_d: Fraction) -> bool:
    """Local-to-global volume test for a point of type 1/n^2(1, an-1).

    Returns True when the inequality n <= (2 - c ord(D))/(2 beta) with
    beta = 1 - cd/3 admits the point, i.e. the singularity is not excluded.
    """
    c, ord_d = rat(c), rat(ord_d)
    if point.smooth:
        return True
    n = math.isqrt(point.n)
    if n * n != point.n:
        raise DomainError("quotient order must be a perfect square n^2")
    if point.a != 1 or (point.b + 1) % n != 0:
        raise DomainError("point is not of type 1/n^2(1, an-1)")
    beta = 1 - c * Fraction(d, 3)
    if beta <= 0:
        raise DomainError("beta = 1 - cd/3 must be positive")
    return Fraction(n) <= (2 - c * ord_d) / (2 * beta)


def delta_upper(A: Fraction, S0: Fraction, anti_k_scale: tuple[Fraction, Fraction]) -> Fraction:
    """Upper bound A/(alpha S0) for the stability threshold at c = 0.

    Only an upper bound: it uses one valuation (or, at fixture level, a
    declared finite list of them).
    """
    A, S0 = rat(A), rat(S0)
    alpha = rat(anti_k_scale[0])
    if S0 <= 0:
        raise DomainError("S0 must be positive")
    return A / (alpha * S0)
