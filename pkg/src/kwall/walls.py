"""Wall solving from valuative data.

A wall case bundles a log discrepancy A(c) = A0 - c ord(D) and an expected
vanishing order S(c) = (alpha - beta c) S0, both affine in the coefficient c.
A(c) < S(c) proves K-instability; A(c) >= S(c) is only a necessary condition
for K-semistability and every report says so explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import rat, fmt


class WallError(ValueError):
    pass


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    def __contains__(self, c) -> bool:
        c = rat(c)
        if c < self.lo or (c == self.lo and not self.lo_closed):
            return False
        if c > self.hi or (c == self.hi and not self.hi_closed):
            return False
        return True

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{fmt(self.lo)}, {fmt(self.hi)}{right}"


@dataclass(frozen=True)
class WallCase:
    """Valuative scenario with affine A(c) and S(c) on a coefficient range."""

    name: str
    A0: Fraction
    ordD: Fraction
    S0: Fraction
    alpha: Fraction
    beta: Fraction
    valid_range: Interval
    provenance: str = ""

    def __post_init__(self):
        for f_ in ("A0", "ordD", "S0", "alpha", "beta"):
            object.__setattr__(self, f_, rat(getattr(self, f_)))
        if self.alpha - self.beta * self.valid_range.lo <= 0:
            raise WallError("anti-canonical degree must be positive at the low end of the range")
        if self.alpha - self.beta * self.valid_range.hi < 0:
            raise WallError("anti-canonical degree must stay nonnegative on the range")

    def A(self, c) -> Fraction:
        return self.A0 - rat(c) * self.ordD

    def S(self, c) -> Fraction:
        return (self.alpha - self.beta * rat(c)) * self.S0

    def margin(self, c) -> Fraction:
        return self.A(c) - self.S(c)


NECESSARY_PASS = "necessary-condition-passed"
K_UNSTABLE = "K-unstable"


@dataclass(frozen=True)
class WallReport:
    """Solved wall data.  ``wall`` is the crossing inside the valid range (None
    when there is none there); unstable_below/above refer to the sides of the
    solved crossing.  ``verdict`` is the authoritative per-coefficient call."""

    case: WallCase
    wall: Optional[Fraction]
    unstable_below: bool
    unstable_above: bool
    degenerate: bool = False

    def verdict(self, c) -> str:
        """A < S proves K-instability; the other side only passes a necessary condition."""
        return K_UNSTABLE if self.case.margin(c) < 0 else NECESSARY_PASS


def solve_wall(case: WallCase) -> WallReport:
    """Solve A(c) = S(c) exactly and classify each side by the sign of A - S."""
    const = case.A0 - case.alpha * case.S0  # margin at c = 0
    slope = case.beta * case.S0 - case.ordD  # d(margin)/dc
    if slope == 0 and const == 0:
        return WallReport(case, None, False, False, degenerate=True)
    if slope == 0:
        unstable = const < 0
        return WallReport(case, None, unstable, unstable)
    cstar = -const / slope
    in_range = cstar in case.valid_range
    return WallReport(
        case,
        cstar if in_range else None,
        unstable_below=slope > 0,
        unstable_above=slope < 0,
    )


@dataclass(frozen=True)
class QuinticStratumPoint:
    """Point of the quintic boundary parameter space: [s, r, h, u] on P(1,2,3,3)
    for the A>=9 double-point chart (h = p^2 - u), or [s1, s2] on P(1,2) for the
    two-tangent-conics chart."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(rat(c) for c in self.coords)
        object.__setattr__(self, "coords", cs)
        if len(cs) not in (2, 4):
            raise WallError("stratum point needs 4 coordinates [s,r,h,u] or 2 [s1,s2]")
        if all(c == 0 for c in cs):
            raise WallError("stratum point cannot be the zero vector")

    @property
    def chart(self) -> str:
        return "A9" if len(self.coords) == 4 else "D6"


@dataclass(frozen=True)
class StratumVerdict:
    stratum: str
    wall: Optional[Fraction]
    note: str


_STRATUM_WALLS = {
    "Sigma1": Fraction(3, 7),
    "Sigma2": Fraction(8, 15),
    "Sigma3": Fraction(6, 11),
    "Sigma4": Fraction(63, 115),
    "Sigma5": Fraction(54, 95),
}

_LC_BOUNDARY_NOTE = "lct = 3/5, no log Fano wall"


def classify_quintic_stratum(p: QuinticStratumPoint) -> StratumVerdict:
    """Locally-closed stratification of the quintic boundary with its wall assignment."""
    if p.chart == "D6":
        s1, s2 = p.coords
        if s2 == 0:
            return StratumVerdict("Sigma1", _STRATUM_WALLS["Sigma1"], "double conic + transverse line")
        return StratumVerdict("Sigma6", None, _LC_BOUNDARY_NOTE)
    s, r, h, u = p.coords
    if h != 0:
        return StratumVerdict("Sigma7", None, _LC_BOUNDARY_NOTE)
    if u == 0:
        if r == 0:
            return StratumVerdict("Sigma1", _STRATUM_WALLS["Sigma1"], "double conic + transverse line")
        return StratumVerdict("Sigma3", _STRATUM_WALLS["Sigma3"], "reducible A11 quintic")
    if r == 0 and s == 0:
        return StratumVerdict("Sigma2", _STRATUM_WALLS["Sigma2"], "A12 quintic")
    if r == 0:
        return StratumVerdict("Sigma4", _STRATUM_WALLS["Sigma4"], "irreducible A11 quintic")
    return StratumVerdict("Sigma5", _STRATUM_WALLS["Sigma5"], "A10 quintic")


def stratum_closure_contains(stratum: str, p: QuinticStratumPoint) -> bool:
    """Set-theoretic Zariski closure test for the A9-chart strata."""
    if p.chart != "A9":
        return False
    s, r, h, u = p.coords
    closures = {
        "Sigma1": r == 0 and h == 0 and u == 0,
        "Sigma2": s == 0 and r == 0 and h == 0,
        "Sigma3": h == 0 and u == 0,
        "Sigma4": r == 0 and h == 0,
        "Sigma5": h == 0,
        "Sigma7": True,
    }
    if stratum not in closures:
        raise WallError(f"unknown stratum {stratum}")
    return closures[stratum]


def first_wall(d: int) -> tuple[Fraction, str, WallReport]:
    """First wall for degree-d plane curves, derived by the wall solver.

    The scenario is the quotient-point valuation on the degeneration target:
    A0 = 1/2, ord(D) = 0 for even d and 1/2 for odd d, S(c) = (6 - 2dc)/6.
    """
    if d < 4:
        raise WallError("degrees below 4 are out of scope")
    from . import fixtures

    case = fixtures.first_wall_case(d)
    report = solve_wall(case)
    if report.wall is None:
        raise WallError("first-wall scenario failed to produce a wall")
    expect = Fraction(3, 2 * d) if d % 2 == 0 else Fraction(3, 2 * d - 3)
    if report.wall != expect:
        raise WallError("engine-derived first wall disagrees with the closed form")
    tag = f"z^{d//2} = 0" if d % 2 == 0 else f"x y z^{(d - 1)//2} = 0"
    return report.wall, tag, report


@dataclass(frozen=True)
class WallTableRow:
    index: int
    wall: Fraction
    below: str
    above: str


def quintic_wall_table() -> list[WallTableRow]:
    """The five quintic walls, each re-derived through the wall solver."""
    from . import fixtures

    rows = []
    for i, (name, below, above) in enumerate(
        [
            ("firstwall-d5", "(P^2, Q_5)", "(P(1,1,4), xyz^2+(ax^6+by^6)z+g(x,y))"),
            ("a12", "(P^2, A12-quintic)", "(X_26, w=g(x,y))"),
            ("a11red", "(P^2, A11-reducible quintics)", "(P(1,1,4), x^2z^2+y^6z+g(x,y))"),
            ("a11irr", "(P^2, A11-irreducible quintics)", "(P(1,4,25), z^2+x^2y^12+x^10 g(x,y))"),
            ("a10", "(P^2, A10-quintics)", "(P(1,4,25), z^2+x^6y^11+x^14 g(x,y))"),
        ],
        start=1,
    ):
        report = solve_wall(fixtures.wall_case(name))
        if report.wall is None:
            raise WallError(f"case {name} produced no wall in range")
        rows.append(WallTableRow(i, report.wall, below, above))
    walls = [r.wall for r in rows]
    if walls != sorted(walls):
        raise WallError("quintic walls failed to come out increasing")
    return rows


_DELTA_UPPER_TAGS = {"P2": None, "P114": None, "X26": "x26-delta", "P1425": "p1425-delta"}


def admissibility_window(surface_tag: str, d: int) -> Interval:
    """Coefficient window outside of which the surface is provably excluded
    from the degree-d moduli (a necessary condition).

    Lower bound (3/d)(1 - delta_upper(surface)); the full interval for the
    surfaces with no exploitable threshold bound.
    """
    if d < 4:
        raise WallError("degrees below 4 are out of scope")
    if surface_tag not in _DELTA_UPPER_TAGS:
        raise WallError(f"unknown surface tag {surface_tag!r}; expected one of {sorted(_DELTA_UPPER_TAGS)}")
    hi = Fraction(3, d)
    fixture_name = _DELTA_UPPER_TAGS[surface_tag]
    if fixture_name is None:
        return Interval(Fraction(0), hi)
    from . import fixtures

    delta = fixtures.delta_upper_bound(fixture_name)
    return Interval(hi * (1 - delta), hi, lo_closed=True)


def interpolation_window(kss_at: Fraction, lct: Fraction, d: int) -> Interval:
    """Window of c where K-semistability at c0 plus the lct bound propagate it.

    K-semistability at c0 extends up to min(lct, 3/d): to 3/d when the pair is
    log canonical at the Calabi-Yau coefficient, and only up to the lc
    threshold otherwise.
    """
    kss_at, lct = rat(kss_at), rat(lct)
    hi = Fraction(3, d)
    if not (0 < kss_at < hi):
        raise WallError("base coefficient must lie in (0, 3/d)")
    if lct < kss_at:
        raise WallError("inconsistent input: lct below the K-semistable coefficient")
    if lct == kss_at:
        return Interval(kss_at, kss_at, lo_closed=True, hi_closed=True)
    return Interval(kss_at, min(lct, hi), lo_closed=True)
