"""Built-in registry of the named computation scenarios.

Every fixture stores raw input data (intersection numbers, moment polygons,
valuation weights, germ supports, cone data) plus *annotations*: the values
the computation is expected to reproduce, with a provenance note.  The
annotations are compared against engine output in the verification suite and
are never returned as answers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import Mat3, Vec3, mat3, mat3_vec, polygon
from .git import BinaryFormSystem, OnePS, PlaneCurveSupport
from .toric_kps import CentroidCase
from .valuations import (
    CyclicQuot,
    GermSupport,
    MonomialVal,
    QuasiHomogGerm,
    SMOOTH_POINT,
    delta_upper,
    germ,
    log_discrepancy,
    ord_on_germ,
)
from .volumes import MomentPolygon, TwoRayModel, VolumeProfile, s_invariant, volume_toric, volume_two_ray
from .walls import Interval, WallCase

F = Fraction


# ---------------------------------------------------------------------------
# volume fixtures: the two-ray models and moment polygons of the named cases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VolumeFixture:
    name: str
    model: Optional[TwoRayModel]
    L: tuple[Fraction, Fraction]
    moment: Optional[MomentPolygon]
    anti_k: tuple[Fraction, Fraction]
    provenance: str
    expected: dict = field(default_factory=dict)

    def profile(self) -> VolumeProfile:
        """Primary engine: two-ray when present, else toric."""
        if self.model is not None:
            return volume_two_ray(self.model, self.L)
        assert self.moment is not None
        return volume_toric(self.moment)

    def toric_profile(self) -> Optional[VolumeProfile]:
        return volume_toric(self.moment) if self.moment is not None else None

    def s0(self) -> Fraction:
        return s_invariant(self.profile(), self.anti_k)


def _p114_polygon():
    return polygon([(F(0), F(0)), (F(1), F(0)), (F(0), F(1, 4))])


def _p1425_polygon():
    return polygon([(F(0), F(0)), (F(1, 4), F(0)), (F(0), F(1, 25))])


VOLUME_FIXTURES: dict[str, VolumeFixture] = {}


def _add_volume(fx: VolumeFixture) -> None:
    VOLUME_FIXTURES[fx.name] = fx


_add_volume(VolumeFixture(
    name="a12",
    model=TwoRayModel(F(1), F(1, 26), F(0), (F(5), F(26))),
    L=(F(1), F(0)),
    moment=None,
    anti_k=(F(3), F(5)),
    provenance="(13,2)-blow-up of the plane at the A12 point; Mori cone <E, Cbar_0 ~ 5H-26E>",
    expected={
        "pieces": "1 - t^2/26 on [0, 5]; (26 - 5t)^2/26 on [5, 26/5]",
        "S0": F(17, 5),
    },
))

_add_volume(VolumeFixture(
    name="a11red",
    model=TwoRayModel(F(1), F(1, 6), F(0), (F(2), F(6))),
    L=(F(1), F(0)),
    moment=None,
    anti_k=(F(3), F(5)),
    provenance="(6,1)-blow-up at the reducible-A11 point; Qbar ~ 2H-6E, (Qbar^2) = -2",
    expected={
        "pieces": "1 - t^2/6 on [0, 2]; (3 - t)^2/3 on [2, 3]",
        "S0": F(5, 3),
    },
))

_add_volume(VolumeFixture(
    name="a11irr",
    model=TwoRayModel(F(1), F(1, 6), F(0), (F(2), F(5))),
    L=(F(1), F(0)),
    moment=None,
    anti_k=(F(3), F(5)),
    provenance="(6,1)-blow-up at the irreducible-A11 point; Qbar ~ 2H-5E, (Qbar^2) = -1/6",
    expected={
        "pieces": "1 - t^2/6 on [0, 12/5]; (5 - 2t)^2 on [12/5, 5/2]",
        "S0": F(49, 30),
    },
))

_add_volume(VolumeFixture(
    name="a10",
    model=TwoRayModel(F(1), F(1, 22), F(0), (F(2), F(10))),
    L=(F(1), F(0)),
    moment=None,
    anti_k=(F(3), F(5)),
    provenance="(11,2)-blow-up at the A10 point; Qbar ~ 2H-10E, (Qbar^2) = -6/11",
    expected={
        "pieces": "1 - t^2/22 on [0, 22/5]; (10 - 2t)^2/12 on [22/5, 5]",
        "S0": F(47, 15),
    },
))

_add_volume(VolumeFixture(
    name="x26",
    model=TwoRayModel(F(1, 25), F(25, 26), F(0), (F(1), F(26, 25))),
    L=(F(1), F(0)),
    moment=None,
    anti_k=(F(15), F(25)),
    provenance="order-25 quotient point of the degree-26 hypersurface; Gammabar ~ L - (26/25)E",
    expected={
        "pieces": "1/25 - 25 t^2/26 on [0, 1/25]; (26/25 - t)^2/26 on [1/25, 26/25]",
        "S0": F(9, 25),
    },
))

_add_volume(VolumeFixture(
    name="p114-quot",
    model=TwoRayModel(F(1, 4), F(4), F(0), None),
    L=(F(1), F(0)),
    moment=None,
    anti_k=(F(6), F(10)),
    provenance="order-4 quotient point of the quadric cone; vol = max(1/4 - 4t^2, 0)",
    expected={"pieces": "1/4 - 4 t^2 on [0, 1/4]", "S0": F(1, 6)},
))

_add_volume(VolumeFixture(
    name="p114-w31",
    model=TwoRayModel(F(1, 4), F(1, 12), F(0), (F(1), F(3))),
    L=(F(1), F(0)),
    moment=MomentPolygon(_p114_polygon(), (F(-2), F(-12))),
    anti_k=(F(6), F(10)),
    provenance="weights (3,1) at the order-4 point of the quadric cone, pushforward scale 4",
    expected={
        "pieces": "(1 - t^2/3)/4 on [0, 1]; (3 - t)^2/24 on [1, 3]",
        "S0": F(4, 3),
    },
))

_add_volume(VolumeFixture(
    name="p114-w51",
    model=TwoRayModel(F(1, 4), F(1, 20), F(0), (F(1), F(5))),
    L=(F(1), F(0)),
    moment=MomentPolygon(_p114_polygon(), (F(-4), F(-20))),
    anti_k=(F(6), F(10)),
    provenance="weights (5,1) at the order-4 point of the quadric cone, pushforward scale 4",
    expected={
        "pieces": "(1 - t^2/5)/4 on [0, 1]; (5 - t)^2/80 on [1, 5]",
        "S0": F(2),
    },
))

_add_volume(VolumeFixture(
    name="p1425-w11",
    model=TwoRayModel(F(1, 100), F(1, 4), F(0), (F(1), F(1))),
    L=(F(1), F(0)),
    moment=MomentPolygon(_p1425_polygon(), (F(-4), F(-24))),
    anti_k=(F(30), F(50)),
    provenance="weights (1,1) at the order-4 point of P(1,4,25), pushforward scale 4",
    expected={
        "pieces": "(1 - 25 t^2)/100 on [0, 1/25]; (1 - t)^2/96 on [1/25, 1]",
        "S0": F(26, 75),
    },
))

_add_volume(VolumeFixture(
    name="p1425-w13",
    model=TwoRayModel(F(1, 100), F(1, 12), F(0), (F(1), F(1))),
    L=(F(1), F(0)),
    moment=MomentPolygon(_p1425_polygon(), (F(-4), F(-22))),
    anti_k=(F(30), F(50)),
    provenance="weights (1,3) at the order-4 point of P(1,4,25), pushforward scale 4",
    expected={
        "pieces": "1/100 - t^2/12 on [0, 3/25]; (1 - t)^2/88 on [3/25, 1]",
        "S0": F(28, 75),
    },
))

_add_volume(VolumeFixture(
    name="p1425-w15",
    model=TwoRayModel(F(1, 100), F(1, 20), F(0), (F(1), F(1))),
    L=(F(1), F(0)),
    moment=MomentPolygon(_p1425_polygon(), (F(-4), F(-20))),
    anti_k=(F(30), F(50)),
    provenance="weights (1,5) at the order-4 point of P(1,4,25), pushforward scale 4",
    expected={
        "pieces": "(1 - 5 t^2)/100 on [0, 1/5]; (1 - t)^2/80 on [1/5, 1]",
        "S0": F(2, 5),
    },
))

for _ray, _w, _s0 in (
    ("x", (F(-4), F(-25)), F(1, 3)),
    ("y", (F(1), F(0)), F(1, 12)),
    ("z", (F(0), F(1)), F(1, 75)),
):
    _add_volume(VolumeFixture(
        name=f"p1425-ray-{_ray}",
        model=None,
        L=(F(1), F(0)),
        moment=MomentPolygon(_p1425_polygon(), _w),
        anti_k=(F(30), F(50)),
        provenance=f"toric boundary ray ({_ray}-divisor) of P(1,4,25)",
        expected={"S0": _s0},
    ))


# ---------------------------------------------------------------------------
# wall-case fixtures: (valuation, germ, volume fixture) triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WallFixture:
    name: str
    valuation: MonomialVal
    curve_germ: Optional[GermSupport]
    volume: str  # key into VOLUME_FIXTURES
    valid_range: Interval
    provenance: str
    expected: dict = field(default_factory=dict)

    def case(self) -> WallCase:
        vf = VOLUME_FIXTURES[self.volume]
        A0 = log_discrepancy(self.valuation)
        ordD = ord_on_germ(self.valuation, self.curve_germ) if self.curve_germ else F(0)
        return WallCase(
            name=self.name,
            A0=A0,
            ordD=ordD,
            S0=vf.s0(),
            alpha=vf.anti_k[0],
            beta=vf.anti_k[1],
            valid_range=self.valid_range,
            provenance=self.provenance,
        )


_QUINTIC_RANGE = Interval(F(0), F(3, 5))

WALL_FIXTURES: dict[str, WallFixture] = {}


def _add_wall(fx: WallFixture) -> None:
    WALL_FIXTURES[fx.name] = fx


_add_wall(WallFixture(
    name="a12",
    valuation=MonomialVal(SMOOTH_POINT, (F(13), F(2))),
    curve_germ=germ((2, 0), (0, 13)),
    volume="a12",
    valid_range=_QUINTIC_RANGE,
    provenance="A12 plane quintic: A = 15 - 26c against S = (17/5)(3 - 5c)",
    expected={"A0": F(15), "ordD": F(26), "wall": F(8, 15), "unstable": "above"},
))

_add_wall(WallFixture(
    name="a11red",
    valuation=MonomialVal(SMOOTH_POINT, (F(6), F(1))),
    curve_germ=germ((2, 0), (0, 12)),
    volume="a11red",
    valid_range=_QUINTIC_RANGE,
    provenance="reducible A11 quintic: A = 7 - 12c against S = (5/3)(3 - 5c)",
    expected={"A0": F(7), "ordD": F(12), "wall": F(6, 11), "unstable": "above"},
))

_add_wall(WallFixture(
    name="a11irr",
    valuation=MonomialVal(SMOOTH_POINT, (F(6), F(1))),
    curve_germ=germ((2, 0), (0, 12)),
    volume="a11irr",
    valid_range=_QUINTIC_RANGE,
    provenance="irreducible A11 quintic: A = 7 - 12c against S = (49/30)(3 - 5c)",
    expected={"A0": F(7), "ordD": F(12), "wall": F(63, 115), "unstable": "above"},
))

_add_wall(WallFixture(
    name="a10",
    valuation=MonomialVal(SMOOTH_POINT, (F(11), F(2))),
    curve_germ=germ((2, 0), (0, 11)),
    volume="a10",
    valid_range=_QUINTIC_RANGE,
    provenance="A10 quintic: A = 13 - 22c against S = (47/15)(3 - 5c)",
    expected={"A0": F(13), "ordD": F(22), "wall": F(54, 95), "unstable": "above"},
))

_ORDER4_POINT = CyclicQuot(4, 1, 1)

_add_wall(WallFixture(
    name="x26",
    valuation=MonomialVal(CyclicQuot(25, 2, 13), (F(2), F(13))),
    curve_germ=None,
    volume="x26",
    valid_range=_QUINTIC_RANGE,
    provenance="quotient-point valuation on the degree-26 hypersurface, curve missing the point",
    expected={"A0": F(3, 5), "wall": F(8, 15), "unstable": "below"},
))

_add_wall(WallFixture(
    name="x26-through-sing",
    valuation=MonomialVal(CyclicQuot(25, 2, 13), (F(2), F(13))),
    curve_germ=germ((6, 1), (25, 0), (12, 2)),
    volume="x26",
    valid_range=_QUINTIC_RANGE,
    provenance="degree-25 curve through the quotient point: f(x,y)z + g(x,y) pulls back with order 25",
    expected={"ordD": F(1), "unstable": "everywhere"},
))

_add_wall(WallFixture(
    name="p114-deg",
    valuation=MonomialVal(_ORDER4_POINT, (F(3), F(1)), scale=F(4)),
    curve_germ=germ((2, 0), (0, 6), (10, 0), (0, 10)),
    volume="p114-w31",
    valid_range=_QUINTIC_RANGE,
    provenance="degenerate z^2-coefficient on the quadric cone: x^2 z^2 + y^6 z + g(x, y)",
    expected={"A0": F(4), "ordD": F(6), "wall": F(6, 11), "unstable": "below"},
))

_add_wall(WallFixture(
    name="p114-nondeg",
    valuation=MonomialVal(_ORDER4_POINT, (F(5), F(1)), scale=F(4)),
    curve_germ=germ((2, 0), (1, 5), (0, 10)),
    volume="p114-w51",
    valid_range=_QUINTIC_RANGE,
    provenance="x^2 z^2 + a x y^5 z + g(x, y) on the quadric cone: unstable on the whole range",
    expected={"A0": F(6), "ordD": F(10), "unstable": "everywhere"},
))

_add_wall(WallFixture(
    name="p1425-case1",
    valuation=MonomialVal(_ORDER4_POINT, (F(1), F(1)), scale=F(4)),
    curve_germ=germ((2, 0), (1, 1), (0, 2)),
    volume="p1425-w11",
    valid_range=_QUINTIC_RANGE,
    provenance="z^2 + x^2 y^12 + x^6 g(x,y) on P(1,4,25) at the order-4 point",
    expected={"A0": F(2), "ordD": F(2), "wall": F(63, 115), "unstable": "below"},
))

_add_wall(WallFixture(
    name="p1425-case2",
    valuation=MonomialVal(_ORDER4_POINT, (F(1), F(3)), scale=F(4)),
    curve_germ=germ((6, 0), (10, 0), (0, 2)),
    volume="p1425-w13",
    valid_range=_QUINTIC_RANGE,
    provenance="z^2 + x^6 y^11 + x^10 g(x,y) on P(1,4,25) at the order-4 point",
    expected={"A0": F(4), "ordD": F(6), "wall": F(54, 95), "unstable": "below"},
))

_add_wall(WallFixture(
    name="p1425-case3",
    valuation=MonomialVal(_ORDER4_POINT, (F(1), F(5)), scale=F(4)),
    curve_germ=germ((10, 0), (0, 2)),
    volume="p1425-w15",
    valid_range=_QUINTIC_RANGE,
    provenance="z^2 + x^10 g(x,y) on P(1,4,25): unstable on the whole range",
    expected={"A0": F(6), "ordD": F(10), "unstable": "everywhere"},
))


def first_wall_case(d: int) -> WallCase:
    """Wall case for the degree-d first wall: the quotient point of the quadric cone
    against the conic degeneration, ord(D) = 0 for even d and 1/2 for odd d."""
    vf = VOLUME_FIXTURES["p114-quot"]
    val = MonomialVal(_ORDER4_POINT, (F(1), F(1)))
    ordD = F(0) if d % 2 == 0 else ord_on_germ(val, germ((1, 1)))
    return WallCase(
        name=f"firstwall-{'even' if d % 2 == 0 else 'odd'}-d{d}",
        A0=log_discrepancy(val),
        ordD=ordD,
        S0=vf.s0(),
        alpha=F(6),
        beta=F(2 * d),
        valid_range=Interval(F(0), F(3, d)),
        provenance="quotient-point valuation on the quadric cone against the conic degeneration",
    )


def wall_case(name: str) -> WallCase:
    """Resolve a named wall case, deriving every number through the engines."""
    if name == "firstwall-d5":
        return first_wall_case(5)
    if name.startswith("firstwall-even-d") or name.startswith("firstwall-odd-d"):
        return first_wall_case(int(name.rsplit("d", 1)[1]))
    if name == "firstwall-even":
        return first_wall_case(4)
    if name == "firstwall-odd":
        return first_wall_case(5)
    if name not in WALL_FIXTURES:
        raise KeyError(name)
    return WALL_FIXTURES[name].case()


# ---------------------------------------------------------------------------
# stability-threshold (delta) fixtures
# ---------------------------------------------------------------------------

def delta_upper_bound(name: str) -> Fraction:
    """Upper bound for delta of a named surface, minimized over the fixture's
    declared valuation list.  An upper bound only."""
    if name == "x26-delta":
        fx = WALL_FIXTURES["x26"]
        vf = VOLUME_FIXTURES[fx.volume]
        return delta_upper(log_discrepancy(fx.valuation), vf.s0(), vf.anti_k)
    if name == "p1425-delta":
        ratios = []
        for ray in ("x", "y", "z"):
            vf = VOLUME_FIXTURES[f"p1425-ray-{ray}"]
            ratios.append(delta_upper(F(1), vf.s0(), vf.anti_k))
        return min(ratios)
    raise KeyError(name)


DELTA_EXPECTED = {"x26-delta": F(1, 9), "p1425-delta": F(1, 10)}


# ---------------------------------------------------------------------------
# centroid fixtures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CentroidFixture:
    name: str
    case: CentroidCase
    printed_basis: Mat3  # maps internal dual coordinates to the printed ones
    provenance: str
    expected: dict = field(default_factory=dict)
    # normality of the degeneration's central fiber is assumed for these
    # families, not checked here; the annotation records the assumption
    admissibility: str = "central fiber assumed normal (admissible degeneration data)"

    def to_printed(self, u: Vec3) -> Vec3:
        return mat3_vec(self.printed_basis, u)


CENTROID_FIXTURES: dict[str, CentroidFixture] = {}


def _add_centroid(
    name: str,
    generators,
    u1,
    printed_basis,
    provenance: str,
    expected: dict,
) -> None:
    case = CentroidCase(
        name=name,
        generators=tuple(generators),
        xi0=(F(0), F(1), F(0)),
        eta0star=(F(0), F(0), F(1)),
        u1=tuple(u1),
    )
    CENTROID_FIXTURES[name] = CentroidFixture(
        name=name,
        case=case,
        printed_basis=mat3(printed_basis),
        provenance=provenance,
        expected=expected,
    )


_IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
# the degree-26 hypersurface cases live in the index-25 overlattice; columns are
# the dual basis (25,0), (1,1), e3 expressed in printed coordinates
_X26_BASIS = ((25, 1, 0), (0, 1, 0), (0, 0, 1))

_add_centroid(
    "centroid-a12-case1",
    generators=((6, -6, -13), (-1, 1, 2), (1, 1, 2)),
    u1=(-1, 25, -12),
    printed_basis=_X26_BASIS,
    provenance="A12 degeneration, degeneration parameter at the order-13 vertex",
    expected={
        "u0_printed": (F(15), F(15), F(-7)),
        "u2_printed": (F(9), F(1), F(-49, 150)),
        "a": F(3, 5), "c": F(8, 15), "b": F(1, 30),
    },
)

_add_centroid(
    "centroid-a12-case2",
    generators=((-1, 1, -2), (6, -6, 13), (19, -6, 13)),
    u1=(-1, 25, 13),
    printed_basis=_X26_BASIS,
    provenance="A12 degeneration, degeneration parameter at the order-2 vertex",
    expected={
        "u0_printed": (F(15), F(15), F(7)),
        "u2_printed": (F(9), F(1), F(319, 975)),
        "a": F(3, 5), "c": F(8, 15), "b": F(56, 195),
    },
)

_add_centroid(
    "centroid-a11red-case1",
    generators=((0, 0, -1), (-1, 1, -2), (1, 0, 6)),
    u1=(12, 10, -1),
    printed_basis=_IDENTITY,
    provenance="reducible A11 degeneration to the quadric cone, first marked point",
    expected={
        "u0_printed": (F(7), F(6), F(-1)),
        "u2_printed": (F(5, 6), F(1), F(-1, 12)),
        "a": F(11, 6), "c": F(6, 11), "b": F(3, 4),
    },
)

_add_centroid(
    "centroid-a11red-case2",
    generators=((0, 0, 1), (-1, 1, 2), (1, 0, -6)),
    u1=(12, 10, 2),
    printed_basis=_IDENTITY,
    provenance="reducible A11 degeneration to the quadric cone, second marked point",
    expected={
        "u0_printed": (F(7), F(6), F(1)),
        "u2_printed": (F(5, 6), F(1), F(1, 12)),
        "a": F(11, 6), "c": F(6, 11), "b": F(1, 4),
    },
)

_add_centroid(
    "centroid-a11irr-case1",
    generators=((-4, 1, -1), (1, 0, -6), (0, 0, 1)),
    u1=(12, 50, 2),
    printed_basis=_IDENTITY,
    provenance="irreducible A11 degeneration to P(1,4,25), marked point at infinity",
    expected={
        "u0_printed": (F(7), F(30), F(1)),
        "u2_printed": (F(49, 300), F(1), F(1, 75)),
        "a": F(23, 60), "c": F(63, 115), "b": F(1, 20),
    },
)

_add_centroid(
    "centroid-a11irr-case2",
    generators=((-4, 1, 1), (1, 0, 6), (0, 0, -1)),
    u1=(12, 50, 0),
    printed_basis=_IDENTITY,
    provenance="irreducible A11 degeneration to P(1,4,25), generic marked point",
    expected={
        "u0_printed": (F(7), F(30), F(-1)),
        "u2_printed": (F(49, 300), F(1), F(-1, 75)),
        "a": F(23, 60), "c": F(63, 115), "b": F(37, 100),
    },
)

_add_centroid(
    "centroid-a10-case1",
    generators=((-1, 0, -2), (1, 1, 6), (6, 0, 11)),
    u1=(22, 50, -11),
    printed_basis=_IDENTITY,
    provenance="A10 degeneration to P(1,4,25), first marked point",
    expected={
        "u0_printed": (F(13), F(30), F(-7)),
        "u2_printed": (F(47, 150), F(1), F(-49, 300)),
        "a": F(19, 30), "c": F(54, 95), "b": F(31, 100),
    },
)

_add_centroid(
    "centroid-a10-case2",
    generators=((-1, 0, 2), (1, 1, -6), (6, 0, -11)),
    u1=(22, 50, 12),
    printed_basis=_IDENTITY,
    provenance="A10 degeneration to P(1,4,25), second marked point",
    expected={
        "u0_printed": (F(13), F(30), F(7)),
        "u2_printed": (F(47, 150), F(1), F(49, 300)),
        "a": F(19, 30), "c": F(54, 95), "b": F(1, 20),
    },
)

CENTROID_WALL_TWINS = {
    "centroid-a12-case1": "a12",
    "centroid-a12-case2": "a12",
    "centroid-a11red-case1": "a11red",
    "centroid-a11red-case2": "a11red",
    "centroid-a11irr-case1": "a11irr",
    "centroid-a11irr-case2": "a11irr",
    "centroid-a10-case1": "a10",
    "centroid-a10-case2": "a10",
}


# ---------------------------------------------------------------------------
# lct (germ) fixtures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LctFixture:
    name: str
    support: Optional[GermSupport]
    quasihomog: Optional[QuasiHomogGerm]
    provenance: str
    expected: Fraction


def _line_support(*levels: int) -> GermSupport:
    """All (a, b) with a + 4b equal to one of the given levels (chart of the
    order-25 point of P(1,4,25))."""
    mons = set()
    for lvl in levels:
        for b in range(lvl // 4 + 1):
            mons.add((lvl - 4 * b, b))
    return GermSupport(frozenset(mons))


LCT_FIXTURES: dict[str, LctFixture] = {
    "a9-germ": LctFixture(
        "a9-germ", germ((2, 0), (0, 10)), None,
        "double point x^2 = y^10", F(3, 5)),
    "a12-germ": LctFixture(
        "a12-germ", germ((2, 0), (0, 13)), None,
        "double point x^2 = y^13", F(15, 26)),
    "a3-germ": LctFixture(
        "a3-germ", germ((2, 0), (0, 4)), None,
        "tacnode on a polystable quartic", F(3, 4)),
    "d6-germ": LctFixture(
        "d6-germ", None, QuasiHomogGerm(2, 1, 5),
        "y(x - t1 y^2)(x - t2 y^2): weights (2,1), degree 5", F(3, 5)),
    "p114-nodal": LctFixture(
        "p114-nodal", germ((2, 0), (1, 1), (0, 2)), None,
        "even-degree curve nodal at the order-4 point", F(1)),
    "sextic-lct": LctFixture(
        "sextic-lct", germ((0, 3), (4, 1), (6, 0)), None,
        "z^3 + a(xy)^4 z + b(xy)^6 sextic germ", F(1, 2)),
    "p1425-d10": LctFixture(
        "p1425-d10", _line_support(10), None,
        "degree-10 curve at the order-25 point", F(1, 2)),
    "p1425-d20": LctFixture(
        "p1425-d20", _line_support(20), None,
        "degree-20 curve at the order-25 point", F(1, 4)),
    "p1425-d40": LctFixture(
        "p1425-d40", _line_support(40, 15), None,
        "degree-40 curve at the order-25 point", F(1, 3)),
    "p1425-d70": LctFixture(
        "p1425-d70", _line_support(70, 45, 20), None,
        "degree-70 curve at the order-25 point (degree-7 exclusion input)", F(1, 4)),
}


# ---------------------------------------------------------------------------
# GIT fixtures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryFixture:
    name: str
    system: BinaryFormSystem
    provenance: str
    expected: str


BINARY_FIXTURES: dict[str, BinaryFixture] = {
    "quartic-binary-unstable": BinaryFixture(
        "quartic-binary-unstable",
        BinaryFormSystem("even", 4, {2: frozenset({(5, 3)})}),
        "octic x^5 y^3: a root of multiplicity 5 > 4",
        "unstable"),
    "quartic-binary-ss": BinaryFixture(
        "quartic-binary-ss",
        BinaryFormSystem("even", 4, {2: frozenset({(4, 4)})}),
        "octic x^4 y^4: torus-fixed with weight hull {0}",
        "strictly-semistable"),
    "quintic-binary-f6": BinaryFixture(
        "quintic-binary-f6",
        BinaryFormSystem("odd", 5, {1: frozenset({(6, 0), (0, 6)})}),
        "restricted degree-6 block x^6 + y^6: weights {6, -6}",
        "stable"),
}


@dataclass(frozen=True)
class PlaneGitFixture:
    name: str
    curve: PlaneCurveSupport
    one_ps: OnePS
    provenance: str
    expected: Fraction


PLANE_GIT_FIXTURES: dict[str, PlaneGitFixture] = {
    "q5-double-conic-line": PlaneGitFixture(
        "q5-double-conic-line",
        PlaneCurveSupport(5, frozenset({(2, 2, 1), (1, 1, 3), (0, 0, 5)}), torus_fixed=True),
        OnePS((-1, 1, 0)),
        "z(xy - z^2)^2: fixed by the diagonal torus",
        F(0)),
    "xy4-destabilized": PlaneGitFixture(
        "xy4-destabilized",
        PlaneCurveSupport(5, frozenset({(1, 4, 0)})),
        OnePS((-1, 2, -1)),
        "monomial quintic x y^4 destabilized by (-1, 2, -1)",
        F(-7)),
}


# ---------------------------------------------------------------------------
# quintic stratum representatives
# ---------------------------------------------------------------------------

STRATUM_REPRESENTATIVES: dict[str, tuple[Fraction, ...]] = {
    "Sigma1": (F(1), F(0), F(0), F(0)),
    "Sigma2": (F(0), F(0), F(0), F(1)),
    "Sigma3": (F(0), F(1), F(0), F(0)),
    "Sigma4": (F(1), F(0), F(0), F(1)),
    "Sigma5": (F(0), F(1), F(0), F(1)),
    "Sigma7": (F(0), F(0), F(1), F(0)),
    "Sigma1-D6": (F(1), F(0)),
    "Sigma6": (F(0), F(1)),
}


# ---------------------------------------------------------------------------
# top-level registry for the CLI
# ---------------------------------------------------------------------------

REGISTRY_NAMES = sorted(
    set(WALL_FIXTURES)
    | {"firstwall-even", "firstwall-odd", "firstwall-d5"}
    | {"x26-delta", "p1425-delta"}
    | set(CENTROID_FIXTURES)
    | set(VOLUME_FIXTURES)
    | set(LCT_FIXTURES)
    | set(BINARY_FIXTURES)
    | {"quartic-binary"}
    | set(PLANE_GIT_FIXTURES)
    | {"quintic-strata"}
)
