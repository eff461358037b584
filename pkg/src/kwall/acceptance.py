"""Verification checklist: every headline identity the toolkit must reproduce.

Each criterion is a callable raising AssertionError on failure; run_all
executes the full list and collects one pass/fail line per criterion.  All
comparisons are exact (tolerance zero) because every target value is rational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import fixtures
from .exact import (
    PiecewiseQuadratic,
    mat3,
    mat3_inverse,
    mat3_mul,
    mat3_transpose,
    mat3_vec,
    poly,
    polygon,
    det3,
)
from .git import (
    cm_degree_poly,
    cm_positivity_window,
    hm_weight_plane,
    binary_system_stability,
    replay_certificate,
)
from .toric_kps import CentroidCase, solve_centroid_condition
from .valuations import index_bound, lct_newton, lct_quasihomog
from .volumes import MomentPolygon, TwoRayModel, volume_toric, volume_two_ray
from .walls import WallCase, admissibility_window, first_wall, quintic_wall_table, solve_wall

F = Fraction

_SEED = 20260810


@dataclass(frozen=True)
class CriterionResult:
    cid: int
    title: str
    passed: bool
    detail: str


# the printed piecewise volume formulas, frozen verbatim as reference data
_REFERENCE_PROFILES = {
    "a12": PiecewiseQuadratic(
        [0, 5, F(26, 5)],
        [poly(1, 0, F(-1, 26)), poly(26, -10, F(25, 26))],
    ),
    "a11red": PiecewiseQuadratic(
        [0, 2, 3],
        [poly(1, 0, F(-1, 6)), poly(3, -2, F(1, 3))],
    ),
    "a11irr": PiecewiseQuadratic(
        [0, F(12, 5), F(5, 2)],
        [poly(1, 0, F(-1, 6)), poly(25, -20, 4)],
    ),
    "a10": PiecewiseQuadratic(
        [0, F(22, 5), 5],
        [poly(1, 0, F(-1, 22)), poly(F(25, 3), F(-10, 3), F(1, 3))],
    ),
    "x26": PiecewiseQuadratic(
        [0, F(1, 25), F(26, 25)],
        [poly(F(1, 25), 0, F(-25, 26)), poly(F(26, 625), F(-2, 25), F(1, 26))],
    ),
    "p114-w31": PiecewiseQuadratic(
        [0, 1, 3],
        [poly(F(1, 4), 0, F(-1, 12)), poly(F(3, 8), F(-1, 4), F(1, 24))],
    ),
    "p114-w51": PiecewiseQuadratic(
        [0, 1, 5],
        [poly(F(1, 4), 0, F(-1, 20)), poly(F(5, 16), F(-1, 8), F(1, 80))],
    ),
    "p1425-w11": PiecewiseQuadratic(
        [0, F(1, 25), 1],
        [poly(F(1, 100), 0, F(-1, 4)), poly(F(1, 96), F(-1, 48), F(1, 96))],
    ),
    "p1425-w13": PiecewiseQuadratic(
        [0, F(3, 25), 1],
        [poly(F(1, 100), 0, F(-1, 12)), poly(F(1, 88), F(-1, 44), F(1, 88))],
    ),
    "p1425-w15": PiecewiseQuadratic(
        [0, F(1, 5), 1],
        [poly(F(1, 100), 0, F(-1, 20)), poly(F(1, 80), F(-1, 40), F(1, 80))],
    ),
}


def _sample_points(t_max: Fraction, n: int = 20) -> list[Fraction]:
    return [t_max * k / (n + 1) for k in range(1, n + 1)]


def criterion_1() -> str:
    """Quintic wall table."""
    rows = quintic_wall_table()
    walls = [r.wall for r in rows]
    expect = [F(3, 7), F(8, 15), F(6, 11), F(63, 115), F(54, 95)]
    assert walls == expect, f"table {walls} != {expect}"
    # the table op routes through solve_wall on engine-derived cases; double-check one
    case = fixtures.wall_case("a12")
    assert solve_wall(case).wall == F(8, 15)
    return "walls = " + ", ".join(str(w) for w in walls)


def criterion_2() -> str:
    """First-wall closed form across degrees."""
    for d in range(4, 21, 2):
        wall, _, _ = first_wall(d)
        assert wall == F(3, 2 * d), f"d={d}: {wall}"
    for d in range(5, 20, 2):
        wall, _, _ = first_wall(d)
        assert wall == F(3, 2 * d - 3), f"d={d}: {wall}"
    return "3/(2d) for even d in 4..20, 3/(2d-3) for odd d in 5..19"


def criterion_3() -> str:
    """Volume profiles against the printed formulas; toric engine independent."""
    for name in ("a12", "a11red", "a11irr", "a10", "x26"):
        vf = fixtures.VOLUME_FIXTURES[name]
        got = volume_two_ray(vf.model, vf.L).profile
        ref = _REFERENCE_PROFILES[name]
        assert got == ref, f"{name}: piece structure differs"
        for t in _sample_points(ref.breakpoints[-1]):
            assert got(t) == ref(t)
    for name in ("p114-w31", "p114-w51", "p1425-w11", "p1425-w13", "p1425-w15"):
        vf = fixtures.VOLUME_FIXTURES[name]
        got = volume_toric(vf.moment).profile
        ref = _REFERENCE_PROFILES[name]
        assert got == ref, f"{name}: toric piece structure differs"
        for t in _sample_points(ref.breakpoints[-1]):
            assert got(t) == ref(t)
    return "5 two-ray + 5 toric profiles, 20 exact samples each"


def criterion_4() -> str:
    """S-invariants of the quintic cases and the degree-26 hypersurface."""
    got = [fixtures.VOLUME_FIXTURES[n].s0() for n in ("a12", "a11red", "a11irr", "a10")]
    assert got == [F(17, 5), F(5, 3), F(49, 30), F(47, 15)], got
    vf = fixtures.VOLUME_FIXTURES["x26"]
    s0 = vf.s0()
    assert s0 == F(9, 25) and vf.anti_k == (F(15), F(25))
    for c in (F(0), F(1, 5), F(8, 15)):
        assert (vf.anti_k[0] - vf.anti_k[1] * c) * s0 == F(9, 25) * (15 - 25 * c)
    return "S0 = 17/5, 5/3, 49/30, 47/15; S(c) = (9/25)(15 - 25c)"


def criterion_5() -> str:
    """Centroid tests on all appendix cone fixtures."""
    walls = {"a12": F(8, 15), "a11red": F(6, 11), "a11irr": F(63, 115), "a10": F(54, 95)}
    count = 0
    for name, cf in sorted(fixtures.CENTROID_FIXTURES.items()):
        verdict = solve_centroid_condition(cf.case)
        assert verdict.verdict == "unique-c", name
        a, c, b = verdict.solution
        assert a > 0 and b > 0, name
        twin = fixtures.CENTROID_WALL_TWINS[name]
        assert c == walls[twin], f"{name}: c = {c}"
        assert c == solve_wall(fixtures.wall_case(twin)).wall, f"{name}: valuative twin disagrees"
        assert cf.to_printed(verdict.u0) == cf.expected["u0_printed"], name
        assert cf.to_printed(verdict.u2) == cf.expected["u2_printed"], name
        count += 1
    assert count == 8
    return "8 cone fixtures: unique-c, a > 0, b > 0, printed vectors reproduced"


def criterion_6() -> str:
    """Stability-threshold bounds and the admissibility window."""
    assert fixtures.delta_upper_bound("x26-delta") == F(1, 9)
    assert fixtures.delta_upper_bound("p1425-delta") == F(1, 10)
    for d in (4, 5, 7, 10, 13):
        win = admissibility_window("X26", d)
        assert (win.lo, win.hi, win.lo_closed, win.hi_closed) == (F(8, 3 * d), F(3, d), True, False)
        win = admissibility_window("P1425", d)
        assert win.lo == F(27, 10 * d)
        win = admissibility_window("P2", d)
        assert (win.lo, win.hi) == (F(0), F(3, d))
    return "delta bounds 1/9 and 1/10; X26 window [8/(3d), 3/d)"


def criterion_7() -> str:
    """Gorenstein index bounds and the degree-7 exclusion."""
    for c in (F(54, 95) + F(1, 1000), F(5, 9), F(3, 5) - F(1, 1000)):
        assert index_bound(5, c) == 5, c
    for c in (F(3, 8) + F(1, 100), F(2, 5), F(1, 2) - F(1, 100)):
        assert index_bound(4, c) == 2, c
    for c in (F(1, 2), F(3, 5), F(3, 4) - F(1, 100)):
        assert index_bound(4, c) >= 2, c
    # degree 7: index 5 needs 3/(3 - 7c) >= 5, i.e. c >= 12/35 ...
    assert index_bound(7, F(12, 35)) >= 5
    assert index_bound(7, F(12, 35) - F(1, 1000)) < 5
    # ... but the lct ceiling from the degree-70 germ forces c < 1/4 < 12/35
    ceiling = lct_newton(fixtures.LCT_FIXTURES["p1425-d70"].support)
    assert ceiling == F(1, 4)
    assert ceiling < F(12, 35)
    return "index 5 on (54/95, 3/5); index 2 after the quartic wall; d = 7 excluded (1/4 < 12/35)"


def criterion_8() -> str:
    """Log canonical threshold suite."""
    expect = {
        "a9-germ": F(3, 5),
        "a12-germ": F(15, 26),
        "p114-nodal": F(1),
        "p1425-d10": F(1, 2),
        "p1425-d20": F(1, 4),
        "p1425-d40": F(1, 3),
    }
    for name, val in expect.items():
        got = lct_newton(fixtures.LCT_FIXTURES[name].support)
        assert got == val, f"{name}: {got}"
    assert lct_quasihomog(fixtures.LCT_FIXTURES["d6-germ"].quasihomog) == F(3, 5)
    return "lct = 3/5, 15/26, 1, 1/2, 1/4, 1/3 as listed"


def criterion_9() -> str:
    """CM degree as a polynomial identity plus its positivity window."""
    for d in range(3, 10):
        got = cm_degree_poly(2, d)
        expect = [F(0), F(27), F(-18 * d), F(3 * d * d)]
        assert got == expect, f"d={d}: {got}"
        win = cm_positivity_window(2, d)
        assert (win.lo, win.hi) == (F(0), F(3, d))
    return "cm_degree(2, d, c) = 27c - 18dc^2 + 3d^2c^3 = 3c(3 - cd)^2; window (0, 3/d)"


def criterion_10() -> str:
    """GIT verdicts with replayable certificates."""
    fx = fixtures.BINARY_FIXTURES["quartic-binary-unstable"]
    verdict = binary_system_stability(fx.system)
    assert verdict.verdict == "unstable"
    replayed = replay_certificate(fx.system, verdict.certificate)
    assert replayed and all(w > 0 for w in replayed), replayed
    fx = fixtures.BINARY_FIXTURES["quartic-binary-ss"]
    verdict = binary_system_stability(fx.system)
    assert verdict.verdict == "strictly-semistable" and verdict.polystable is True
    q5 = fixtures.PLANE_GIT_FIXTURES["q5-double-conic-line"]
    assert hm_weight_plane(q5.curve, q5.one_ps) == 0
    return "x^5 y^3 unstable (certificate replays positive); x^4 y^4 strictly semistable; mu(Q5) = 0"


def _random_fraction(rng: random.Random, lo: int = -6, hi: int = 6, den: int = 12) -> Fraction:
    return F(rng.randint(lo, hi), rng.randint(1, den))


def _random_unimodular(rng: random.Random):
    m = mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    for _ in range(6):
        i, j = rng.sample(range(3), 2)
        shear = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        shear[i][j] = rng.randint(-2, 2)
        m = mat3_mul(m, mat3(shear))
    perm = list(range(3))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(3)]
    pm = [[signs[r] if perm[r] == c else 0 for c in range(3)] for r in range(3)]
    return mat3_mul(m, mat3(pm))


def criterion_11() -> str:
    """Exact property suites: wall scale-invariance, random-fixture engine
    agreement, centroid unimodular equivariance."""
    rng = random.Random(_SEED)

    # (a) scale invariance of walls: 200 random rescalings
    base_names = ("a12", "a11red", "a11irr", "a10", "p1425-case1", "p1425-case2")
    for _ in range(200):
        case = fixtures.wall_case(rng.choice(base_names))
        lam = F(rng.randint(1, 400), rng.randint(1, 400))
        scaled = WallCase(
            case.name + "-scaled", case.A0 * lam, case.ordD * lam, case.S0 * lam,
            case.alpha, case.beta, case.valid_range,
        )
        assert solve_wall(scaled).wall == solve_wall(case).wall

    # (b) engine agreement on random triangle fixtures with random directions
    done = 0
    while done < 60:
        verts = [(_random_fraction(rng, 0, 8), _random_fraction(rng, 0, 8)) for _ in range(3)]
        try:
            tri = polygon(verts)
        except ValueError:
            continue
        if tri.kind != "polygon":
            continue
        w = (F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        if w == (0, 0):
            continue
        levels = sorted({w[0] * v[0] + w[1] * v[1] for v in tri.vertices})
        if len(levels) < 2 or levels[0] == levels[1]:
            continue  # needs a unique minimizing vertex for a two-ray shape
        toric = volume_toric(MomentPolygon(tri, w)).profile
        h2 = toric(0)
        e = -toric.pieces[0].coeff(2)
        t1 = toric.breakpoints[1]
        model = TwoRayModel(h2, e, F(0), (t1 * e, h2))
        two = volume_two_ray(model, (F(1), F(0))).profile
        assert two == toric, f"twin mismatch for {verts} {w}"
        for _ in range(20):
            t = toric.breakpoints[-1] * F(rng.randint(0, 100), 100)
            assert two(t) == toric(t)
        done += 1

    # (c) unimodular equivariance of the centroid test: 100 trials
    names = sorted(fixtures.CENTROID_FIXTURES)
    for _ in range(100):
        cf = fixtures.CENTROID_FIXTURES[rng.choice(names)]
        base = solve_centroid_condition(cf.case)
        g = _random_unimodular(rng)
        assert det3(g) in (1, -1)
        ginv_t = mat3_transpose(mat3_inverse(g))
        moved = CentroidCase(
            name=cf.case.name + "-moved",
            generators=tuple(mat3_vec(g, n) for n in cf.case.generators),
            xi0=mat3_vec(g, cf.case.xi0),
            eta0star=mat3_vec(ginv_t, cf.case.eta0star),
            u1=mat3_vec(ginv_t, cf.case.u1),
        )
        res = solve_centroid_condition(moved)
        assert res.verdict == "unique-c"
        assert res.solution == base.solution
    return "200 wall rescalings, 60 random engine-agreement fixtures, 100 lattice moves: all exact"


CRITERIA: list[tuple[int, str, Callable[[], str]]] = [
    (1, "quintic wall table", criterion_1),
    (2, "first-wall formula", criterion_2),
    (3, "volume profiles (both engines)", criterion_3),
    (4, "S-invariants", criterion_4),
    (5, "centroid tests", criterion_5),
    (6, "stability-threshold bounds", criterion_6),
    (7, "index bounds / degree-7 exclusion", criterion_7),
    (8, "lct suite", criterion_8),
    (9, "CM degree", criterion_9),
    (10, "GIT verdicts", criterion_10),
    (11, "property suites", criterion_11),
]


def run_all() -> list[CriterionResult]:
    results = []
    for cid, title, fn in CRITERIA:
        try:
            detail = fn()
            results.append(CriterionResult(cid, title, True, detail))
        except AssertionError as exc:
            results.append(CriterionResult(cid, title, False, str(exc) or "assertion failed"))
    return results
