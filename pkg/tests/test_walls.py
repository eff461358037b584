from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from kwall import fixtures
from kwall.walls import (
    Interval,
    K_UNSTABLE,
    NECESSARY_PASS,
    QuinticStratumPoint,
    WallCase,
    WallError,
    admissibility_window,
    classify_quintic_stratum,
    first_wall,
    interpolation_window,
    quintic_wall_table,
    solve_wall,
    stratum_closure_contains,
)

rng = random.Random(31415926)

QUINTIC_RANGE = Interval(F(0), F(3, 5))


def test_solve_wall_a12():
    rep = solve_wall(fixtures.wall_case("a12"))
    assert rep.wall == F(8, 15)
    assert rep.unstable_above and not rep.unstable_below
    assert rep.verdict(F(1, 2)) == NECESSARY_PASS
    assert rep.verdict(F(11, 20)) == K_UNSTABLE


def test_solve_wall_a11red():
    assert solve_wall(fixtures.wall_case("a11red")).wall == F(6, 11)


def test_solve_wall_a10():
    assert solve_wall(fixtures.wall_case("a10")).wall == F(54, 95)


def test_solve_wall_p114_weights51_unstable_everywhere():
    rep = solve_wall(fixtures.wall_case("p114-nondeg"))
    assert rep.wall is None
    for c in (F(1, 100), F(1, 3), F(3, 5) - F(1, 100)):
        assert rep.verdict(c) == K_UNSTABLE


def test_solve_wall_degenerate_case():
    case = WallCase("degenerate", F(2), F(1), F(1), F(2), F(1), QUINTIC_RANGE)
    rep = solve_wall(case)
    assert rep.degenerate and rep.wall is None


def test_solve_wall_constant_margin():
    case = WallCase("flat", F(2), F(5), F(1), F(3), F(5), QUINTIC_RANGE)
    rep = solve_wall(case)  # A - S = -1 identically
    assert rep.wall is None and rep.unstable_above and rep.unstable_below
    assert rep.verdict(F(1, 2)) == "K-unstable"


def test_wall_case_rejects_nonpositive_antikanonical_degree():
    with pytest.raises(WallError):
        WallCase("bad", F(1), F(0), F(1), F(1), F(5), QUINTIC_RANGE)


def test_wall_bracketing():
    eps = F(1, 1000)
    for name in ("a12", "a11red", "a11irr", "a10"):
        case = fixtures.wall_case(name)
        rep = solve_wall(case)
        assert case.margin(rep.wall) == 0
        assert case.margin(rep.wall - eps) > 0
        assert case.margin(rep.wall + eps) < 0


def test_wall_scale_invariance():
    for _ in range(50):
        name = rng.choice(("a12", "a11red", "a11irr", "a10"))
        case = fixtures.wall_case(name)
        lam = F(rng.randint(1, 99), rng.randint(1, 99))
        scaled = WallCase(case.name, case.A0 * lam, case.ordD * lam, case.S0 * lam,
                          case.alpha, case.beta, case.valid_range)
        assert solve_wall(scaled).wall == solve_wall(case).wall


def test_first_wall_values():
    assert first_wall(4)[0] == F(3, 8)
    assert first_wall(5)[0] == F(3, 7)
    assert first_wall(6)[0] == F(1, 4)
    assert "z^2" in first_wall(4)[1]
    with pytest.raises(WallError):
        first_wall(3)


def test_quintic_wall_table_values():
    rows = quintic_wall_table()
    assert [r.wall for r in rows] == [F(3, 7), F(8, 15), F(6, 11), F(63, 115), F(54, 95)]
    walls = [r.wall for r in rows]
    assert walls == sorted(walls)
    assert all(F(0) < w < F(3, 5) for w in walls)


def test_table_rows_equal_individual_solver_output():
    rows = quintic_wall_table()
    assert rows[0].wall == first_wall(5)[0]
    for row, name in zip(rows[1:], ("a12", "a11red", "a11irr", "a10")):
        assert row.wall == solve_wall(fixtures.wall_case(name)).wall


def test_admissibility_windows():
    for d in (4, 5, 9):
        win = admissibility_window("X26", d)
        assert win.lo == F(8, 3 * d) and win.lo_closed
        assert win.hi == F(3, d) and not win.hi_closed
        assert admissibility_window("P1425", d).lo == F(27, 10 * d)
        p2 = admissibility_window("P2", d)
        assert (p2.lo, p2.hi, p2.lo_closed) == (0, F(3, d), False)
        assert admissibility_window("P114", d).lo == 0
    with pytest.raises(WallError):
        admissibility_window("P3", 5)


def test_stratum_examples():
    assert classify_quintic_stratum(QuinticStratumPoint((0, 0, 0, 1))).stratum == "Sigma2"
    v = classify_quintic_stratum(QuinticStratumPoint((3, 7, 0, 0)))
    assert (v.stratum, v.wall) == ("Sigma3", F(6, 11))
    v = classify_quintic_stratum(QuinticStratumPoint((1, 2, 5, 9)))
    assert v.stratum == "Sigma7" and v.wall is None and "3/5" in v.note
    assert classify_quintic_stratum(QuinticStratumPoint((1, 0))).stratum == "Sigma1"
    assert classify_quintic_stratum(QuinticStratumPoint((2, 5))).stratum == "Sigma6"
    with pytest.raises(WallError):
        QuinticStratumPoint((0, 0, 0, 0))
    with pytest.raises(WallError):
        QuinticStratumPoint((1, 2, 3))


def test_stratum_partition():
    # every nonzero point lands in exactly one stratum
    vals = (F(0), F(1), F(-2), F(3, 7))
    seen = set()
    for s in vals:
        for r in vals:
            for h in vals:
                for u in vals:
                    if (s, r, h, u) == (0, 0, 0, 0):
                        continue
                    v = classify_quintic_stratum(QuinticStratumPoint((s, r, h, u)))
                    seen.add(v.stratum)
                    assert v.stratum in {"Sigma1", "Sigma2", "Sigma3", "Sigma4", "Sigma5", "Sigma7"}
    assert seen == {"Sigma1", "Sigma2", "Sigma3", "Sigma4", "Sigma5", "Sigma7"}


def test_stratum_walls_match_table():
    rows = quintic_wall_table()
    by_index = {r.index: r.wall for r in rows}
    expect = {
        "Sigma1": by_index[1], "Sigma2": by_index[2], "Sigma3": by_index[3],
        "Sigma4": by_index[4], "Sigma5": by_index[5],
    }
    for name, rep in fixtures.STRATUM_REPRESENTATIVES.items():
        v = classify_quintic_stratum(QuinticStratumPoint(rep))
        if v.stratum in expect:
            assert v.wall == expect[v.stratum], name


def test_stratum_closure_order():
    reps = fixtures.STRATUM_REPRESENTATIVES
    # Sigma2 -> Sigma4 -> Sigma5 -> Sigma7 and Sigma1 -> Sigma3 -> Sigma5
    for small, big in (
        ("Sigma2", "Sigma4"), ("Sigma4", "Sigma5"), ("Sigma5", "Sigma7"),
        ("Sigma1", "Sigma3"), ("Sigma3", "Sigma5"),
    ):
        assert stratum_closure_contains(big, QuinticStratumPoint(reps[small])), (small, big)
    # and the reverse inclusions fail
    for small, big in (("Sigma4", "Sigma2"), ("Sigma7", "Sigma5"), ("Sigma3", "Sigma1")):
        assert not stratum_closure_contains(big, QuinticStratumPoint(reps[small]))


def test_interpolation_window_examples():
    win = interpolation_window(F(3, 7), F(3, 5), 5)
    assert (win.lo, win.hi, win.lo_closed, win.hi_closed) == (F(3, 7), F(3, 5), True, False)
    flat = interpolation_window(F(1, 3), F(1, 3), 5)
    assert (flat.lo, flat.hi, flat.lo_closed, flat.hi_closed) == (F(1, 3), F(1, 3), True, True)
    stopped = interpolation_window(F(8, 15), F(15, 26), 5)
    assert (stopped.lo, stopped.hi) == (F(8, 15), F(15, 26))
    with pytest.raises(WallError):
        interpolation_window(F(1, 2), F(1, 3), 5)


def test_first_wall_range_check():
    # engine-derived first wall must sit inside the coefficient range
    for d in range(4, 16):
        wall, _, rep = first_wall(d)
        assert wall in rep.case.valid_range


def test_wall_invariant_under_valuation_normalization():
    # the same scenario in the divisorial normalization (scale 1, weights and
    # direction divided by the quotient order) must produce the same wall
    from kwall.valuations import CyclicQuot, MonomialVal, germ, log_discrepancy, ord_on_germ
    from kwall.volumes import MomentPolygon, s_invariant, volume_toric

    base = solve_wall(fixtures.wall_case("p114-deg"))
    val = MonomialVal(CyclicQuot(4, 1, 1), (3, 1), scale=1)
    g = germ((2, 0), (0, 6), (10, 0), (0, 10))
    poly114 = fixtures.VOLUME_FIXTURES["p114-w31"].moment.polygon
    prof = volume_toric(MomentPolygon(poly114, (F(-1, 2), F(-3))))
    case = WallCase(
        "p114-deg-divisorial",
        A0=log_discrepancy(val),
        ordD=ord_on_germ(val, g),
        S0=s_invariant(prof, (F(6), F(10))),
        alpha=F(6),
        beta=F(10),
        valid_range=QUINTIC_RANGE,
    )
    assert (case.A0, case.ordD, case.S0) == (F(1), F(3, 2), F(1, 3))
    assert solve_wall(case).wall == base.wall == F(6, 11)
