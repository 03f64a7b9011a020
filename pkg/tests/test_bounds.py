from fractions import Fraction as F

import pytest

from pointline import (
    CrossingConstants,
    DomainError,
    GraphSize,
    Interval,
    InvalidCutoff,
    Unresolved,
    build_arrangement,
    circle,
    collinear,
    crossing_lower_bound,
    eps_few,
    f_wd,
    few_lines_lower_bound,
    few_params,
    grid,
    hirzebruch_check,
    near_pencil,
    scan_constants_few,
    scan_constants_wd,
    st_bound_edges,
    st_bound_lines,
    tail_sum,
    verify_theorems,
    wd_params,
)

ALPHA = F(103, 16)
BETA = F(31827, 1024)


# ---------------------------------------------------------------------------
# Interval
# ---------------------------------------------------------------------------


def test_interval_basic_arithmetic():
    iv = Interval.of(1, 2)
    assert iv + 1 == Interval.of(2, 3)
    assert 1 - iv == Interval.of(-1, 0)
    assert iv - Interval.of(0, 1) == Interval.of(0, 2)
    assert iv * F(-3) == Interval.of(-6, -3)
    assert F(-3) * iv == Interval.of(-6, -3)
    assert iv / 2 == Interval.of(F(1, 2), 1)
    assert iv / -1 == Interval.of(-2, -1)
    assert -iv == Interval.of(-2, -1)
    assert iv.width == 1
    assert iv.contains(F(3, 2)) and not iv.contains(3)
    assert Interval.of(0, 3).encloses(iv)


def test_interval_rejects_reversed_endpoints():
    with pytest.raises(DomainError):
        Interval.of(2, 1)


def test_interval_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Interval.of(1, 2) / 0


# ---------------------------------------------------------------------------
# Crossing-number machinery
# ---------------------------------------------------------------------------


def test_crossing_constants_defaults():
    k = CrossingConstants()
    assert (k.alpha, k.beta) == (ALPHA, BETA)
    with pytest.raises(DomainError):
        CrossingConstants(alpha=F(0))


def test_graph_size_validation():
    with pytest.raises(DomainError):
        GraphSize(0, 0)
    with pytest.raises(DomainError):
        GraphSize(4, 7)


def test_crossing_lower_bound_at_threshold():
    # m = alpha * n exactly
    assert crossing_lower_bound(GraphSize(16, 103)) == F(1024 * 103**3, 31827 * 256)


def test_crossing_lower_bound_below_threshold():
    assert crossing_lower_bound(GraphSize(100, 100)) == 0
    # K10 has m = 45 < alpha*10, so the premise fails and no bound is claimed
    assert crossing_lower_bound(GraphSize(10, 45)) == 0


def test_st_bound_edges_small_i():
    assert st_bound_edges(9, 2) == max(F(927, 16), F(2577987, 2048)) == F(2577987, 2048)


def test_st_bound_edges_branch_switch():
    # i large enough that the quadratic branch drops below alpha*n
    assert st_bound_edges(9, 100) == F(927, 16)


def test_st_bound_lines():
    assert st_bound_lines(9, 3) == max(F(927, 32), F(2577987, 16384)) == F(2577987, 16384)
    assert st_bound_lines(9, 2) == max(ALPHA * 9, BETA * 81 / 2)


def test_st_bounds_monotone_in_n():
    for i in (2, 3, 7):
        assert st_bound_edges(50, i) >= st_bound_edges(10, i)
        assert st_bound_lines(50, i) >= st_bound_lines(10, i)


def test_st_bound_domain():
    with pytest.raises(DomainError):
        st_bound_edges(9, 1)
    with pytest.raises(DomainError):
        st_bound_lines(0, 2)


# ---------------------------------------------------------------------------
# Hirzebruch
# ---------------------------------------------------------------------------


def test_hirzebruch_grid33():
    rep = hirzebruch_check(build_arrangement(grid(3, 3)))
    assert rep.applicable and rep.holds
    assert (rep.lhs, rep.rhs) == (18, 9)


def test_hirzebruch_grid44():
    # s = {2: 48, 3: 4, 4: 10}: lhs = 48 + 3 = 51, rhs = 16
    rep = hirzebruch_check(build_arrangement(grid(4, 4)))
    assert rep.applicable and rep.holds
    assert (rep.lhs, rep.rhs) == (51, 16)


def test_hirzebruch_near_pencil_not_applicable():
    rep = hirzebruch_check(build_arrangement(near_pencil(5)))
    assert not rep.applicable
    assert rep.holds is None


# ---------------------------------------------------------------------------
# Series enclosures
# ---------------------------------------------------------------------------


def test_tail_sum_one_term():
    iv = tail_sum("1/i^2", 2, 2)
    assert iv == Interval.of(F(1, 4) + F(1, 3), F(1, 4) + F(1, 2))


def test_tail_sum_contains_reference():
    # sum_{i>=2} 1/i^2 = pi^2/6 - 1 = 0.6449340668...
    iv = tail_sum("1/i^2", 2, 4096)
    assert iv.contains(F("0.6449340668"))


def test_tail_sum_nesting():
    for kind in ("1/i^2", "(i+1)/i^3"):
        for c in (2, 8, 46):
            coarse = tail_sum(kind, c, 64)
            fine = tail_sum(kind, c, 128)
            assert coarse.encloses(fine)


def test_tail_sum_width_shrinks():
    iv = tail_sum("(i+1)/i^3", 46, 4096)
    assert iv.width < F(1, 10**6)


def test_tail_sum_validation():
    with pytest.raises(InvalidCutoff):
        tail_sum("1/i^2", 10, 9)
    with pytest.raises(DomainError):
        tail_sum("1/i", 2, 10)
    with pytest.raises(DomainError):
        tail_sum("1/i^2", 1, 10)


# ---------------------------------------------------------------------------
# Incidence bound constants
# ---------------------------------------------------------------------------


def test_wd_params_h_minimum():
    assert wd_params(8, F(1, 26), 2, cutoff=64).h == F(24, 11)


def test_wd_params_published_point():
    p = wd_params(46, F(1, 26), 2)
    assert p.h == F(506, 53)
    assert p.r == F(20803, 8944)
    assert p.r >= 2
    assert p.delta.lo >= F(1, 26)
    assert p.x == (p.h + 1) / 2
    assert -1 < p.y < 0


def test_wd_params_validation():
    with pytest.raises(DomainError):
        wd_params(7, F(1, 26), 2)
    with pytest.raises(DomainError):
        wd_params(46, F(1, 2), 2)
    with pytest.raises(DomainError):
        wd_params(46, F(1, 26), 5)


def test_wd_identities_sampled():
    for c in range(8, 80):
        h = F(c * (c - 2), 5 * c - 18)
        x = (h + 1) / 2
        # closed form of the per-size coefficient at i = c equals x
        assert x == F(c - 1, 2) - 2 * h + 9 * h / c
        assert x >= F(3, 2) and x >= (h + 4) / 4 and x >= 2 - h / 5
        y = c - 5 * h - 2 + 18 * h / (c + 1)
        assert -1 < y < 0
        assert y == F(-18 * (c - 2), (c + 1) * (5 * c - 18))
        # bridge between the two equivalent series offsets
        assert y * F(c + 1, c**3) == F(-18 * (c - 2), c**3 * (5 * c - 18))


def test_f_wd_published_point():
    assert f_wd(46).lo > F(1, 26)


def test_f_wd_comparisons():
    f8 = f_wd(8, cutoff=4096)
    f46 = f_wd(46, cutoff=4096)
    assert f8.hi < f46.lo
    coarse = f_wd(46, cutoff=512)
    fine = f_wd(46, cutoff=1024)
    assert coarse.encloses(fine)
    assert fine.width < coarse.width


def test_scan_singleton():
    scan = scan_constants_wd(46, 46, cutoff=512)
    assert scan.argmax_c == 46
    assert len(scan.table) == 1


def test_scan_small_range():
    scan = scan_constants_wd(40, 50, cutoff=2048)
    assert scan.argmax_c == 46


def test_scan_low_range_below_peak():
    scan = scan_constants_wd(8, 20, cutoff=1024)
    best = dict(scan.table)[scan.argmax_c]
    assert best.hi < f_wd(46, cutoff=1024).lo


def test_scan_refinement_resolves():
    # widths at cutoff 64 exceed the f(45)/f(46) gap; doubling must kick in
    scan = scan_constants_wd(44, 48, cutoff=64)
    assert scan.argmax_c == 46
    assert scan.cutoff > 64


def test_scan_unresolved_at_cutoff_limit():
    with pytest.raises(Unresolved):
        scan_constants_wd(44, 48, cutoff=64, max_cutoff=64)


def test_scan_domain():
    with pytest.raises(DomainError):
        scan_constants_wd(5, 20)


# ---------------------------------------------------------------------------
# Few-point-line constants
# ---------------------------------------------------------------------------


def test_few_params_published_point():
    p = few_params(36)
    assert p.b == F(206, 693)
    assert p.b <= F(1, 3)
    assert p.a.lo >= F(1, 39)


def test_few_params_h_at_29():
    # (29^2 - 29 - 2) / (4*29 - 16) = 810/100
    assert few_params(29, cutoff=64).h == F(81, 10)


def test_few_params_validation():
    with pytest.raises(DomainError):
        few_params(28)


def test_few_identities_sampled():
    for c in range(29, 90):
        h = F(c * c - c - 2, 4 * c - 16)
        x = h + 1
        assert x == F(c * c + 3 * c - 18, 4 * c - 16)
        positivity = F(c * c - 3 * c - 14, 2 * c * (c - 4))
        assert c - 4 * h + 14 * h / c == positivity
        assert positivity > 0
        assert x >= 3 * (h + 4) / 4 and x >= 6
        assert max(F(i * (i - 1), 2) - h * (2 * i - 9) for i in range(5, c + 1)) == x


def test_few_lines_lower_bound_substitution():
    p = few_params(36)
    lb = few_lines_lower_bound(100, 10, p)
    assert lb == p.a * 10**4 - F(206, 693) * 1000


def test_few_lines_lower_bound_degenerate_all_collinear():
    p = few_params(36)
    lb = few_lines_lower_bound(10, 10, p)
    assert lb.hi <= 0  # vacuous bound


def test_few_lines_lower_bound_grows_with_n():
    p = few_params(36)
    assert few_lines_lower_bound(200, 10, p).lo > 4 * few_lines_lower_bound(100, 10, p).lo


def test_few_lines_lower_bound_domain():
    p = few_params(36, cutoff=64)
    with pytest.raises(DomainError):
        few_lines_lower_bound(10, 1, p)
    with pytest.raises(DomainError):
        few_lines_lower_bound(10, 11, p)


def test_eps_few_published_point():
    iv = eps_few(44)
    assert iv.lo >= F(2, 61)
    assert iv.width < F(1, 10**6)
    # exact value is just above 1/30.15
    assert F(1, 31) < iv.lo and iv.hi < F(1, 30)


def test_eps_few_increases_to_44():
    assert eps_few(29).hi < eps_few(44).lo


def test_enclosures_contain_independent_zeta_reference():
    """Hurwitz-zeta evaluation is a path-independent oracle for the series.

    sum_{i>=c} 1/i^2 = zeta(2, c) and sum_{i>=c} (i+1)/i^3 = zeta(2, c)
    + zeta(3, c); every enclosure must contain the value computed that
    way at 40 significant digits.
    """
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40
    alpha, beta = mp.mpf(103) / 16, mp.mpf(31827) / 1024

    def as_fraction(v):
        return F(mp.nstr(v, 35))

    for c in (8, 29, 46, 100):
        h = mp.mpf(c * (c - 2)) / (5 * c - 18)
        off = mp.mpf(-18 * (c - 2)) / (c**3 * (5 * c - 18))
        series = mp.zeta(2, c) + mp.zeta(3, c)
        ref = (1 - beta / 2 * (off + series)) / (h + 1 + alpha)
        assert f_wd(c).contains(as_fraction(ref)), c
    for c in (29, 36, 44):
        off = mp.mpf(c * c - 3 * c - 14) / (2 * c**3 * (c - 4))
        ref = (1 - beta / 2 * (off + mp.zeta(2, c))) * mp.mpf(2 * c - 8) / (c * c + 3 * c - 18)
        assert few_params(c).a.contains(as_fraction(ref)), c
        b = mp.mpf(2 * c - 8) * alpha / (c * c + 3 * c - 18)
        assert eps_few(c).contains(as_fraction(2 * ref / (1 + 2 * b))), c


def test_scan_few_small_range():
    scan = scan_constants_few(40, 50, cutoff=2048)
    assert scan.argmax_c == 44


# ---------------------------------------------------------------------------
# Per-configuration verification
# ---------------------------------------------------------------------------


def _by_name(checks):
    return {c.name: c for c in checks}


def test_verify_near_pencil_100():
    checks = _by_name(verify_theorems(build_arrangement(near_pencil(100))))
    assert len(checks) == 8
    pd = checks["point_degree"]
    assert pd.applicable and pd.holds
    assert pd.lhs == 99 and pd.rhs == F(100, 26) + 2
    assert checks["total_lines"].holds
    assert checks["total_lines"].lhs == 100
    assert checks["lines_le3"].lhs == 99
    assert checks["half_le3"].holds
    assert not checks["hirzebruch"].applicable  # 99 collinear > n - 3
    assert all(c.holds is not False for c in checks.values())


def test_verify_grid33_all_applicable_hold():
    checks = _by_name(verify_theorems(build_arrangement(grid(3, 3))))
    assert checks["lines_le3"].lhs == 20
    assert checks["lines_le3"].rhs == F(9 * 6, 122)
    assert not checks["incidences"].applicable  # 3 collinear > 9/26 + 2
    failed = [c.name for c in checks.values() if c.holds is False]
    assert failed == []


def test_verify_collinear_degenerate():
    checks = _by_name(verify_theorems(build_arrangement(collinear(5))))
    assert not checks["point_degree"].applicable
    assert not checks["incidences"].applicable
    assert not checks["half_le3"].applicable
    assert checks["total_lines"].holds  # 1 >= 0
    assert checks["total_lines"].rhs == 0


def test_verify_triangle_small_n_guard():
    # the 3-point triangle falls below both n >= 5 premises
    checks = _by_name(verify_theorems(build_arrangement(circle(3))))
    assert not checks["point_degree"].applicable
    assert not checks["incidences"].applicable
    assert checks["half_le3"].applicable and checks["half_le3"].holds
    assert all(c.holds is not False for c in checks.values())


def test_verify_circle_incidence_bound_applicable():
    # circle(60): 2 collinear max, well under 60/26 + 2
    checks = _by_name(verify_theorems(build_arrangement(circle(60))))
    inc = checks["incidences"]
    assert inc.applicable and inc.holds
    assert inc.lhs == 60 * 59  # every pair contributes two incidences
    assert all(c.holds is not False for c in checks.values())


def test_verify_detects_violations_with_weak_constants():
    # tiny constants cannot support the Szemeredi-Trotter bounds
    weak = CrossingConstants(alpha=F(1, 1000), beta=F(1, 1000))
    checks = _by_name(verify_theorems(build_arrangement(grid(4, 4)), weak))
    assert checks["st_edges"].holds is False
