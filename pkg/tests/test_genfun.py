from math import comb

import pytest

from golden import ASYM_PRINTED, ORBITS_PRINTED, R5_ENUMERATED, TABLE_AREA, TABLE_HP, cached_census
from parapoly import genfun
from parapoly.bijections import closed_counts
from parapoly.genfun import (
    GFMismatch,
    Window,
    area_counts,
    area_window,
    perimeter_counts,
    perimeter_window,
)
from parapoly.polyomino import GROUP, GroupElement as G, Subgroup
from parapoly.series import Monomial, QPoly, TruncationError, TSeries

W = perimeter_window(14)
AW = area_window(14)


@pytest.fixture(scope="module")
def parts():
    return genfun.components(W)


@pytest.fixture(scope="module")
def area_parts():
    return genfun.components(AW)


def qp(d):
    return QPoly(d)


def column(s, lo, hi):
    return [s[k].at_one() for k in range(lo, hi)]


def test_window_validation():
    with pytest.raises(ValueError):
        Window(0, 3)
    assert perimeter_window(5) == Window(5, 5, "perimeter")
    assert area_window(7) == Window(8, 7, "area")


def test_pochhammer():
    assert genfun.pochhammer(genfun.Q, 0) == TSeries.one(1)
    p = genfun.pochhammer(genfun.Q, 2)
    assert p[0] == qp({0: 1, 1: -1, 2: -1, 3: 1})
    p = genfun.pochhammer(Monomial(1, 1, 1), 1)
    assert p[0] == qp({0: 1}) and p[1] == qp({1: -1})


def test_par_gf_catalan_column(parts):
    assert column(parts["P"], 2, 7) == [1, 2, 5, 14, 42]
    assert column(parts["P"], 2, 14) == [comb(2 * n, n) // (n + 1) for n in range(1, 13)]


def test_par_gf_area_column(area_parts):
    counts = area_counts(area_parts["P"])
    assert [counts[n] for n in range(1, 6)] == [1, 2, 4, 9, 20]


def test_par_gf_area_distribution(parts):
    hist = cached_census("halfperimeter", 4).fix_area[G.ID]
    assert parts["P"][4] == QPoly(dict(hist))
    assert parts["P"][2] == qp({1: 1})


def test_par_gf_rejects_bad_denominator():
    with pytest.raises(ValueError):
        genfun.par_gf(Monomial(1, -3, 0), genfun.T, genfun.T, genfun.Q, W)


def test_r2_polynomials(parts):
    r2 = parts["R2"]
    assert r2[2] == qp({1: 1})
    assert r2[3] == qp({2: 2})
    assert r2[4] == qp({4: 1, 3: 2})
    assert r2[5] == R5_ENUMERATED
    assert r2[6] == qp({9: 1, 8: 2, 7: 1, 6: 2, 5: 4})
    assert column(r2, 2, 9) == [1, 2, 3, 6, 10, 20, 35]


def test_r2_even_odd_split():
    e = genfun.r2_even_series(W)
    o = genfun.r2_odd_series(W)
    # even-width shapes have even area
    for k, c in e.terms():
        assert all(x % 2 == 0 for x in c.exponents())
    total = cached_census("halfperimeter", 8)
    assert (e + o)[8].at_one() == total.fix[G.R2]


def test_qcatalan():
    c = genfun.qcatalan(6)
    assert c[0] == qp({0: 1})
    assert c[2] == qp({0: 1, 1: 1})
    assert c[3] == qp({0: 1, 1: 2, 2: 1, 3: 1})
    assert c[4].at_one() == 14
    for n in range(1, 7):
        assert c[n].degree == n * (n - 1) // 2
    with pytest.raises(ValueError):
        genfun.qcatalan(-1)


def test_dyck_gf():
    d = genfun.dyck_gf(Window(13, 80))
    assert d[1] == qp({1: 1})
    assert d[2] == qp({3: 1})
    assert d[3] == qp({5: 1, 6: 1})


def test_dyck_quotient_matches_catalan_form():
    w = Window(13, 90)
    a = genfun.dyck_gf_quotient(w)
    b = genfun.dyck_gf_catalan(w)
    assert a.agrees_with(b)


def test_ln_series():
    w = Window(6, 30)
    l1 = genfun.ln_series(1, genfun.T, genfun.Q, w)
    assert l1[1] == qp({1: 1}) and l1[2] == qp({3: 1}) and l1[3] == qp({5: 1, 6: 1})
    for n in range(1, 5):
        ln = genfun.ln_series(n, genfun.T, genfun.Q, w)
        assert ln.valuation == 1 and ln[1] == qp({n: 1})
    with pytest.raises(ValueError):
        genfun.ln_series(0, genfun.T, genfun.Q, w)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_ln_matches_functional_equation(n):
    assert genfun.ln_residual(n, 8) == {}
    it = genfun.ln_by_iteration(n, 5)
    w = Window(6, 60)
    ln = genfun.ln_series(n, genfun.T, genfun.Q, w)
    for h in range(1, 6):
        at_u1: dict = {}
        for (_, a), c in it[h].items():
            at_u1[a] = at_u1.get(a, 0) + c
        assert ln[h] == QPoly(at_u1)


def test_main_axis_series(parts):
    d1 = parts["D1"]  # glued Dyck polyominoes
    assert d1[2] == qp({1: 1})
    assert column(d1, 2, 9) == [1, 0, 1, 0, 2, 0, 5]
    assert d1[4] == qp({4: 1})


def test_cross_axis_series(parts, area_parts):
    d2 = parts["D2"]  # even half-perimeter part of the half-turn series
    assert d2[4] == qp({4: 1, 3: 2})
    assert d2[5] == QPoly()
    assert column(d2, 2, 9) == [1, 0, 3, 0, 10, 0, 35]
    assert area_counts(area_parts["D2"])[3] == 2


def test_d2_series_direct_matches_components(parts):
    assert genfun.d2_series(W) == parts["D2"]
    assert genfun.d2_series(AW).agrees_with(genfun.components(AW)["D2"])


def test_d12(parts):
    d12 = parts["D12"]
    assert d12[2] == qp({1: 1})
    assert d12[4] == qp({4: 1})
    # the 3x3 square without two opposite corners has area 7
    assert d12[6] == qp({9: 1, 7: 1})
    assert d12[8] == qp({16: 1, 14: 1, 10: 1})
    assert column(d12, 2, 14) == [1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0]


def test_d12_two_routes_agree():
    for w in (perimeter_window(22), area_window(24)):
        assert genfun.d12_by_ln(w).agrees_with(genfun.d12_by_double_sum(w))


def test_orbit_polynomials(parts):
    for k, ref in ORBITS_PRINTED.items():
        assert parts["Orbits"][k] == ref
    assert column(parts["Orbits"], 2, 9) == [1, 1, 3, 5, 16, 38, 126]


def test_asym_polynomials(parts):
    for k, ref in ASYM_PRINTED.items():
        assert parts["Asym"][k] == ref
    assert column(parts["Asym"], 2, 9) == [0, 0, 0, 8, 24, 112, 360]


def test_orbit_rejects_non_integral(parts):
    bad = dict(parts)
    bad["P"] = parts["P"] + TSeries.from_monomial(Monomial(1, 3, 1), W.t)
    with pytest.raises(ArithmeticError):
        genfun.orbit_series(W, bad)


def test_asym_rejects_negative(parts):
    bad = dict(parts)
    bad["R2"] = parts["R2"] + TSeries.from_monomial(Monomial(5, 3, 2), W.t)
    with pytest.raises(ArithmeticError):
        genfun.asym_series(W, bad)


def test_dual_route_mismatch_is_hard(monkeypatch):
    monkeypatch.setattr(genfun, "d12_by_double_sum", lambda w: TSeries.zero(w.t, w.q))
    with pytest.raises(GFMismatch):
        genfun.d12_series(perimeter_window(6))


def test_truncation_error_is_explicit():
    with pytest.raises(TruncationError):
        genfun.parallelogram_series(Window(8, 5, "perimeter"))


@pytest.mark.parametrize("k", range(1, 20))
def test_r2_closed_form(k):
    r2 = genfun.r2_series(perimeter_window(21))
    assert r2[k + 1].at_one() == closed_counts("r2_fix", k + 1)


_SERIES_FOR = {"P": G.ID, "R2": G.R2, "D1": G.D1, "D2": G.D2}


@pytest.mark.parametrize("hp", range(2, 12))
def test_polynomials_match_oracle(parts, hp):
    c = cached_census("halfperimeter", hp)
    for name, g in _SERIES_FOR.items():
        assert parts[name][hp] == QPoly(dict(c.fix_area[g])), name
    assert parts["D12"][hp] == QPoly(dict(c.exact_area[Subgroup.FULL]))
    assert parts["Orbits"][hp] == QPoly(dict(c.orbit_area))
    assert parts["Asym"][hp] == QPoly(dict(c.exact_area[Subgroup.TRIVIAL]))


@pytest.mark.parametrize("n", range(1, 12))
def test_area_counts_match_oracle(area_parts, n):
    row = cached_census("area", n).row()
    names = ("P", "R2", "D1", "D2", "Orbits", "D12", "Asym")
    got = tuple(area_counts(area_parts[s])[n] for s in names)
    assert got == tuple(row.values()) == TABLE_AREA[n]


def test_perimeter_readout(parts):
    counts = perimeter_counts(parts["Orbits"])
    assert all(counts[n] == TABLE_HP[n][4] for n in range(2, 14))


def test_burnside_integrality(parts):
    total = parts["P"] + parts["R2"] + parts["D1"] + parts["D2"]
    for _, c in total.terms():
        assert all(v % len(GROUP) == 0 for _, v in c.items())
