"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import csv
import io
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from golden import (  # noqa: E402
    ASYM_PRINTED,
    D12_PRINTED,
    ORBITS_PRINTED,
    R_PRINTED,
    TABLE_AREA,
    TABLE_HP,
    cached_census,
)
from parapoly import genfun  # noqa: E402
from parapoly.bijections import (  # noqa: E402
    closed_counts,
    d2_to_r2,
    dv_forward,
    dv_inverse,
    dyck_paths,
    left_factor_series,
    r2_to_d2,
)
from parapoly.cli import main  # noqa: E402
from parapoly.oracle import enumerate_polyominoes  # noqa: E402
from parapoly.polyomino import GroupElement as G, Subgroup, is_fixed  # noqa: E402
from parapoly.series import QPoly, format_qpoly  # noqa: E402
from parapoly.verify import asymptotic_checks, proof_inequalities  # noqa: E402

SERIES = ("P", "R2", "D1", "D2", "Orbits", "D12", "Asym")


def report(number, title, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"{status}  criterion {number}: {title}"
    if failures:
        line += "  [" + "; ".join(map(str, failures[:6])) + "]"
    return line


def _cli_table(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(["table", *argv], out, err)
    rows = list(csv.reader(io.StringIO(out.getvalue())))
    return code, {int(r[0]): tuple(map(int, r[1:])) for r in rows[1:]}


def _compare(got, ref):
    bad = []
    for n, row in ref.items():
        if got.get(n) != row:
            bad.append(f"size {n}: {got.get(n)} != {row}")
    return bad


# -- criteria -------------------------------------------------------------


def criterion_1():
    code, got = _cli_table("halfperimeter", "max=20", "source=genfun")
    return ([f"exit {code}"] if code else []) + _compare(got, TABLE_HP)


def criterion_2():
    code, got = _cli_table("area", "max=23", "source=genfun")
    return ([f"exit {code}"] if code else []) + _compare(got, TABLE_AREA)


def criterion_3(max_hp=14, max_area=16):
    bad = []
    parts = genfun.components(genfun.perimeter_window(max_hp + 1))
    for hp in range(2, max_hp + 1):
        c = cached_census("halfperimeter", hp)
        hists = {
            "P": c.fix_area[G.ID], "R2": c.fix_area[G.R2], "D1": c.fix_area[G.D1],
            "D2": c.fix_area[G.D2], "Orbits": c.orbit_area,
            "D12": c.exact_area[Subgroup.FULL], "Asym": c.exact_area[Subgroup.TRIVIAL],
        }
        counts = tuple(c.row().values())
        if counts != tuple(parts[s][hp].at_one() for s in SERIES):
            bad.append(f"half-perimeter {hp} counts")
        for s in SERIES:
            if parts[s][hp] != QPoly(dict(hists[s])):
                bad.append(f"half-perimeter {hp} {s} polynomial")
    aparts = genfun.components(genfun.area_window(max_area + 1))
    for n in range(1, max_area + 1):
        counts = tuple(cached_census("area", n).row().values())
        if counts != tuple(genfun.area_counts(aparts[s])[n] for s in SERIES):
            bad.append(f"area {n} counts")
    return bad


def criterion_4():
    bad = []
    parts = genfun.components(genfun.perimeter_window(11))
    for name, ref, series in (("r", R_PRINTED, "R2"), ("orbit", ORBITS_PRINTED, "Orbits"),
                              ("asym", ASYM_PRINTED, "Asym")):
        for k, poly in ref.items():
            got = parts[series][k]
            if got != poly:
                bad.append(f"{name}_{k}: computed {format_qpoly(got)}, printed {format_qpoly(poly)}")
    # the six printed leading terms, in order of (t, q)
    terms = sorted((k, e, v) for k, c in parts["D12"].terms() for e, v in c.items())
    printed = [(k, e, 1) for k, e in D12_PRINTED]
    if terms[:6] != printed:
        bad.append(f"D12 leading terms (t, q, coeff): computed {terms[:6]}, printed {printed}")
    return bad


def criterion_5():
    bad = []
    w = genfun.Window(13, 12 * 13 // 2 + 1)
    if not genfun.dyck_gf_quotient(w).agrees_with(genfun.dyck_gf_catalan(w)):
        bad.append("Dyck quotient vs q-Catalan form")
    for w in (genfun.perimeter_window(23), genfun.area_window(24)):
        if not genfun.d12_by_ln(w).agrees_with(genfun.d12_by_double_sum(w)):
            bad.append(f"D12 routes disagree in {w.mode} mode")
        parts = genfun.components(w)
        total = parts["P"] + parts["R2"] + parts["D1"] + parts["D2"]
        for k, c in total.terms():
            if any(v % 4 for _, v in c.items()):
                bad.append(f"Burnside numerator at t^{k} ({w.mode})")
    return bad


def criterion_6():
    bad = []
    for hp in range(2, 11):
        images = set()
        for p in enumerate_polyominoes("halfperimeter", hp):
            d = dv_forward(p)
            if dv_inverse(d) != p or sum(d.peaks()) != p.area or len(d) != 2 * (hp - 1):
                bad.append(f"DV at {p}")
            images.add(d)
        if images != set(dyck_paths(hp - 1)):
            bad.append(f"DV not onto at half-perimeter {hp}")
    for hp in range(2, 13, 2):
        shapes = list(enumerate_polyominoes("halfperimeter", hp))
        src = [p for p in shapes if is_fixed(G.R2, p)]
        tgt = {p for p in shapes if is_fixed(G.D2, p)}
        img = []
        for p in src:
            q = r2_to_d2(p)
            if q.area != p.area or q.half_perimeter != hp or d2_to_r2(q) != p:
                bad.append(f"r2 map at {p}")
            img.append(q)
        if len(set(img)) != len(src) or set(img) != tgt:
            bad.append(f"r2 map not bijective at half-perimeter {hp}")
    return bad


def criterion_7():
    bad = []
    parts = genfun.components(genfun.perimeter_window(22))
    for k in range(1, 20):
        if parts["R2"][k + 1].at_one() != closed_counts("r2_fix", k + 1):
            bad.append(f"r_{k + 1}(1)")
    lf = left_factor_series(10)
    for k in range(0, 10):
        hp = 2 * k + 2
        if hp > 21:
            break
        got = parts["D12"][hp].at_one()
        if got != lf[k].at_one() or got != closed_counts("d12_fix", hp):
            bad.append(f"D12 at half-perimeter {hp}")
    return bad


def criterion_8():
    rep = asymptotic_checks(23, 20)
    bad = []
    if not rep["mu"]["pass"]:
        bad.append(f"mu ratio {rep['mu']['ratio']:.6f}")
    for name, d in rep["decay_halfperimeter"].items():
        if not d["pass"]:
            bad.append(f"{name} ratio {d['ratio']:.3g} not below {d['ratio_half']:.3g}")
    if not rep["asym_fraction"]["pass"]:
        bad.append(f"asym fraction {rep['asym_fraction']['value']}")
    return bad


def criterion_9():
    rep = proof_inequalities(16)
    return [f"area {r['n']}" for r in rep["rows"] if not r["pass"]]


CRITERIA = [
    (1, "Table 1 reproduction by half-perimeter", criterion_1),
    (2, "Table 2 reproduction by area", criterion_2),
    (3, "oracle cross-validation (half-perimeter <= 14, area <= 16)", criterion_3),
    (4, "printed golden polynomials", criterion_4),
    (5, "dual-computation gates", criterion_5),
    (6, "bijection suites", criterion_6),
    (7, "closed forms", criterion_7),
    (8, "asymptotic ratios", criterion_8),
    (9, "proof inequalities (area <= 16)", criterion_9),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    failures = check()
    with capsys.disabled():
        print("\n" + report(number, title, failures))
    assert not failures, failures


if __name__ == "__main__":
    results = []
    for number, title, check in CRITERIA:
        failures = check()
        print(report(number, title, failures), flush=True)
        results.append(not failures)
    sys.exit(0 if all(results) else 1)
