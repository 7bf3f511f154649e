"""Property suites behind ``parapoly verify`` and the asymptotic report.

Each suite returns a list of :class:`Check` results; nothing raises on a
failed property, so a report always covers every property.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import ceil, pi, sqrt

from . import genfun, oracle
from .bijections import (
    closed_counts,
    d2_to_r2,
    dv_forward,
    dv_inverse,
    dyck_paths,
    left_factor_series,
    r2_to_d2,
)
from .polyomino import GroupElement, Subgroup, is_fixed
from .tables import first_size, genfun_table, oracle_table

__all__ = [
    "MU",
    "Check",
    "SUITES",
    "asymptotic_checks",
    "proof_inequalities",
    "run_suite",
    "suite_bijection",
    "suite_burnside",
    "suite_mobius",
    "suite_asymptotics",
]

# growth constant of parallelogram polyominoes counted by area
MU = 2.30913859330
MU_TOL = 5e-3

_CLASSES = ("FixR2", "FixD1", "FixD2", "FixD2grp")


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)


# -- asymptotics ----------------------------------------------------------


def _decay(table, size: int, half: int, name: str) -> dict:
    tot = table.column("Fix1")
    col = table.column(name)
    big, small = col[size] / tot[size], col[half] / tot[half]
    return {"size": size, "half": half, "ratio": big, "ratio_half": small, "pass": big < small}


def asymptotic_checks(area_max: int = 23, hp_max: int = 20, tables=None) -> dict:
    """Desk-scale evidence for the limiting statements.

    * ``p_n / p_(n-1)`` by area against ``MU`` at ``n = area_max``;
    * for each nontrivial subgroup, the fixed fraction at ``hp_max`` is
      below its value at ``hp_max / 2``; by area, the fraction at
      ``area_max`` is below the largest fraction over the first half of
      the range (area counts of the reflection classes vanish at some
      sizes, so a single comparison point can be 0);
    * the asymmetric fraction at ``hp_max`` is at least 0.999;
    * informational: ``c_(n-1)`` against ``4^n / (sqrt(pi) n^(3/2))``.
    """
    perim, area = tables or (genfun_table("halfperimeter", hp_max), genfun_table("area", area_max))
    tot_a = area.column("Fix1")
    ratios = {n: tot_a[n] / tot_a[n - 1] for n in range(2, area_max + 1)}
    err = abs(ratios[area_max] - MU)
    mu = {"n": area_max, "ratio": ratios[area_max], "target": MU, "error": err,
          "pass": err < MU_TOL}
    errs = [abs(ratios[n] - MU) for n in range(area_max // 2, area_max + 1)]
    mu["errors_shrinking"] = all(b <= a for a, b in zip(errs, errs[2:]))

    decay = {name: _decay(perim, hp_max, hp_max // 2, name) for name in _CLASSES}
    area_decay = {}
    for name in _CLASSES:
        col = area.column(name)
        head = max(col[n] / tot_a[n] for n in range(1, area_max // 2 + 1))
        last = col[area_max] / tot_a[area_max]
        area_decay[name] = {"size": area_max, "ratio": last, "max_first_half": head,
                            "pass": last < head}

    tot_p = perim.column("Fix1")
    asym = perim.column("Asym")[hp_max] / tot_p[hp_max]
    polya = {n: tot_p[n] / (4 ** n / (sqrt(pi) * n ** 1.5)) for n in perim.sizes()}
    report = {
        "mu": mu,
        "area_ratios": ratios,
        "decay_halfperimeter": decay,
        "decay_area": area_decay,
        "asym_fraction": {"size": hp_max, "value": asym, "pass": asym >= 0.999},
        "polya_ratio": polya,
    }
    report["pass"] = (mu["pass"] and all(d["pass"] for d in decay.values())
                      and all(d["pass"] for d in area_decay.values())
                      and report["asym_fraction"]["pass"])
    return report


def proof_inequalities(area_max: int = 16) -> dict:
    """Bounds used in the vanishing-ratio arguments, checked on exact counts.

    * even-width half-turn symmetric, area ``n``: 0 for odd ``n``, else at
      most ``n/2 * p_(n/2)``;
    * each diagonal reflection class, area ``n``: at most ``p_ceil(3n/4) + 1``.
    """
    w = genfun.area_window(area_max + 1)
    even = genfun.area_counts(genfun.r2_even_series(w))
    table = genfun_table("area", area_max)
    p = table.column("Fix1")
    p[0] = 0
    rows = []
    ok = True
    for n in range(1, area_max + 1):
        bound_e = n // 2 * p[n // 2] if n % 2 == 0 else 0
        good_e = even[n] <= bound_e
        bound_d = p[ceil(3 * n / 4)] + 1
        d1, d2 = table.column("FixD1")[n], table.column("FixD2")[n]
        good_d = d1 <= bound_d and d2 <= bound_d
        ok &= good_e and good_d
        rows.append({"n": n, "r2_even": even[n], "r2_even_bound": bound_e,
                     "d1": d1, "d2": d2, "reflection_bound": bound_d,
                     "pass": good_e and good_d})
    return {"rows": rows, "pass": ok}


# -- suites ---------------------------------------------------------------


def suite_bijection(max_hp: int = 10, max_hp_r2: int = 12) -> list[Check]:
    out = []
    bad = []
    for hp in range(2, max_hp + 1):
        seen = set()
        for p in oracle.enumerate_polyominoes("halfperimeter", hp):
            d = dv_forward(p)
            if (not d.is_complete or len(d) != 2 * (hp - 1) or sum(d.peaks()) != p.area
                    or dv_inverse(d) != p
                    or (is_fixed(GroupElement.R2, p) and not d.is_palindrome())):
                bad.append(str(p))
            seen.add(d.steps)
        if len(seen) != closed_counts("catalan", hp - 1):
            bad.append(f"image size at half-perimeter {hp}")
    out.append(Check("delest_viennot", not bad, {"max_halfperimeter": max_hp, "failures": bad[:10]}))

    bad = []
    for n in range(1, max_hp):
        for d in dyck_paths(n):
            if dv_forward(dv_inverse(d)) != d:
                bad.append(d.word)
    out.append(Check("dyck_round_trip", not bad, {"max_length": 2 * (max_hp - 1), "failures": bad[:10]}))

    bad = []
    for hp in range(2, max_hp_r2 + 1, 2):
        src = [p for p in oracle.enumerate_polyominoes("halfperimeter", hp) if is_fixed(GroupElement.R2, p)]
        tgt = {p for p in oracle.enumerate_polyominoes("halfperimeter", hp) if is_fixed(GroupElement.D2, p)}
        img = []
        for p in src:
            try:
                q = r2_to_d2(p)
            except ValueError as e:
                bad.append(f"{p}: {e}")
                continue
            if q.area != p.area or q.half_perimeter != hp or d2_to_r2(q) != p:
                bad.append(str(p))
            img.append(q)
        if set(img) != tgt or len(img) != len(src):
            bad.append(f"not onto at half-perimeter {hp}")
    out.append(Check("r2_to_d2", not bad, {"max_halfperimeter": max_hp_r2, "failures": bad[:10]}))

    lf = left_factor_series(20)
    good = lf[0].at_one() == 1 and all(
        lf[k].at_one() == closed_counts("r2_fix", k + 1) for k in range(1, 21))
    out.append(Check("left_factor_counts", good, {"max_len": 20}))
    return out


def suite_burnside(max_hp: int = 10, max_area: int = 10) -> list[Check]:
    out = []
    for measure, n_max in (("halfperimeter", max_hp), ("area", max_area)):
        bad = []
        for n in range(first_size(measure), n_max + 1):
            try:
                oracle.orbit_count(measure, n)
            except (ArithmeticError, AssertionError) as e:
                bad.append(f"{n}: {e}")
        out.append(Check(f"orbit_two_ways_{measure}", not bad, {"max": n_max, "failures": bad}))
    try:
        genfun.orbit_series(genfun.perimeter_window(22))
        genfun.orbit_series(genfun.area_window(24))
        out.append(Check("burnside_integrality", True, {"trunc_t": 22, "trunc_q": 24}))
    except ArithmeticError as e:
        out.append(Check("burnside_integrality", False, {"error": str(e)}))
    for measure, n_max in (("halfperimeter", max_hp), ("area", max_area)):
        diff = genfun_table(measure, n_max).diff(oracle_table(measure, n_max))
        out.append(Check(f"genfun_vs_oracle_{measure}", not diff, {"max": n_max, "diff": diff}))
    return out


def suite_mobius(max_hp: int = 10, max_area: int = 10) -> list[Check]:
    out = []
    for measure, n_max in (("halfperimeter", max_hp), ("area", max_area)):
        bad = []
        for n in range(first_size(measure), n_max + 1):
            c = oracle.census(measure, n)
            f = c.fix
            inv = (f[GroupElement.ID] - f[GroupElement.R2] - f[GroupElement.D1]
                   - f[GroupElement.D2] + 2 * c.exact[Subgroup.FULL])
            if inv != c.exact[Subgroup.TRIVIAL] or sum(c.exact.values()) != c.total:
                bad.append(n)
        out.append(Check(f"mobius_pointwise_{measure}", not bad, {"max": n_max, "failures": bad}))
    try:
        genfun.asym_series(genfun.perimeter_window(22))
        genfun.asym_series(genfun.area_window(24))
        out.append(Check("asym_nonnegative", True, {}))
    except ArithmeticError as e:
        out.append(Check("asym_nonnegative", False, {"error": str(e)}))
    return out


def suite_asymptotics(area_max: int = 23, hp_max: int = 20, ineq_area: int = 16) -> list[Check]:
    rep = asymptotic_checks(area_max, hp_max)
    ineq = proof_inequalities(ineq_area)
    return [
        Check("mu_ratio", rep["mu"]["pass"], rep["mu"]),
        Check("decay_halfperimeter", all(d["pass"] for d in rep["decay_halfperimeter"].values()),
              rep["decay_halfperimeter"]),
        Check("decay_area", all(d["pass"] for d in rep["decay_area"].values()), rep["decay_area"]),
        Check("asym_fraction", rep["asym_fraction"]["pass"], rep["asym_fraction"]),
        Check("proof_inequalities", ineq["pass"], {"area_max": ineq_area,
                                                    "failures": [r for r in ineq["rows"] if not r["pass"]]}),
    ]


SUITES = {
    "bijection": suite_bijection,
    "burnside": suite_burnside,
    "mobius": suite_mobius,
    "asymptotics": suite_asymptotics,
}


def run_suite(name: str, limit: int | None = None) -> dict:
    """Run one suite (or ``all``) and return a JSON-ready report.

    ``limit`` caps the oracle half-perimeter and area for the suites that
    enumerate; the asymptotic suite uses the table sizes regardless.
    """
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    report = {"suite": name, "checks": []}
    for n in names:
        fn = SUITES[n]
        if limit is not None and n != "asymptotics":
            checks = fn(limit, limit)
        else:
            checks = fn()
        for c in checks:
            d = c.to_dict()
            d["suite"] = n
            report["checks"].append(d)
    report["passed"] = all(c["passed"] for c in report["checks"])
    return report
