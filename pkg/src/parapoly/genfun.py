"""Generating functions for parallelogram polyominoes and their symmetry classes.

Everything is computed as a :class:`~parapoly.series.TSeries` in ``t``
(half-perimeter) and ``q`` (area). The classical extra variables ``v``, ``x``,
``y`` are never kept: each is replaced by a signed monomial in ``t`` and
``q`` before any arithmetic happens.

Two truncation modes are offered:

``perimeter(T)``
    coefficients of ``t^k`` for ``k < T`` as exact polynomials in ``q``.
    A shape of half-perimeter ``k`` has area at most ``floor(k^2/4)``, so
    computing modulo ``q^(floor((T-1)^2/4)+1)`` loses nothing.
``area(M)``
    coefficients of ``q^n`` for ``n < M``. Such a shape has half-perimeter
    at most ``n + 1``, so ``t`` is kept up to ``t^M``.

Infinite sums are cut using the lowest monomial each term can contribute:
the denominators are geometric series in monomials with nonnegative
exponents, so a term whose numerator monomial already lies outside the
window contributes nothing, and the numerator exponents increase with the
summation index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import Monomial, QPoly, TruncationError, TSeries, ts_substitute, MonomialSub

__all__ = [
    "Window",
    "perimeter_window",
    "area_window",
    "pochhammer",
    "par_gf",
    "parallelogram_series",
    "r2_series",
    "r2_even_series",
    "r2_odd_series",
    "ln_series",
    "ln_by_iteration",
    "qcatalan",
    "dyck_gf_quotient",
    "dyck_gf_catalan",
    "dyck_gf",
    "d1_series",
    "d2_series",
    "d12_series",
    "d12_by_ln",
    "d12_by_double_sum",
    "orbit_series",
    "asym_series",
    "components",
    "area_counts",
    "perimeter_counts",
    "GFMismatch",
]

T = Monomial(1, 1, 0)
Q = Monomial(1, 0, 1)
ONE = Monomial()


class GFMismatch(AssertionError):
    """Two routes to the same generating function disagree."""


@dataclass(frozen=True)
class Window:
    """Target truncation: trusted for ``t^i q^j`` with ``i < t`` and ``j < q``."""

    t: int
    q: int
    mode: str = "perimeter"

    def __post_init__(self):
        if self.t < 1 or self.q < 1:
            raise ValueError("truncation orders must be >= 1")

    def widen(self, dt: int = 0, dq: int = 0) -> "Window":
        return Window(self.t + dt, self.q + dq, self.mode)


def max_area(hp: int) -> int:
    return hp * hp // 4


def perimeter_window(trunc_t: int) -> Window:
    return Window(trunc_t, max_area(max(trunc_t - 1, 0)) + 1, "perimeter")


def area_window(trunc_q: int) -> Window:
    return Window(trunc_q + 1, trunc_q, "area")


def _fit(s: TSeries, w: Window, what: str) -> TSeries:
    if s.trunc_t < w.t or (s.trunc_q is not None and s.trunc_q < w.q):
        raise TruncationError(
            f"{what}: computed to O(t^{s.trunc_t}, q^{s.trunc_q}), "
            f"needed O(t^{w.t}, q^{w.q})")
    return s.truncate(w.t, w.q)


def _finish(s: TSeries, w: Window, what: str) -> TSeries:
    """Truncate to the window and check the result is a counting series."""
    s = _fit(s, w, what)
    if not s.is_nonnegative():
        raise ArithmeticError(f"{what}: negative exponent or coefficient in result")
    if w.mode == "perimeter":
        s = s.exact_in_q(max_area)
    return s


def _past(m: Monomial, w: Window, step_t: int, step_q: int) -> bool:
    """``m`` is outside ``w`` and the summation cannot come back inside."""
    return (m.t >= w.t and step_t >= 0) or (m.q >= w.q and step_q >= 0)


def _check_denominator(m: Monomial):
    if m.t < 0 or m.q < 0 or (m.t == 0 and m.q == 0):
        raise ValueError(f"1 - {m} cannot be expanded as a series with a usable bound")


def pochhammer(a: Monomial, n: int, q: Monomial = Q) -> TSeries:
    """``(a; q)_n = prod_{i<n} (1 - a q^i)`` as an exact polynomial."""
    deg = sum(max((a * q**i).t, 0) for i in range(n))
    out = TSeries.one(deg + 1)
    for i in range(n):
        out = out.mul_one_minus(a * q**i)
    return out


def par_gf(v: Monomial, x: Monomial, y: Monomial, q: Monomial, w: Window) -> TSeries:
    """Area/width/height series of parallelogram polyominoes under a substitution.

    Returns ``v y J1 / J0`` with the q-Bessel type sums

        J0 = sum_{n>=0} (-1)^n x^n q^C(n+1,2) / ((q)_n (yq)_n)
        J1 = sum_{n>=1} (-1)^(n-1) x^n q^C(n+1,2) / ((q)_(n-1) (yq)_(n-1) (1 - v y q^n))

    where ``v`` marks the right column height, ``x`` the width, ``y`` the
    height and ``q`` the area. Each argument is the monomial in ``t`` and
    ``q`` substituted for that variable.
    """
    pre = v * y
    inner = w.widen(-pre.t, -pre.q)
    if inner.t < 1:
        return TSeries.zero(w.t, w.q)
    inner = Window(inner.t, max(inner.q, 1), w.mode)
    _check_denominator(q)
    _check_denominator(y * q)

    j0 = TSeries.one(inner.t, inner.q)
    j1 = TSeries.zero(inner.t, inner.q)
    den = TSeries.one(inner.t, inner.q)  # 1 / ((q)_{n-1} (yq)_{n-1})
    n = 1
    while True:
        a_n = Monomial((-1) ** n) * x**n * q ** (n * (n + 1) // 2)
        # later terms only move further out once the step is nonnegative
        if _past(a_n, inner, x.t, x.q + (n + 1) * q.q):
            break
        vyq = v * y * q**n
        _check_denominator(vyq)
        j1 = j1 + den.div_one_minus(vyq).mul_monomial(-a_n)
        den = den.div_one_minus(q**n).div_one_minus(y * q**n)
        j0 = j0 + den.mul_monomial(a_n)
        n += 1
        if n > 10 * (inner.t + inner.q):
            raise RuntimeError("q-Bessel sum failed to leave the truncation window")
    return _fit((j1 / j0).mul_monomial(pre), w, "par_gf")


def parallelogram_series(w: Window) -> TSeries:
    """``P(1, t, t, q)``: all parallelogram polyominoes by half-perimeter and area."""
    return _finish(par_gf(ONE, T, T, Q, w), w, "P")


def r2_even_series(w: Window, x: Monomial = T, y: Monomial = T, q: Monomial = Q) -> TSeries:
    """Even-width half-turn symmetric shapes.

    Two copies of the left half glued along its right column;
    ``(P(1/y, x^2, y^2, q^2) - P(1, x^2, y^2, q^2)) / (1 - y)``.
    """
    args = (x**2, y**2, q**2)
    diff = par_gf(y.inverse(), *args, w) - par_gf(ONE, *args, w)
    out = diff.div_one_minus(y)
    return _fit(out, w, "R2 even")


def r2_odd_series(w: Window, x: Monomial = T, y: Monomial = T, q: Monomial = Q) -> TSeries:
    """Odd-width half-turn symmetric shapes: ``P(1/(yq), x^2, y^2, q^2) / x``."""
    inner = w.widen(x.t, x.q)
    p = par_gf((y * q).inverse(), x**2, y**2, q**2, inner)
    return _fit(p.mul_monomial(x.inverse()), w, "R2 odd")


def r2_series(w: Window) -> TSeries:
    """Half-turn symmetric shapes, ``sum_k r_k(q) t^k``."""
    return _finish(r2_even_series(w) + r2_odd_series(w), w, "R2")


def ln_series(n: int, y: Monomial, q: Monomial, w: Window) -> TSeries:
    """``L_n(1, y, q)``: left factors of Dyck polyominoes with base width ``n``.

    Ratio of the two sums

        sum_m (-1)^m y^(m+1) q^((m+n)(m+1)) / (q)_m
        sum_m (-1)^m y^m     q^(m(m+1))     / (q)_m
    """
    if n < 1:
        raise ValueError("base width must be >= 1")
    _check_denominator(q)
    num = TSeries.zero(w.t, w.q)
    den = TSeries.one(w.t, w.q)
    inv_poch = TSeries.one(w.t, w.q)  # 1 / (q)_m
    m = 0
    while True:
        sign = Monomial((-1) ** m)
        nm = sign * y ** (m + 1) * q ** ((m + n) * (m + 1))
        dm = sign * y**m * q ** (m * (m + 1))
        if min(nm.t, dm.t) < 0 or min(nm.q, dm.q) < 0:
            raise ValueError("L_n sum terms must have nonnegative exponents after substitution")
        step_t, step_q = y.t, y.q + 2 * (m + 1) * q.q
        out_n = _past(nm, w, step_t, step_q + n * q.q)
        out_d = _past(dm, w, step_t, step_q)
        if out_n and out_d:
            break
        if m:
            inv_poch = inv_poch.div_one_minus(q**m)
        if not out_n:
            num = num + inv_poch.mul_monomial(nm)
        if m and not out_d:
            den = den + inv_poch.mul_monomial(dm)
        m += 1
        if m > 10 * (w.t + w.q):
            raise RuntimeError("L_n sum failed to leave the truncation window")
    return _fit(num / den, w, f"L_{n}")


def ln_by_iteration(n: int, max_height: int) -> dict[int, dict[tuple[int, int], int]]:
    """Solve ``L_n(u) = u^n y q^n + y u^2 q^2 (L_n(1) - L_n(uq)) / (1 - uq)``.

    Works height by height: the coefficient of ``y^(h+1)`` only depends on
    that of ``y^h``. Each coefficient is a polynomial in ``u`` and ``q``,
    stored as ``{(u_exp, q_exp): coeff}``, because
    ``(u^j q^a - (uq)^j q^a) / (1 - uq) = q^a (1 + uq + ... + (uq)^(j-1))``.
    Returns ``{height: coefficient}`` for heights ``1..max_height``.
    """
    out: dict[int, dict[tuple[int, int], int]] = {1: {(n, n): 1}}
    for h in range(1, max_height):
        nxt: dict[tuple[int, int], int] = {}
        for (j, a), c in out[h].items():
            for i in range(j):
                key = (i + 2, a + i + 2)
                nxt[key] = nxt.get(key, 0) + c
        out[h + 1] = {k: v for k, v in nxt.items() if v}
    return out


def ln_residual(n: int, max_height: int) -> dict[int, dict[tuple[int, int], int]]:
    """Plug :func:`ln_by_iteration` back into the functional equation.

    Returns the nonzero coefficients of ``lhs - rhs`` up to ``y^max_height``
    (empty when the equation holds). The right-hand side is expanded
    independently: ``L(1) - L(uq)`` is formed term by term and divided by
    ``1 - uq`` using polynomial long division in ``uq``.
    """
    sol = ln_by_iteration(n, max_height)
    resid: dict[int, dict[tuple[int, int], int]] = {}
    for h in range(1, max_height + 1):
        rhs: dict[tuple[int, int], int] = {}
        if h == 1:
            rhs[(n, n)] = 1
        else:
            # L(1) - L(uq) at height h-1, as {(u, q): c}
            diff: dict[tuple[int, int], int] = {}
            for (j, a), c in sol[h - 1].items():
                diff[(0, a)] = diff.get((0, a), 0) + c
                diff[(j, a + j)] = diff.get((j, a + j), 0) - c
            quo = _divide_one_minus_uq(diff)
            for (j, a), c in quo.items():
                key = (j + 2, a + 2)
                rhs[key] = rhs.get(key, 0) + c
        lhs = sol[h]
        keys = set(lhs) | set(rhs)
        bad = {k: lhs.get(k, 0) - rhs.get(k, 0) for k in keys if lhs.get(k, 0) != rhs.get(k, 0)}
        if bad:
            resid[h] = bad
    return resid


def _divide_one_minus_uq(p: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Exact quotient ``p / (1 - uq)``; raises if it does not divide."""
    rem = {k: v for k, v in p.items() if v}
    quo: dict[tuple[int, int], int] = {}
    while rem:
        # lowest u-degree term leads the division
        j, a = min(rem)
        c = rem[(j, a)]
        quo[(j, a)] = quo.get((j, a), 0) + c
        for key, val in (((j, a), -c), ((j + 1, a + 1), c)):
            s = rem.get(key, 0) + val
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
        if j > 10**4:
            raise ArithmeticError("not divisible by 1 - uq")
    return quo


@lru_cache(maxsize=None)
def _qcatalan(n: int) -> QPoly:
    if n == 0:
        return QPoly.monomial(0, 1)
    acc = QPoly()
    for k in range(n):
        acc = acc + (_qcatalan(k) * _qcatalan(n - 1 - k)).shift(k)
    return acc


def qcatalan(n_max: int) -> list[QPoly]:
    """Carlitz q-Catalan numbers ``c_0(q) .. c_{n_max}(q)``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return [_qcatalan(n) for n in range(n_max + 1)]


def dyck_gf_quotient(w: Window) -> TSeries:
    """Dyck polyominoes by height (``t``) and area, as ``L_1(1, t, q)``."""
    return ln_series(1, T, Q, w)


def dyck_gf_catalan(w: Window) -> TSeries:
    """``sum_{n>=1} t^n q^(2n-1) c_{n-1}(q)``; exact in ``q``."""
    cats = qcatalan(max(w.t - 2, 0))
    coeffs = [QPoly()] + [cats[n - 1].shift(2 * n - 1) for n in range(1, w.t)]
    return TSeries(coeffs, 0, w.t, None)


def dyck_gf(w: Window) -> TSeries:
    """Dyck polyomino series, computed both ways; raises if they differ."""
    a = dyck_gf_quotient(w)
    b = dyck_gf_catalan(w)
    if not a.agrees_with(b):
        raise GFMismatch("Dyck series: quotient form and q-Catalan form disagree")
    return b.truncate(w.t, w.q)


def d1_series(w: Window) -> TSeries:
    """Shapes symmetric in the main axis: ``D(xy/q, q^2)`` with ``x = y = t``.

    Two copies of a Dyck polyomino glued along their diagonal.
    """
    # Dyck height h lands at t^(2h); need D up to height (w.t - 1) // 2
    d = dyck_gf_catalan(Window((w.t + 1) // 2, w.q, w.mode))
    sub = ts_substitute(d, [MonomialSub("t", Monomial(1, 2, -1)), MonomialSub("q", Monomial(1, 0, 2))])
    return _finish(sub, w, "D1")


def d2_series(w: Window) -> TSeries:
    """Shapes symmetric in the cross axis: even half-perimeter part of ``R2``.

    Area-preserving bijection with even half-perimeter half-turn symmetric
    shapes (see :func:`parapoly.bijections.r2_to_d2`).
    """
    return _finish(_even_part(r2_series(w)), w, "D2")


def _even_part(s: TSeries) -> TSeries:
    coeffs = [c if (s.t_min + i) % 2 == 0 else QPoly() for i, c in enumerate(s.coeffs)]
    return TSeries(coeffs, s.t_min, s.trunc_t, s.trunc_q)


def d12_by_ln(w: Window) -> TSeries:
    """Fully symmetric shapes from four copies of an LFD polyomino.

    ``sum_{n>=1} t^(2n-4) q^(n^2-4n+2) L_n(1, t^4/q^2, q^4)``

    An LFD polyomino with base ``n``, height ``d`` and area ``A`` gives a
    shape of half-perimeter ``2n + 4(d-1)`` and area
    ``4A - 2d + (n-2)^2 - 2``. The ``n = 1`` term contains the single cell
    (``d = 1``) but also every taller Dyck polyomino, e.g. the 3x3 square
    minus two opposite corners at ``t^6 q^7``.
    """
    out = TSeries.zero(w.t, w.q)
    y, q4 = Monomial(1, 4, -2), Monomial(1, 0, 4)
    n = 1
    while 2 * n < w.t:
        pre = Monomial(1, 2 * n - 4, n * n - 4 * n + 2)
        if n * n >= w.q:
            # L_n starts at y q^n -> t^4 q^(4n-2), so the term starts at t^2n q^(n^2)
            break
        inner = w.widen(-pre.t, -pre.q)
        ln = ln_series(n, y, q4, inner)
        out = out + _fit(ln.mul_monomial(pre), w, f"D12 term {n}")
        n += 1
    return out


def d12_by_double_sum(w: Window) -> TSeries:
    """Fully symmetric shapes from the explicit double sum ``N / (1 - t^4 q^6 S)``.

        N = sum_{n>=1, m>=0} (-1)^m t^(4m+2n) q^(4m^2+2m+4mn+n^2) / (q^4)_m
        S = sum_{m>=0} (-1)^m t^(4m) q^(4m^2+10m) / (q^4)_(m+1)

    Same series as :func:`d12_by_ln` with the quotients put over the
    common denominator, which does not depend on ``n``.
    """
    q4 = Monomial(1, 0, 4)
    inv_poch = [TSeries.one(w.t, w.q)]  # 1 / (q^4)_m

    def poch(m):
        while len(inv_poch) <= m:
            inv_poch.append(inv_poch[-1].div_one_minus(q4 ** len(inv_poch)))
        return inv_poch[m]

    num = TSeries.zero(w.t, w.q)
    m = 0
    while 4 * m + 2 < w.t:
        sign = Monomial((-1) ** m)
        n = 1
        while 4 * m + 2 * n < w.t:
            mono = sign * Monomial(1, 4 * m + 2 * n, 4 * m * m + 2 * m + 4 * m * n + n * n)
            if mono.q < w.q:
                num = num + poch(m).mul_monomial(mono)
            n += 1
        m += 1
    s = TSeries.zero(w.t, w.q)
    m = 0
    while 4 * m + 4 < w.t:
        mono = Monomial((-1) ** m, 4 * m, 4 * m * m + 10 * m)
        if mono.q < w.q:
            s = s + poch(m + 1).mul_monomial(mono)
        m += 1
    den = TSeries.one(w.t, w.q) - s.mul_monomial(Monomial(1, 4, 6))
    return num / den


def d12_series(w: Window) -> TSeries:
    """Fully symmetric shapes, computed both ways; raises if they differ."""
    a = d12_by_ln(w)
    b = d12_by_double_sum(w)
    if not a.agrees_with(b):
        raise GFMismatch("D12 series: L_n form and double-sum form disagree")
    return _finish(a, w, "D12")


def _components(w: Window) -> dict[str, TSeries]:
    r2 = r2_series(w)
    return {"P": parallelogram_series(w), "R2": r2, "D1": d1_series(w),
            "D2": _finish(_even_part(r2), w, "D2"), "D12": d12_series(w)}


def components(w: Window) -> dict[str, TSeries]:
    """The five series ``P, R2, D1, D2, D12`` plus ``Orbits`` and ``Asym``."""
    parts = _components(w)
    parts["Orbits"] = orbit_series(w, parts)
    parts["Asym"] = asym_series(w, parts)
    return parts


def orbit_series(w: Window, parts: dict[str, TSeries] | None = None) -> TSeries:
    """Congruence types: ``(P + R2 + D1 + D2) / 4``."""
    parts = parts or _components(w)
    total = parts["P"] + parts["R2"] + parts["D1"] + parts["D2"]
    coeffs = []
    for i, c in enumerate(total.coeffs):
        quo, rem = c.divmod_int(4)
        if rem:
            raise ArithmeticError(
                f"Burnside sum not divisible by 4 at t^{total.t_min + i}: {rem}")
        coeffs.append(quo)
    return _finish(TSeries(coeffs, total.t_min, total.trunc_t, total.trunc_q), w, "orbits")


def asym_series(w: Window, parts: dict[str, TSeries] | None = None) -> TSeries:
    """Asymmetric shapes: ``P - R2 - D1 - D2 + 2 D12`` (Moebius inversion)."""
    parts = parts or _components(w)
    s = parts["P"] - parts["R2"] - parts["D1"] - parts["D2"] + parts["D12"].scale(2)
    return _finish(s, w, "asym")


# -- readouts ------------------------------------------------------------


def perimeter_counts(s: TSeries) -> dict[int, int]:
    """``{half_perimeter: count}`` from a perimeter-mode series."""
    return {i: c.at_one() for i, c in enumerate(s.coeffs, s.t_min)}


def area_counts(s: TSeries) -> dict[int, int]:
    """``{area: count}`` from an area-mode series (sums over ``t``)."""
    if s.trunc_q is None:
        raise TruncationError("area readout needs an area-mode series")
    if s.trunc_t < s.trunc_q + 1:
        raise TruncationError(
            f"area readout to q^{s.trunc_q} needs t up to t^{s.trunc_q}, have O(t^{s.trunc_t})")
    out = {n: 0 for n in range(s.trunc_q)}
    for _, c in s.terms():
        for e, v in c.items():
            out[e] += v
    return out
