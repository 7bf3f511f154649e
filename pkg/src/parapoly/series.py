"""Exact Laurent polynomials in q and truncated Laurent series in t.

A :class:`TSeries` is a bivariate object: dense in ``t`` (a list of
:class:`QPoly` coefficients starting at ``t_min``) and sparse in ``q``.
Truncation is tracked as a box: coefficients of ``t^i q^j`` are trusted
for ``i < trunc_t`` and ``j < trunc_q`` (``trunc_q=None`` means every
coefficient is an exact polynomial in ``q``).

Products use the usual rule for truncated Laurent series, applied in both
variables: if ``a`` is trusted below ``T_a`` and has valuation ``v_a``,
then ``a*b`` is trusted below ``min(T_a + v_b, T_b + v_a)``. The same rule
with the minimal q-exponents bounds ``trunc_q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "QPoly",
    "TSeries",
    "Monomial",
    "MonomialSub",
    "TruncationError",
    "qp_arith",
    "ts_arith",
    "ts_invert",
    "ts_substitute",
    "ts_coefficient",
]


class TruncationError(ValueError):
    """Raised when a coefficient outside the trusted window is requested."""


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add_opt(a, b):
    return None if a is None else a + b


class QPoly:
    """Laurent polynomial in ``q`` with integer coefficients.

    Zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            v = c.get(e, 0) + v
            if v:
                c[e] = v
            else:
                c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "QPoly":
        # caller guarantees no zero values
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int = 0, coeff: int = 1) -> "QPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], start: int = 0) -> "QPoly":
        """Build from dense coefficients ``[c_start, c_start+1, ...]``."""
        return cls._raw({start + i: v for i, v in enumerate(coeffs) if v})

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self):
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def at_one(self) -> int:
        """Value at q = 1 (sum of coefficients)."""
        return sum(self._c.values())

    def is_unit_monomial(self) -> bool:
        if len(self._c) != 1:
            return False
        (v,) = self._c.values()
        return v in (1, -1)

    def to_list(self, length: int | None = None) -> list[int]:
        """Dense coefficients from q^0; requires nonnegative exponents."""
        if self._c and min(self._c) < 0:
            raise ValueError("negative exponent in to_list")
        n = length if length is not None else (max(self._c) + 1 if self._c else 0)
        out = [0] * n
        for e, v in self._c.items():
            if e < n:
                out[e] = v
        return out

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return QPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                del c[e]
        return QPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "QPoly", bound: int | None = None) -> "QPoly":
        """Product, dropping exponents ``>= bound`` when a bound is given."""
        a, b = self._c, other._c
        if not a or not b:
            return QPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        c: dict[int, int] = {}
        get = c.get
        if bound is None:
            for eb, vb in b.items():
                for ea, va in a.items():
                    e = ea + eb
                    c[e] = get(e, 0) + va * vb
        else:
            for eb, vb in b.items():
                lim = bound - eb
                for ea, va in a.items():
                    if ea < lim:
                        e = ea + eb
                        c[e] = get(e, 0) + va * vb
        return QPoly._raw({e: v for e, v in c.items() if v})

    def scale(self, k: int) -> "QPoly":
        if not k:
            return QPoly._raw({})
        return QPoly._raw({e: v * k for e, v in self._c.items()})

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return QPoly._raw({e + k: v for e, v in self._c.items()})

    def truncate(self, bound: int | None) -> "QPoly":
        if bound is None:
            return self
        return QPoly._raw({e: v for e, v in self._c.items() if e < bound})

    def dilate(self, d: int, sign: int = 1) -> "QPoly":
        """Substitute q -> sign * q^d."""
        if sign == 1:
            return QPoly._raw({e * d: v for e, v in self._c.items()})
        return QPoly._raw({e * d: v * sign**e for e, v in self._c.items()})

    def divmod_int(self, k: int) -> tuple["QPoly", "QPoly"]:
        quo = {e: v // k for e, v in self._c.items() if v // k}
        rem = {e: v % k for e, v in self._c.items() if v % k}
        return QPoly._raw(quo), QPoly._raw(rem)

    # -- text -------------------------------------------------------------

    def __str__(self):
        return format_qpoly(self)

    def __repr__(self):
        return f"QPoly({format_qpoly(self)})"


def format_qpoly(p: QPoly, var: str = "q") -> str:
    """Canonical text: descending exponents, no spaces, e.g. ``q^4+2q^3``."""
    if not p:
        return "0"
    parts = []
    for e, v in sorted(p.items(), reverse=True):
        mag = abs(v)
        if e == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + (var if e == 1 else f"{var}^{e}")
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out


def qp_arith(a: QPoly, b: QPoly, kind: str) -> QPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class Monomial:
    """Signed monomial ``coeff * t^t * q^q``."""

    coeff: int = 1
    t: int = 0
    q: int = 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.coeff * other.coeff, self.t + other.t, self.q + other.q)

    def __pow__(self, n: int) -> "Monomial":
        return Monomial(self.coeff**n, self.t * n, self.q * n)

    def inverse(self) -> "Monomial":
        if self.coeff not in (1, -1):
            raise ValueError("only unit monomials are invertible")
        return Monomial(self.coeff, -self.t, -self.q)

    def __neg__(self):
        return Monomial(-self.coeff, self.t, self.q)


@dataclass(frozen=True)
class MonomialSub:
    """Substitution ``var -> image`` for ``var`` in ``{"t", "q"}``."""

    var: str
    image: Monomial

    def __post_init__(self):
        if self.var not in ("t", "q"):
            raise ValueError(f"unknown variable {self.var!r}")
        if self.image.coeff not in (1, -1):
            raise ValueError("substitution image must be a signed monomial")


class TSeries:
    """Truncated Laurent series in ``t`` with :class:`QPoly` coefficients."""

    __slots__ = ("t_min", "coeffs", "trunc_t", "trunc_q")

    def __init__(self, coeffs, t_min: int = 0, trunc_t: int | None = None,
                 trunc_q: int | None = None):
        coeffs = [c if isinstance(c, QPoly) else QPoly.monomial(0, c) for c in coeffs]
        if trunc_t is None:
            trunc_t = t_min + len(coeffs)
        n = trunc_t - t_min
        if n < 0:
            n = 0
            t_min = trunc_t
        if len(coeffs) > n:
            coeffs = coeffs[:n]
        elif len(coeffs) < n:
            coeffs = coeffs + [QPoly()] * (n - len(coeffs))
        if trunc_q is not None:
            coeffs = [c.truncate(trunc_q) for c in coeffs]
        self.t_min = t_min
        self.coeffs = coeffs
        self.trunc_t = trunc_t
        self.trunc_q = trunc_q

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, trunc_t: int, trunc_q: int | None = None, t_min: int = 0) -> "TSeries":
        return cls([], t_min=t_min, trunc_t=trunc_t, trunc_q=trunc_q)

    @classmethod
    def one(cls, trunc_t: int, trunc_q: int | None = None) -> "TSeries":
        return cls.from_monomial(Monomial(), trunc_t, trunc_q)

    @classmethod
    def from_monomial(cls, m: Monomial, trunc_t: int, trunc_q: int | None = None) -> "TSeries":
        if m.t >= trunc_t:
            return cls.zero(trunc_t, trunc_q, t_min=min(m.t, trunc_t))
        return cls([QPoly.monomial(m.q, m.coeff)], t_min=m.t, trunc_t=trunc_t, trunc_q=trunc_q)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], int], trunc_t: int,
                   trunc_q: int | None = None) -> "TSeries":
        """Build from ``{(t_exp, q_exp): coeff}``."""
        t_lo = min((i for i, _ in terms), default=0)
        t_lo = min(t_lo, trunc_t)
        rows: list[dict[int, int]] = [dict() for _ in range(trunc_t - t_lo)]
        for (i, j), v in terms.items():
            if i < trunc_t:
                rows[i - t_lo][j] = rows[i - t_lo].get(j, 0) + v
        return cls([QPoly(r) for r in rows], t_min=t_lo, trunc_t=trunc_t, trunc_q=trunc_q)

    # -- inspection -------------------------------------------------------

    def __getitem__(self, t_exp: int) -> QPoly:
        return ts_coefficient(self, t_exp)

    def coefficient(self, t_exp: int) -> QPoly:
        return ts_coefficient(self, t_exp)

    def terms(self):
        """Yield ``(t_exp, QPoly)`` for nonzero coefficients."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.t_min + i, c

    @property
    def valuation(self) -> int:
        """Lowest t-exponent with a nonzero coefficient (``trunc_t`` if none)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.t_min + i
        return self.trunc_t

    @property
    def q_valuation(self) -> int | None:
        """Lower bound on q-exponents over the trusted t-range."""
        lo = None
        for c in self.coeffs:
            if c:
                v = c.valuation
                lo = v if lo is None else min(lo, v)
        if lo is None:
            return self.trunc_q if self.trunc_q is not None else 0
        return lo if self.trunc_q is None else min(lo, self.trunc_q)

    def is_nonnegative(self) -> bool:
        """All exponents and coefficients are >= 0."""
        if self.valuation < 0:
            return False
        for c in self.coeffs:
            for e, v in c.items():
                if e < 0 or v < 0:
                    return False
        return True

    def has_nonnegative_exponents(self) -> bool:
        if self.valuation < 0:
            return False
        return all(not c or c.valuation >= 0 for c in self.coeffs)

    def at_q1(self) -> list[int]:
        """Coefficients from t^0 up to the truncation with q set to 1.

        Only meaningful when every coefficient is a complete polynomial
        (``trunc_q is None``).
        """
        if self.trunc_q is not None:
            raise TruncationError("q=1 specialisation needs exact q-polynomials")
        if self.valuation < 0:
            raise ValueError("negative t-exponents present")
        return [ts_coefficient(self, i).at_one() for i in range(max(self.trunc_t, 0))]

    def q_to_one(self) -> "TSeries":
        """Series with every coefficient replaced by its value at q=1."""
        if self.trunc_q is not None:
            raise TruncationError("q=1 specialisation needs exact q-polynomials")
        return TSeries([QPoly.monomial(0, c.at_one()) for c in self.coeffs],
                       t_min=self.t_min, trunc_t=self.trunc_t)

    def truncate(self, trunc_t: int | None = None, trunc_q: int | None = None) -> "TSeries":
        """Lower the truncation orders (never raises them)."""
        tt = self.trunc_t if trunc_t is None else min(trunc_t, self.trunc_t)
        tq = _min_opt(self.trunc_q, trunc_q)
        return TSeries(self.coeffs, t_min=self.t_min, trunc_t=tt, trunc_q=tq)

    def exact_in_q(self, degree_bound) -> "TSeries":
        """Declare coefficients complete, given ``degree_bound(t_exp)``.

        Every stored coefficient must lie strictly below ``trunc_q`` *and*
        the caller's proven bound on the true degree must be ``< trunc_q``.
        """
        if self.trunc_q is not None:
            for i in range(self.t_min, self.trunc_t):
                if degree_bound(i) >= self.trunc_q:
                    raise TruncationError(
                        f"q-truncation {self.trunc_q} too low for t^{i} "
                        f"(needs > {degree_bound(i)})")
        return TSeries(self.coeffs, t_min=self.t_min, trunc_t=self.trunc_t, trunc_q=None)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        if (self.trunc_t, self.trunc_q) != (other.trunc_t, other.trunc_q):
            return False
        lo = min(self.t_min, other.t_min)
        return all(_coef(self, i) == _coef(other, i) for i in range(lo, self.trunc_t))

    def agrees_with(self, other: "TSeries") -> bool:
        """Equality on the common trusted window."""
        tt = min(self.trunc_t, other.trunc_t)
        tq = _min_opt(self.trunc_q, other.trunc_q)
        lo = min(self.t_min, other.t_min)
        return all(_coef(self, i).truncate(tq) == _coef(other, i).truncate(tq)
                   for i in range(lo, tt))

    __hash__ = None

    def __repr__(self):
        return f"TSeries({self.pretty()})"

    def pretty(self, var: str = "t") -> str:
        parts = []
        for i, c in self.terms():
            parts.append(f"{var}^{i}*({format_qpoly(c)})")
        tail = f"O({var}^{self.trunc_t}"
        tail += ")" if self.trunc_q is None else f", q^{self.trunc_q})"
        return " + ".join(parts + [tail])

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.t_min, self.trunc_t, self.trunc_q)

    def __add__(self, other):
        if isinstance(other, int):
            other = TSeries.from_monomial(Monomial(other), self.trunc_t)
        return ts_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = TSeries.from_monomial(Monomial(other), self.trunc_t)
        return ts_arith(self, other, "sub")

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.mul_monomial(other)
        return ts_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * ts_invert(other)

    def scale(self, k: int) -> "TSeries":
        return TSeries([c.scale(k) for c in self.coeffs], self.t_min, self.trunc_t, self.trunc_q)

    def mul_monomial(self, m: Monomial) -> "TSeries":
        """Multiply by ``m``; both truncation orders shift with it."""
        coeffs = [c.shift(m.q).scale(m.coeff) for c in self.coeffs]
        return TSeries(coeffs, self.t_min + m.t, self.trunc_t + m.t, _add_opt(self.trunc_q, m.q))

    def div_one_minus(self, m: Monomial) -> "TSeries":
        """Divide by ``1 - m`` by geometric expansion.

        Requires ``m.t >= 1``, or ``m.t == 0`` with ``m.q >= 1`` and a
        finite ``trunc_q``.
        """
        if m.t < 0 or (m.t == 0 and m.q <= 0):
            raise ValueError(f"1 - {m} is not invertible by a geometric series")
        if m.t == 0:
            if self.trunc_q is None:
                raise TruncationError("q-geometric series needs a finite trunc_q")
            return TSeries([_qgeom_div(c, m.coeff, m.q, self.trunc_q) for c in self.coeffs],
                           self.t_min, self.trunc_t, self.trunc_q)
        out: list[QPoly] = []
        n = len(self.coeffs)
        tq = self.trunc_q
        if tq is not None and m.q < 0:
            # b_i = sum_k m^k a_{i-k*e}; k <= (n-1)//e steps can each lower q
            tq = tq + m.q * ((n - 1) // m.t)
        for i in range(n):
            c = self.coeffs[i]
            if i >= m.t:
                prev = out[i - m.t]
                if prev:
                    c = c + prev.shift(m.q).scale(m.coeff)
            out.append(c)
        return TSeries(out, self.t_min, self.trunc_t, tq)

    def mul_one_minus(self, m: Monomial) -> "TSeries":
        """Multiply by ``1 - m``."""
        return self - self.mul_monomial(m)


def _coef(a: TSeries, i: int) -> QPoly:
    k = i - a.t_min
    if 0 <= k < len(a.coeffs):
        return a.coeffs[k]
    return QPoly()


def _qgeom_div(c: QPoly, sign: int, step: int, bound: int) -> QPoly:
    """``c / (1 - sign*q^step)`` to q-order ``bound``."""
    if not c:
        return c
    lo = c.valuation
    dense = [0] * max(bound - lo, 0)
    for e, v in c.items():
        if e < bound:
            dense[e - lo] += v
    for j in range(step, len(dense)):
        if dense[j - step]:
            dense[j] += sign * dense[j - step]
    return QPoly.from_list(dense, lo)


def ts_coefficient(a: TSeries, t_exp: int) -> QPoly:
    """Exact coefficient of ``t^t_exp``; raises outside the trusted window."""
    if t_exp >= a.trunc_t:
        raise TruncationError(f"t^{t_exp} is beyond truncation O(t^{a.trunc_t})")
    return _coef(a, t_exp)


def ts_arith(a: TSeries, b: TSeries, kind: str) -> TSeries:
    if kind in ("add", "sub"):
        tt = min(a.trunc_t, b.trunc_t)
        tq = _min_opt(a.trunc_q, b.trunc_q)
        lo = min(a.t_min, b.t_min, tt)
        if kind == "add":
            coeffs = [_coef(a, i) + _coef(b, i) for i in range(lo, tt)]
        else:
            coeffs = [_coef(a, i) - _coef(b, i) for i in range(lo, tt)]
        return TSeries(coeffs, lo, tt, tq)
    if kind != "mul":
        raise ValueError(f"unknown kind {kind!r}")
    va, vb = a.valuation, b.valuation
    tt = min(a.trunc_t + vb, b.trunc_t + va)
    qa, qb = a.q_valuation, b.q_valuation
    tq = _min_opt(_add_opt(a.trunc_q, qb), _add_opt(b.trunc_q, qa))
    lo = min(va + vb, tt)
    n = tt - lo
    ca = [_coef(a, va + i) for i in range(n)]
    cb = [_coef(b, vb + i) for i in range(n)]
    out = []
    for k in range(n):
        acc = QPoly()
        for i in range(k + 1):
            x, y = ca[i], cb[k - i]
            if x and y:
                acc = acc + x.mul(y, tq)
        out.append(acc)
    return TSeries(out, lo, tt, tq)


def ts_invert(a: TSeries) -> TSeries:
    """Multiplicative inverse.

    The lowest nonzero coefficient must be a unit monomial ``±q^e``.
    """
    v = a.valuation
    if v >= a.trunc_t:
        raise ValueError("cannot invert a series that is zero within truncation")
    lead = _coef(a, v)
    if not lead.is_unit_monomial():
        raise ValueError(f"leading coefficient {lead} is not a unit monomial")
    ((e, s),) = lead.items()
    # a = s t^v q^e (1 + r)
    n = a.trunc_t - v
    norm = [_coef(a, v + i).shift(-e).scale(s) for i in range(n)]
    tq = _add_opt(a.trunc_q, -e)
    qmin = 0
    for c in norm[1:]:
        if c:
            qmin = min(qmin, c.valuation)
    if tq is not None and qmin < 0:
        tq = tq + qmin * (n - 1)
    inv = [QPoly.monomial(0, 1)]
    for i in range(1, n):
        acc = QPoly()
        for k in range(1, i + 1):
            x, y = norm[k], inv[i - k]
            if x and y:
                acc = acc + x.mul(y, tq)
        inv.append(-acc)
    inv = [c.shift(-e).scale(s) for c in inv]
    return TSeries(inv, -v, n - v, _add_opt(tq, -e))


def ts_substitute(a: TSeries, subs: Iterable[MonomialSub]) -> TSeries:
    """Apply ``t -> ±t^k q^c`` and/or ``q -> ±q^d``.

    Supported images: the t-image needs ``k >= 1``; the q-image must be a
    pure power ``q^d`` with ``d >= 1`` (otherwise infinitely many source
    terms could land in a single target coefficient).

    Truncation bound: source terms ``t^i`` with ``i >= T`` land at
    ``t^{k i}`` or later, so the new ``trunc_t`` is ``k*T``. Within the
    trusted t-range an unknown source term ``t^i q^j`` (``j >= Q``) lands
    at q-exponent ``c*i + d*j >= d*Q + c*i``; the new ``trunc_q`` is the
    minimum of that over the trusted ``i``.
    """
    t_img, q_img = Monomial(1, 1, 0), Monomial(1, 0, 1)
    for s in subs:
        if s.var == "t":
            t_img = s.image
        else:
            q_img = s.image
    k, c = t_img.t, t_img.q
    if k < 1:
        raise ValueError("t-image must have positive t-degree")
    if q_img.t != 0 or q_img.q < 1:
        raise ValueError("q-image must be q^d with d >= 1")
    d = q_img.q
    v = a.valuation
    tt = k * a.trunc_t
    tq = None
    if a.trunc_q is not None:
        hi = a.trunc_t - 1
        tq = d * a.trunc_q + (c * v if c >= 0 else c * hi)
    lo = min(k * v, tt)
    rows: list[QPoly] = [QPoly()] * (tt - lo)
    for i, poly in a.terms():
        p = poly.dilate(d, q_img.coeff).shift(c * i)
        if t_img.coeff == -1 and i % 2:
            p = -p
        rows[k * i - lo] = p
    return TSeries(rows, lo, tt, tq)
