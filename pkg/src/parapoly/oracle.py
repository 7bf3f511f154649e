"""Brute-force enumeration of parallelogram polyominoes.

This is the ground truth the generating functions are checked against, so
it stays deliberately naive: plain backtracking over column heights and
contacts, and symmetry tests on the resulting shapes.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .polyomino import (
    GROUP,
    GroupElement,
    Polyomino,
    Subgroup,
    apply_fast,
    is_fixed,
    stabilizer,
)

__all__ = [
    "MEASURES",
    "enumerate_polyominoes",
    "fix_counts",
    "orbit_count",
    "exact_counts",
    "area_histogram",
    "census",
    "Census",
]

MEASURES = ("halfperimeter", "area")

# desk-scale defaults
MAX_HALFPERIMETER = 16
MAX_AREA = 18


def _check(measure: str, n: int):
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}, got {measure!r}")
    if n < (2 if measure == "halfperimeter" else 1):
        raise ValueError(f"size {n} too small for {measure}")


def enumerate_polyominoes(measure: str, n: int, first: int | None = None) -> Iterator[Polyomino]:
    """Every parallelogram polyomino of the given size, each exactly once.

    ``first`` restricts the height of the first column, which is how the
    work is split between processes.
    """
    _check(measure, n)
    by_area = measure == "area"
    a: list[int] = []
    b: list[int] = []

    def grow(size: int) -> Iterator[Polyomino]:
        # size = running area, or running width + height
        if size == n:
            yield Polyomino._trusted(tuple(a), tuple(b))
            return
        last = a[-1]
        for contact in range(1, last + 1):
            lo = contact
            hi = n - size if by_area else n - size - 1 + contact
            for h in range(lo, hi + 1):
                a.append(h)
                b.append(contact)
                yield from grow(size + (h if by_area else 1 + h - contact))
                a.pop()
                b.pop()

    firsts = range(1, n + 1 if by_area else n) if first is None else [first]
    for h in firsts:
        size = h if by_area else 1 + h
        if size > n:
            continue
        a.append(h)
        yield from grow(size)
        a.pop()


class Census:
    """Per-size counts collected in a single pass over the enumeration."""

    def __init__(self):
        self.total = 0
        self.fix = Counter()
        self.exact = Counter()
        self.orbits = 0
        self.r2_even_width = 0
        self.area = Counter()
        self.halfperimeter = Counter()
        self.fix_area = {g: Counter() for g in GROUP}
        self.exact_area = {h: Counter() for h in Subgroup}
        self.orbit_area = Counter()

    def add(self, p: Polyomino):
        self.total += 1
        images = _images(p)
        stab = [g for g, img in zip(GROUP, images) if img == p]
        for g in stab:
            self.fix[g] += 1
            self.fix_area[g][p.area] += 1
        h = Subgroup.of(stab)
        self.exact[h] += 1
        self.exact_area[h][p.area] += 1
        if p == min(images, key=_key):
            self.orbits += 1
            self.orbit_area[p.area] += 1
        if GroupElement.R2 in stab and p.width % 2 == 0:
            self.r2_even_width += 1
        self.area[p.area] += 1
        self.halfperimeter[p.half_perimeter] += 1

    def merge(self, other: "Census") -> "Census":
        self.total += other.total
        self.fix.update(other.fix)
        self.exact.update(other.exact)
        self.orbits += other.orbits
        self.r2_even_width += other.r2_even_width
        self.area.update(other.area)
        self.halfperimeter.update(other.halfperimeter)
        for g in GROUP:
            self.fix_area[g].update(other.fix_area[g])
        for h in Subgroup:
            self.exact_area[h].update(other.exact_area[h])
        self.orbit_area.update(other.orbit_area)
        return self

    @property
    def burnside_orbits(self) -> int:
        s = sum(self.fix[g] for g in GROUP)
        if s % len(GROUP):
            raise ArithmeticError(f"fixed-point total {s} not divisible by |D2|")
        return s // len(GROUP)

    def row(self) -> dict[str, int]:
        return {
            "fix1": self.fix[GroupElement.ID],
            "fix_r2": self.fix[GroupElement.R2],
            "fix_d1": self.fix[GroupElement.D1],
            "fix_d2": self.fix[GroupElement.D2],
            "orbits": self.orbits,
            "fix_full": self.exact[Subgroup.FULL],
            "asym": self.exact[Subgroup.TRIVIAL],
        }


def _key(p: Polyomino):
    return p.a, p.b


def _images(p: Polyomino) -> tuple[Polyomino, ...]:
    # same order as GROUP: 1, r2, d1, d2
    t = apply_fast(GroupElement.D1, p)
    return p, p.reverse(), t, t.reverse()


def canonical(p: Polyomino) -> Polyomino:
    """Orbit representative: smallest ``(a, b)`` among the four images."""
    return min(_images(p), key=_key)


def _census_part(args) -> Census:
    measure, n, first = args
    c = Census()
    for p in enumerate_polyominoes(measure, n, first):
        c.add(p)
    return c


def census(measure: str, n: int, jobs: int = 1) -> Census:
    """Enumerate once and tabulate everything; parallel over first column."""
    _check(measure, n)
    firsts = list(range(1, n + 1))
    parts = [(measure, n, f) for f in firsts]
    total = Census()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for c in ex.map(_census_part, parts):
                total.merge(c)
    else:
        for args in parts:
            total.merge(_census_part(args))
    if total.orbits != total.burnside_orbits:
        raise AssertionError(
            f"orbit representatives ({total.orbits}) disagree with Burnside "
            f"({total.burnside_orbits}) at {measure} {n}")
    return total


def fix_counts(measure: str, n: int) -> dict[GroupElement, int]:
    out = {g: 0 for g in GROUP}
    for p in enumerate_polyominoes(measure, n):
        for g in GROUP:
            if is_fixed(g, p):
                out[g] += 1
    return out


def orbit_count(measure: str, n: int) -> int:
    """Number of D2-orbits, computed by Burnside and by representatives."""
    fixed = fix_counts(measure, n)
    s = sum(fixed.values())
    if s % 4:
        raise ArithmeticError(f"Burnside sum {s} not divisible by 4")
    reps = sum(1 for p in enumerate_polyominoes(measure, n) if canonical(p) == p)
    if reps != s // 4:
        raise AssertionError(f"Burnside gives {s // 4}, representatives give {reps}")
    return reps


def exact_counts(measure: str, n: int) -> dict[Subgroup, int]:
    out = {h: 0 for h in Subgroup}
    for p in enumerate_polyominoes(measure, n):
        out[Subgroup.of(stabilizer(p))] += 1
    return out


def area_histogram(n: int, g: GroupElement = GroupElement.ID) -> dict[int, int]:
    """Area distribution of the ``g``-fixed polyominoes of half-perimeter ``n``."""
    hist: Counter = Counter()
    for p in enumerate_polyominoes("halfperimeter", n):
        if is_fixed(g, p):
            hist[p.area] += 1
    return dict(hist)
