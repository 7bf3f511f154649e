"""Parallelogram polyominoes and the action of the four-element group D2.

A polyomino is stored as its column heights ``a`` and the contacts ``b``
between consecutive columns. Column ``i+1`` sits ``a[i] - b[i]`` cells
higher than column ``i``, so the shape runs from the bottom-left to the
top-right corner of its bounding box.

Group elements, acting on the cells ``(x, y)``::

    ID  identity
    R2  half turn                      (x, y) -> (-x, -y)
    D1  reflection in the main axis    (x, y) -> (y, x)
    D2  reflection in the cross axis   (x, y) -> (-y, -x)

The main axis is the diagonal the polyomino runs along; ``D1`` is the
symmetry of shapes glued from two Dyck polyominoes, ``D2`` the one that is
in bijection with even half-perimeter ``R2``-symmetric shapes. These are
the labels of the count tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Polyomino",
    "GroupElement",
    "Subgroup",
    "realize",
    "from_cells",
    "apply",
    "is_fixed",
    "stabilizer",
    "exact_symmetry_group",
    "parse_polyomino",
]


class GroupElement(enum.Enum):
    ID = "1"
    R2 = "r2"
    D1 = "d1"
    D2 = "d2"

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # Klein four-group: every non-identity element is an involution and
        # the product of two distinct ones is the third.
        if self is GroupElement.ID:
            return other
        if other is GroupElement.ID:
            return self
        if self is other:
            return GroupElement.ID
        (rest,) = set(_NONTRIVIAL) - {self, other}
        return rest

    def act(self, x: int, y: int) -> tuple[int, int]:
        if self is GroupElement.ID:
            return x, y
        if self is GroupElement.R2:
            return -x, -y
        if self is GroupElement.D1:
            return y, x
        return -y, -x


_NONTRIVIAL = (GroupElement.R2, GroupElement.D1, GroupElement.D2)
GROUP = (GroupElement.ID,) + _NONTRIVIAL


class Subgroup(enum.Enum):
    """Subgroups of D2 with the Moebius value ``mu(trivial, H)``."""

    TRIVIAL = (frozenset({GroupElement.ID}), 1)
    R2 = (frozenset({GroupElement.ID, GroupElement.R2}), -1)
    D1 = (frozenset({GroupElement.ID, GroupElement.D1}), -1)
    D2 = (frozenset({GroupElement.ID, GroupElement.D2}), -1)
    FULL = (frozenset(GROUP), 2)

    @property
    def elements(self) -> frozenset:
        return self.value[0]

    @property
    def mobius(self) -> int:
        return self.value[1]

    @classmethod
    def of(cls, elements: Iterable[GroupElement]) -> "Subgroup":
        s = frozenset(elements) | {GroupElement.ID}
        for h in cls:
            if h.elements == s:
                return h
        raise ValueError(f"{sorted(g.value for g in s)} is not a subgroup of D2")

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements <= other.elements


@dataclass(frozen=True, order=True)
class Polyomino:
    a: tuple[int, ...]
    b: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if not self.a:
            raise ValueError("a polyomino needs at least one column")
        if len(self.b) != len(self.a) - 1:
            raise ValueError("need exactly one contact per pair of adjacent columns")
        if min(self.a) < 1:
            raise ValueError(f"column heights must be positive: {self.a}")
        for i, bi in enumerate(self.b):
            if not 1 <= bi <= min(self.a[i], self.a[i + 1]):
                raise ValueError(f"contact b[{i}]={bi} out of range for {self.a}")

    @classmethod
    def _trusted(cls, a: tuple, b: tuple) -> "Polyomino":
        # skips validation; for shapes derived from a valid one
        p = object.__new__(cls)
        object.__setattr__(p, "a", a)
        object.__setattr__(p, "b", b)
        return p

    @property
    def width(self) -> int:
        return len(self.a)

    @property
    def height(self) -> int:
        return sum(self.a) - sum(self.b)

    @property
    def area(self) -> int:
        return sum(self.a)

    @property
    def half_perimeter(self) -> int:
        return self.width + self.height

    def offsets(self) -> list[int]:
        """Bottom row of each column."""
        s = [0]
        for ai, bi in zip(self.a, self.b):
            s.append(s[-1] + ai - bi)
        return s

    def rows(self) -> list[tuple[int, int]]:
        """``(first_column, length)`` of each row, bottom to top."""
        s = self.offsets()
        out = []
        lo = 0
        for y in range(self.height):
            while s[lo] + self.a[lo] <= y:
                lo += 1
            hi = lo
            while hi + 1 < self.width and s[hi + 1] <= y:
                hi += 1
            out.append((lo, hi - lo + 1))
        return out

    def transpose(self) -> "Polyomino":
        """Mirror image in the main axis, computed from the rows directly."""
        rows = self.rows()
        a = [n for _, n in rows]
        b = []
        for (x0, n0), (x1, _) in zip(rows, rows[1:]):
            b.append(x0 + n0 - x1)
        return Polyomino._trusted(tuple(a), tuple(b))

    def reverse(self) -> "Polyomino":
        return Polyomino._trusted(self.a[::-1], self.b[::-1])

    def serialize(self) -> str:
        return "a=" + ",".join(map(str, self.a)) + ";b=" + ",".join(map(str, self.b))

    def __str__(self):
        return self.serialize()


def parse_polyomino(text: str) -> Polyomino:
    """Parse ``"a=2,2;b=1"``."""
    fields = {}
    for part in text.replace(" ", "").split(";"):
        if not part:
            continue
        key, _, val = part.partition("=")
        fields[key] = tuple(int(v) for v in val.split(",") if v)
    if "a" not in fields:
        raise ValueError(f"missing column heights in {text!r}")
    return Polyomino(fields["a"], fields.get("b", ()))


def realize(p: Polyomino) -> frozenset[tuple[int, int]]:
    """Cells of ``p`` with minimal x and y equal to 0."""
    cells = set()
    for x, (s, h) in enumerate(zip(p.offsets(), p.a)):
        for y in range(s, s + h):
            cells.add((x, y))
    return frozenset(cells)


def normalize(cells: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    cells = list(cells)
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return frozenset((x - mx, y - my) for x, y in cells)


def from_cells(cells: Iterable[tuple[int, int]]) -> Polyomino:
    """Rebuild a polyomino from its cells; raises if they are not a parallelogram one."""
    cells = normalize(cells)
    cols: dict[int, list[int]] = {}
    for x, y in cells:
        cols.setdefault(x, []).append(y)
    width = max(cols) + 1
    if sorted(cols) != list(range(width)):
        raise ValueError("columns are not contiguous")
    lo, hi = [], []
    for x in range(width):
        ys = sorted(cols[x])
        if ys[-1] - ys[0] + 1 != len(ys):
            raise ValueError(f"column {x} is not convex")
        lo.append(ys[0])
        hi.append(ys[-1])
    if lo[0] != 0:
        raise ValueError("does not touch the bottom-left corner")
    a = tuple(h - l + 1 for l, h in zip(lo, hi))
    b = []
    for i in range(width - 1):
        if lo[i + 1] < lo[i] or hi[i + 1] < hi[i]:
            raise ValueError("boundary paths are not monotone")
        contact = hi[i] - lo[i + 1] + 1
        if contact < 1:
            raise ValueError("columns do not touch")
        b.append(contact)
    return Polyomino(a, tuple(b))


def apply(g: GroupElement, p: Polyomino) -> Polyomino:
    """Image of ``p`` under ``g``, normalised by translation."""
    if g is GroupElement.ID:
        return p
    return from_cells(g.act(x, y) for x, y in realize(p))


def apply_fast(g: GroupElement, p: Polyomino) -> Polyomino:
    """Same as :func:`apply`, computed on the column data."""
    if g is GroupElement.ID:
        return p
    if g is GroupElement.R2:
        return p.reverse()
    if g is GroupElement.D1:
        return p.transpose()
    return p.transpose().reverse()


def is_fixed(g: GroupElement, p: Polyomino) -> bool:
    return apply_fast(g, p) == p


def stabilizer(p: Polyomino) -> frozenset[GroupElement]:
    return frozenset(g for g in GROUP if is_fixed(g, p))


def exact_symmetry_group(p: Polyomino) -> Subgroup:
    return Subgroup.of(stabilizer(p))
