"""Dyck paths, the Delest-Viennot bijection and the half-turn/reflection bijection."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .polyomino import GroupElement, Polyomino, from_cells, is_fixed, realize
from .series import Monomial, TSeries

__all__ = [
    "DyckPath",
    "UP",
    "DOWN",
    "dyck_paths",
    "left_factors",
    "dv_forward",
    "dv_inverse",
    "r2_to_d2",
    "d2_to_r2",
    "closed_counts",
    "left_factor_series",
]

UP, DOWN = 1, -1


@dataclass(frozen=True)
class DyckPath:
    """Rise/fall steps (``+1``/``-1``) that never go below level 0.

    A complete path also ends at level 0; otherwise it is a left factor.
    """

    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        level = 0
        for s in self.steps:
            if s not in (UP, DOWN):
                raise ValueError(f"bad step {s!r}")
            level += s
            if level < 0:
                raise ValueError("path goes below the axis")

    @classmethod
    def from_word(cls, word: str) -> "DyckPath":
        """``"UUDD"`` style words (``U``/``x`` rise, ``D``/``X`` fall)."""
        table = {"U": UP, "x": UP, "D": DOWN, "X": DOWN}
        return cls(tuple(table[c] for c in word))

    @property
    def word(self) -> str:
        return "".join("U" if s == UP else "D" for s in self.steps)

    def __len__(self):
        return len(self.steps)

    @property
    def final_level(self) -> int:
        return sum(self.steps)

    @property
    def is_complete(self) -> bool:
        return self.final_level == 0

    def levels(self) -> list[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return out

    def peaks(self) -> list[int]:
        """Heights of the peaks, left to right."""
        lv = self.levels()
        return [lv[i + 1] for i in range(len(self.steps) - 1)
                if self.steps[i] == UP and self.steps[i + 1] == DOWN]

    def valleys(self) -> list[int]:
        lv = self.levels()
        return [lv[i + 1] for i in range(len(self.steps) - 1)
                if self.steps[i] == DOWN and self.steps[i + 1] == UP]

    def is_palindrome(self) -> bool:
        """Symmetric about the vertical through the middle."""
        return self.steps == tuple(-s for s in reversed(self.steps))

    def __str__(self):
        return self.word


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All complete Dyck paths of length ``2n``."""
    yield from (p for p in left_factors(2 * n) if p.is_complete)


def left_factors(length: int) -> Iterator[DyckPath]:
    """All left factors of Dyck paths with the given number of steps."""
    steps: list[int] = []

    def rec(level: int):
        if len(steps) == length:
            yield DyckPath(tuple(steps))
            return
        for s in (UP, DOWN):
            if level + s >= 0:
                steps.append(s)
                yield from rec(level + s)
                steps.pop()

    yield from rec(0)


def dv_forward(p: Polyomino) -> DyckPath:
    """Dyck path with peaks at the column heights and valleys at ``b_i - 1``.

    Length is ``2 * (half_perimeter - 1)`` and the peak heights sum to the area.
    """
    steps: list[int] = []
    level = 0
    valleys = [bi - 1 for bi in p.b] + [0]
    for peak, valley in zip(p.a, valleys):
        steps += [UP] * (peak - level)
        steps += [DOWN] * (peak - valley)
        level = valley
    return DyckPath(tuple(steps))


def dv_inverse(d: DyckPath) -> Polyomino:
    if not d.steps or not d.is_complete:
        raise ValueError(f"{d.word!r} is not a nonempty complete Dyck path")
    return Polyomino(tuple(d.peaks()), tuple(v + 1 for v in d.valleys()))


def _split(cells, line: int):
    """Cells strictly below the anti-diagonal ``x + y + 1 = line``, and those on it."""
    below = {c for c in cells if c[0] + c[1] + 1 < line}
    on = {c for c in cells if c[0] + c[1] + 1 == line}
    return below, on


def r2_to_d2(p: Polyomino) -> Polyomino:
    """Half-turn symmetric shape of even half-perimeter -> cross-axis symmetric shape.

    Cut along the cross diagonal through the centre of rotation. The part
    below it (whole cells, plus the lower halves of the cells the line
    cuts) is glued to its mirror image in that line instead of its
    rotated copy; the cut cells are completed by their own reflections.
    """
    if not is_fixed(GroupElement.R2, p):
        raise ValueError(f"{p} is not half-turn symmetric")
    if p.half_perimeter % 2:
        raise ValueError(f"{p} has odd half-perimeter")
    line = p.half_perimeter // 2
    below, on = _split(realize(p), line)
    mirror = {(line - 1 - y, line - 1 - x) for x, y in below}
    return from_cells(below | on | mirror)


def d2_to_r2(p: Polyomino) -> Polyomino:
    """Inverse of :func:`r2_to_d2`."""
    if not is_fixed(GroupElement.D2, p):
        raise ValueError(f"{p} is not symmetric in the cross axis")
    line = p.width  # bounding box is a square
    below, on = _split(realize(p), line)
    xs = sorted(x for x, _ in on)
    cx = xs[0] + xs[-1]
    cy = 2 * (line - 1) - cx
    rotated = {(cx - x, cy - y) for x, y in below}
    return from_cells(below | on | rotated)


def _lf_count(k: int) -> int:
    # left factors of length k
    if k < 0:
        return 0
    if k % 2 == 0:
        return comb(k, k // 2)
    return comb(k + 1, (k + 1) // 2) // 2


def closed_counts(kind: str, n: int) -> int:
    """Closed-form counts.

    ``catalan``           c_n = C(2n, n) / (n + 1)
    ``central_binomial``  b_n = C(2n, n)
    ``r2_fix``            half-turn symmetric shapes of half-perimeter n
    ``d12_fix``           fully symmetric shapes of half-perimeter n
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if kind == "catalan":
        return comb(2 * n, n) // (n + 1)
    if kind == "central_binomial":
        return comb(2 * n, n)
    if kind == "r2_fix":
        return _lf_count(n - 1) if n >= 2 else 0
    if kind == "d12_fix":
        if n < 2 or n % 2:
            return 0
        return _lf_count((n - 2) // 2)
    raise ValueError(f"unknown kind {kind!r}")


def left_factor_series(max_len: int) -> TSeries:
    """Left factors of Dyck paths counted by length, to ``t^max_len``.

    Built from the grammar ``C -> 1 + x C xbar C``, ``L -> C + C x L`` with
    both letters sent to ``t``: ``C = 1 + t^2 C^2`` and ``L = C (1 + t L)``,
    each iterated to its fixed point.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    n = max_len + 1
    one = TSeries.one(n)
    c = one
    while True:
        nxt = one + (c * c).mul_monomial(Monomial(1, 2, 0)).truncate(n)
        if nxt == c:
            break
        c = nxt
    ell = one
    while True:
        nxt = (c + c * ell.mul_monomial(Monomial(1, 1, 0))).truncate(n)
        if nxt == ell:
            break
        ell = nxt
    return ell
