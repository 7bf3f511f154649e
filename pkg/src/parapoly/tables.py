"""Count tables by symmetry class, from the generating functions or the oracle."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import genfun, oracle
from .series import TruncationError

__all__ = ["COLUMNS", "CountTable", "genfun_table", "oracle_table", "first_size"]

COLUMNS = ("Size", "Fix1", "FixR2", "FixD1", "FixD2", "Orbits", "FixD2grp", "Asym")

# series name for each count column
_SERIES = ("P", "R2", "D1", "D2", "Orbits", "D12", "Asym")
_ORACLE = ("fix1", "fix_r2", "fix_d1", "fix_d2", "orbits", "fix_full", "asym")


def first_size(measure: str) -> int:
    return 2 if measure == "halfperimeter" else 1


@dataclass
class CountTable:
    measure: str
    rows: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def sizes(self) -> list[int]:
        return sorted(self.rows)

    def column(self, name: str) -> dict[int, int]:
        j = COLUMNS.index(name) - 1
        return {n: r[j] for n, r in sorted(self.rows.items())}

    def records(self) -> list[dict[str, int]]:
        return [dict(zip(COLUMNS, (n,) + self.rows[n])) for n in self.sizes()]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for n in self.sizes():
            w.writerow((n,) + self.rows[n])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"measure": self.measure, "columns": list(COLUMNS),
                           "rows": self.records()}, indent=1) + "\n"

    def pretty(self) -> str:
        body = [COLUMNS] + [tuple(map(str, (n,) + self.rows[n])) for n in self.sizes()]
        widths = [max(len(r[j]) for r in body) for j in range(len(COLUMNS))]
        lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in body]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        if fmt == "pretty":
            return self.pretty()
        raise ValueError(f"unknown format {fmt!r}")

    def diff(self, other: "CountTable") -> list[str]:
        """Human-readable cell mismatches, empty when the tables agree."""
        out = []
        for n in sorted(set(self.rows) | set(other.rows)):
            a, b = self.rows.get(n), other.rows.get(n)
            if a is None or b is None:
                out.append(f"size {n}: present in only one table")
                continue
            for name, x, y in zip(COLUMNS[1:], a, b):
                if x != y:
                    out.append(f"size {n} {name}: {x} != {y}")
        return out


def genfun_table(measure: str, max_size: int, trunc_t: int | None = None,
                 trunc_q: int | None = None) -> CountTable:
    """Counts read off the generating functions.

    Default truncations are the smallest windows that make every row up to
    ``max_size`` exact; explicit smaller ones raise :class:`TruncationError`.
    """
    lo = first_size(measure)
    if max_size < lo:
        raise ValueError(f"max size must be >= {lo}")
    if measure == "halfperimeter":
        w = genfun.perimeter_window(max_size + 1)
        w = genfun.Window(trunc_t or w.t, trunc_q or w.q, w.mode)
        if w.t < max_size + 1:
            raise TruncationError(f"half-perimeter {max_size} needs trunc_t >= {max_size + 1}")
        parts = genfun.components(w)
        cols = [genfun.perimeter_counts(parts[s]) for s in _SERIES]
    elif measure == "area":
        w = genfun.area_window(max_size + 1)
        w = genfun.Window(trunc_t or w.t, trunc_q or w.q, w.mode)
        if w.q < max_size + 1:
            raise TruncationError(f"area {max_size} needs trunc_q >= {max_size + 1}")
        parts = genfun.components(w)
        cols = [genfun.area_counts(parts[s]) for s in _SERIES]
    else:
        raise ValueError(f"unknown measure {measure!r}")
    rows = {n: tuple(c.get(n, 0) for c in cols) for n in range(lo, max_size + 1)}
    return CountTable(measure, rows)


def oracle_table(measure: str, max_size: int, jobs: int = 1,
                 min_size: int | None = None) -> CountTable:
    """Counts from brute-force enumeration."""
    lo = first_size(measure) if min_size is None else min_size
    rows = {}
    for n in range(lo, max_size + 1):
        row = oracle.census(measure, n, jobs).row()
        rows[n] = tuple(row[k] for k in _ORACLE)
    return CountTable(measure, rows)
