from math import comb

import pytest

from golden import TABLE_AREA, TABLE_HP
from parapoly.oracle import (
    Census,
    canonical,
    census,
    enumerate_polyominoes,
    exact_counts,
    fix_counts,
    orbit_count,
)
from parapoly.polyomino import GroupElement as G, Polyomino, Subgroup


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_enumerate_examples():
    assert sum(1 for _ in enumerate_polyominoes("halfperimeter", 4)) == 5
    assert sum(1 for _ in enumerate_polyominoes("area", 3)) == 4
    assert list(enumerate_polyominoes("halfperimeter", 2)) == [Polyomino((1,))]


def test_enumerate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        list(enumerate_polyominoes("halfperimeter", 1))
    with pytest.raises(ValueError):
        list(enumerate_polyominoes("area", 0))
    with pytest.raises(ValueError):
        list(enumerate_polyominoes("width", 3))


@pytest.mark.parametrize("hp", range(2, 11))
def test_catalan_totals_and_uniqueness(hp):
    shapes = list(enumerate_polyominoes("halfperimeter", hp))
    assert len(shapes) == catalan(hp - 1)
    assert len(set(shapes)) == len(shapes)
    assert all(p.half_perimeter == hp for p in shapes)


@pytest.mark.parametrize("n", range(1, 11))
def test_area_enumeration(n):
    shapes = list(enumerate_polyominoes("area", n))
    assert len(set(shapes)) == len(shapes) == TABLE_AREA[n][0]
    assert all(p.area == n for p in shapes)


def test_fix_counts_examples():
    assert fix_counts("halfperimeter", 6) == {G.ID: 42, G.R2: 10, G.D1: 2, G.D2: 10}
    assert fix_counts("area", 7) == {G.ID: 105, G.R2: 9, G.D1: 1, G.D2: 9}
    assert fix_counts("area", 1) == {g: 1 for g in G}


def test_orbit_count_examples():
    assert orbit_count("halfperimeter", 6) == 16
    assert orbit_count("area", 5) == 7
    assert orbit_count("halfperimeter", 2) == 1


def test_exact_counts_examples():
    assert exact_counts("halfperimeter", 8)[Subgroup.TRIVIAL] == 360
    assert exact_counts("area", 12)[Subgroup.FULL] == 0
    ex = exact_counts("area", 9)
    assert sum(ex.values()) == TABLE_AREA[9][0]


@pytest.mark.parametrize("measure,n", [("halfperimeter", n) for n in range(2, 11)]
                         + [("area", n) for n in range(1, 12)])
def test_census_rows_and_mobius(measure, n):
    c = census(measure, n)
    ref = (TABLE_HP if measure == "halfperimeter" else TABLE_AREA)[n]
    assert tuple(c.row().values()) == ref
    f = c.fix
    assert c.exact[Subgroup.TRIVIAL] == (f[G.ID] - f[G.R2] - f[G.D1] - f[G.D2]
                                         + 2 * c.exact[Subgroup.FULL])
    assert sum(c.exact.values()) == c.total
    assert c.orbits == c.burnside_orbits


@pytest.mark.parametrize("hp", [3, 5, 7, 9, 11])
def test_odd_halfperimeter_has_no_reflections(hp):
    f = fix_counts("halfperimeter", hp)
    assert f[G.D1] == f[G.D2] == 0


def test_parallel_census_matches_serial():
    a = census("halfperimeter", 9, jobs=2)
    b = census("halfperimeter", 9, jobs=1)
    assert a.row() == b.row() and a.fix_area == b.fix_area


def test_canonical_is_orbit_minimum():
    p = Polyomino((3, 1), (1,))
    reps = {canonical(p)}
    for img in (p.reverse(), p.transpose(), p.transpose().reverse()):
        reps.add(canonical(img))
    assert len(reps) == 1


def test_census_merge():
    a, b = Census(), Census()
    a.add(Polyomino((1,)))
    b.add(Polyomino((1, 1), (1,)))
    a.merge(b)
    assert a.total == 2 and a.fix[G.R2] == 2
