"""Shapes, Dyck paths and the half-turn to reflection map, by example."""

from parapoly import Polyomino, dv_forward, exact_symmetry_group, r2_to_d2
from parapoly.oracle import enumerate_polyominoes
from parapoly.polyomino import GroupElement, is_fixed, realize


def draw(p):
    cells = realize(p)
    for y in reversed(range(p.height)):
        print("   " + "".join("#" if (x, y) in cells else "." for x in range(p.width)))


p = Polyomino((1, 3, 3, 1), (1, 2, 1))  # column heights, then contacts
print(p, "area", p.area, "half-perimeter", p.half_perimeter)
draw(p)

# peaks at the column heights, valleys one below the contacts
d = dv_forward(p)
print(d.word, "peaks", d.peaks(), "valleys", d.valleys())

# half-turn symmetric -> palindromic Dyck word
print(is_fixed(GroupElement.R2, p), d.is_palindrome(), exact_symmetry_group(p).name)

# fold it onto the cross diagonal: same area, same half-perimeter
q = r2_to_d2(p)
print("image", q, exact_symmetry_group(q).name)
draw(q)

# all of half-perimeter 8 at once
src = [s for s in enumerate_polyominoes("halfperimeter", 8) if is_fixed(GroupElement.R2, s)]
img = {r2_to_d2(s) for s in src}
print(len(src), "half-turn symmetric ->", len(img), "distinct reflection symmetric")
