"""A walk through the generating functions, printing the first coefficients."""

from parapoly import genfun
from parapoly.series import format_qpoly

w = genfun.perimeter_window(9)  # every t^k, k <= 8, exact in q
parts = genfun.components(w)

# t marks half-perimeter, q marks area
for name in ("P", "R2", "D1", "D2", "D12", "Orbits", "Asym"):
    print(name)
    for k, c in parts[name].terms():
        print(f"  t^{k}: {format_qpoly(c)}")

# setting q = 1 gives the plain counts, Catalan numbers for P
print([parts["P"][k].at_one() for k in range(2, 9)])

# the Dyck series two ways: quotient of q-series vs the q-Catalan sum
d = genfun.dyck_gf(genfun.Window(7, 40))
print(d.pretty())
print(genfun.qcatalan(4))
