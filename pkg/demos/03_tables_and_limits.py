"""Count tables from the series, checked against brute force, and the growth rate."""

from parapoly.tables import genfun_table, oracle_table
from parapoly.verify import MU, asymptotic_checks

by_hp = genfun_table("halfperimeter", 20)
print(by_hp.pretty())

# the enumerator is slow but independent
small = oracle_table("area", 10)
print("area <= 10 agrees with brute force:", not genfun_table("area", 10).diff(small))

by_area = genfun_table("area", 23)
tot = by_area.column("Fix1")
for n in range(18, 24):
    print(n, tot[n], tot[n] / tot[n - 1])
print("growth constant", MU)

rep = asymptotic_checks(23, 20, tables=(by_hp, by_area))
print("asymmetric fraction at half-perimeter 20:", rep["asym_fraction"]["value"])
for name, d in rep["decay_halfperimeter"].items():
    print(name, f"{d['ratio_half']:.2e} -> {d['ratio']:.2e}")
