"""Cardinality census across the built-in catalog.

For each certified odd-characteristic entry: the involution count, the
constant centralizer size of nontrivial translations, the sizes of the
product sets J.J and J.J.J, and their difference. On split groups the
triple products collapse back onto the involutions, so the difference is
degree minus translation count. The fiber identity j2 * khat == nhat^2
is checked for every row.
"""

from involq import census
from involq.catalog import build_entry, run_catalog

print(f"{'entry':20s} {'nhat':>5s} {'khat':>5s} {'j2':>5s} {'j3':>5s} {'lhat':>5s}  identities")
for entry in run_catalog(49):
    if not entry.expected_certified or entry.expected_characteristic == 2:
        continue
    G = build_entry(entry)
    rep = census(G)
    flag = "ok" if rep.ok else "VIOLATED"
    print(f"{entry.id:20s} {rep.nhat:5d} {rep.khat:5d} {rep.j2_size:5d}"
          f" {rep.j3_size:5d} {rep.lhat:5d}  {flag}")

print()
print("note:", census(build_entry(run_catalog(9)[1])).disclaimer)
