"""The triangle K3, from embedding to the d(m, n) and s0(m, n) tables.

Run: python3 demos/triangle_tables.py
"""

from matroid_blowup import (
    BlowupTower,
    Graph,
    arrangement_of_graph,
    build_Sbar,
    characteristic_polynomial,
    degree_d,
    segre_class,
)

# The three edges of a triangle become three collinear points in P^3.
P = arrangement_of_graph(Graph.complete(3))
print(P)
print("p(L, t) =", characteristic_polynomial(P))

# S-bar(t) records p(L/x, t) as the coefficient of H_x.
print("S-bar(t) =", build_Sbar(P))

ms, ns = range(2, 6), range(3, 8)

print("\nd(m, n) = S-bar(m)^n on V^n")
print("n\\m " + "".join(f"{m:>12}" for m in ms))
for n in ns:
    tower = BlowupTower(P, n)
    print(f"{n:<4}" + "".join(f"{degree_d(tower, m):>12}" for m in ms))

print("\ns0(m, n), the point part of the Segre class of the base locus")
print("n\\m " + "".join(f"{m:>10}" for m in ms))
for n in ns:
    tower = BlowupTower(P, n)
    print(f"{n:<4}" + "".join(f"{segre_class(tower, m).s0:>10}" for m in ms))

# For prime n both numbers remember the chromatic polynomial mod n.
p = characteristic_polynomial(P)
for n in (3, 5, 7):
    tower = BlowupTower(P, n)
    row = [(degree_d(tower, m) - p(m)) % n for m in ms]
    print(f"n={n}: d(m,n) - p(m) mod n ->", row)
