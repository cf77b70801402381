"""Counting colorings with an intersection number.

For a graph G with c components, m^c * (S(m) . gamma_0) is the number of
proper m-colorings. Here we check it against brute force for a few graphs
and show the pairings that make up the K4 computation.

Run: python3 demos/chromatic_by_intersection.py
"""

from matroid_blowup import DivisorClass, Graph, arrangement_of_graph, build_S, gamma, pair
from matroid_blowup.verifier import chromatic_by_enumeration

graphs = {
    "K4": Graph.complete(4),
    "C5": Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    "two triangles": Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5))),
}

for name, g in graphs.items():
    P = arrangement_of_graph(g)
    c = g.components()
    S = build_S(P)
    geo = [m ** c * pair(gamma(P, 0), S.evaluate(m)) for m in range(6)]
    brute = [chromatic_by_enumeration(g, m) for m in range(6)]
    print(f"{name:<14} intersection {geo}")
    print(f"{'':<14} brute force  {brute}")

K4 = arrangement_of_graph(Graph.complete(4))
g0 = gamma(K4, 0)
print("\nK4: E_x . gamma_0 by element")
for x in K4.flat_ids:
    val = pair(g0, DivisorClass.generator(K4, x))
    print(f"  rank {K4.rank(x)}, {len(K4[x].atoms)} points: {val}")
print("  F_y . gamma_0 for the diagonal points:",
      [pair(g0, DivisorClass.generator(K4, y)) for y in K4.extra_ids])
