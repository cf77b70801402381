"""Beta invariants read off the beta divisor.

The beta divisor is H0 + (n - r) H_1 + omega. Its pairing with gamma_x is
the signed beta B(x), and it does not depend on n.

Run: python3 demos/beta_invariant.py
"""

from matroid_blowup import (
    Graph,
    arrangement_of_graph,
    beta_divisor,
    beta_invariant,
    build_arrangement,
    gamma,
    pair,
    signed_beta,
)
from matroid_blowup.matroid import fano_configuration

cases = {
    "K3": arrangement_of_graph(Graph.complete(3)),
    "K4": arrangement_of_graph(Graph.complete(4)),
    "two disjoint edges": arrangement_of_graph(Graph(4, ((0, 1), (2, 3)))),
    "Fano over GF(2)": build_arrangement(fano_configuration()),
}

for name, P in cases.items():
    r = P.rank_of_top
    print(f"{name}: beta = {beta_invariant(P)}")
    for n in (r + 1, r + 3):
        w = beta_divisor(P, n)
        ok = all(pair(gamma(P, x), w) == signed_beta(P, x) for x in P.lattice_ids)
        print(f"  n={n}: beta divisor . gamma_0 = {pair(gamma(P, 0), w)}, "
              f"matches B(x) for all x: {ok}")
