"""Nice lattices, negative characteristic values and small minors.

Run: python3 demos/minors_and_niceness.py
"""

from matroid_blowup import (
    Graph,
    arrangement_of_graph,
    build_arrangement,
    characteristic_polynomial,
    has_minor,
    is_nice,
)
from matroid_blowup.matroid import contraction_polynomials, fano_configuration, four_point_line
from matroid_blowup.verifier.corpus import non_fano_configuration, uniform_configuration

cases = {
    "K4": arrangement_of_graph(Graph.complete(4)),
    "four points on a line": build_arrangement(four_point_line()),
    "Fano over GF(2)": build_arrangement(fano_configuration()),
    "non-Fano over Q": build_arrangement(non_fano_configuration()),
    "U(3,5)": build_arrangement(uniform_configuration(3, 5)),
}

for name, P in cases.items():
    p = characteristic_polynomial(P)
    worst = min(q(m) for q in contraction_polynomials(P).values() for m in (2, 3))
    print(f"{name}: p = {p}")
    print(f"  nice={is_nice(P)}  min p(L/x, 2 or 3)={worst}  "
          f"L4 minor={has_minor(P, 'L4')}  F7 minor={has_minor(P, 'F7')}")
