"""Chromatic-polynomial oracles that never touch the lattice machinery."""

from __future__ import annotations

from ..graphs import Graph
from ..matroid import ResourceLimitError
from ..polynomial import IntPolynomial

MAX_ENUMERATION_VERTICES = 12


def chromatic_by_enumeration(graph: Graph, m: int) -> int:
    """Count proper m-colorings by backtracking over vertices."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if graph.vertices > MAX_ENUMERATION_VERTICES:
        raise ResourceLimitError(
            f"enumeration limited to {MAX_ENUMERATION_VERTICES} vertices"
        )
    nbrs = [[] for _ in range(graph.vertices)]
    for u, v in graph.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    colors = [-1] * graph.vertices

    def count(i):
        if i == graph.vertices:
            return 1
        total = 0
        used = {colors[w] for w in nbrs[i] if w < i}
        for c in range(m):
            if c not in used:
                colors[i] = c
                total += count(i + 1)
        colors[i] = -1
        return total

    return count(0)


_DC_MEMO: dict = {}


def chromatic_by_deletion_contraction(graph: Graph) -> IntPolynomial:
    """P(G) = P(G - e) - P(G / e), memoized on canonical forms of small graphs."""
    return _dc(graph.vertices, graph.edge_set())


def _dc(nv: int, edges: frozenset) -> IntPolynomial:
    if not edges:
        return IntPolynomial.monomial(nv)
    key = Graph(nv, tuple(edges)).canonical_form() if nv <= 7 else (nv, edges)
    if key in _DC_MEMO:
        return _DC_MEMO[key]
    e = min(edges)
    u, v = e
    rest = edges - {e}
    # contract v into u, relabel vertices above v down by one
    relabel = lambda w: (u if w == v else w) - (1 if w > v else 0)  # noqa: E731
    contracted = set()
    for a, b in rest:
        a2, b2 = relabel(a), relabel(b)
        contracted.add((min(a2, b2), max(a2, b2)))
    out = _dc(nv, rest) - _dc(nv - 1, frozenset(contracted))
    _DC_MEMO[key] = out
    return out
