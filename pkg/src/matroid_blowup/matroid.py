"""Lattice combinatorics on L: Möbius function, characteristic polynomials,
beta invariants, modularity, contraction/deletion, minors and niceness."""

from __future__ import annotations

from itertools import combinations, permutations

from .arrangement import (
    ArrangementPoset,
    PointConfiguration,
    PreconditionError,
    build_arrangement,
    meet,
)
from .fields import Field
from .graphs import Graph
from .linalg import Subspace, rref
from .polynomial import IntPolynomial


class ResourceLimitError(RuntimeError):
    """Brute-force search exceeds its configured size bound."""


def _require_flat(poset: ArrangementPoset, *xs):
    for x in xs:
        if not poset.is_flat(x):
            raise PreconditionError(f"element {x} is in M; lattice operations need L")


def moebius_row(poset: ArrangementPoset, x: int) -> dict:
    """``{z: mu(x, z)}`` for every z >= x in L, by the defining recursion."""
    cache = poset.cache.setdefault("moebius", {})
    if x in cache:
        return cache[x]
    up = sorted((z for z in poset.above(x) if poset.is_flat(z)), key=poset.rank)
    row = {}
    for z in up:
        if z == x:
            row[z] = 1
        else:
            row[z] = -sum(row[y] for y in poset.below(z) if y in row and y != z)
    cache[x] = row
    return row


def moebius(poset: ArrangementPoset, x: int, z: int) -> int:
    _require_flat(poset, x, z)
    return moebius_row(poset, x).get(z, 0)


def characteristic_polynomial(poset: ArrangementPoset, x: int = 0) -> IntPolynomial:
    """p(L/x, t) = sum over y >= x of mu(x, y) t^(r(1) - r(y))."""
    _require_flat(poset, x)
    r1 = poset.rank_of_top
    coeffs = [0] * (r1 - poset.rank(x) + 1)
    for y, mu in moebius_row(poset, x).items():
        coeffs[r1 - poset.rank(y)] += mu
    return IntPolynomial(coeffs)


def contraction_polynomials(poset: ArrangementPoset) -> dict:
    """``{x: p(L/x, t)}`` for all x in L."""
    cache = poset.cache.get("contractions")
    if cache is None:
        cache = {x: characteristic_polynomial(poset, x) for x in poset.lattice_ids}
        poset.cache["contractions"] = cache
    return cache


def chromatic_polynomial(graph: Graph) -> IntPolynomial:
    """t^c p(L, t) for the cycle-matroid lattice L of ``graph``."""
    from .arrangement import arrangement_of_graph

    poset = arrangement_of_graph(graph)
    return IntPolynomial.monomial(graph.components()) * characteristic_polynomial(poset)


def signed_beta(poset: ArrangementPoset, x: int = 0) -> int:
    """B(x) = (-1)^(r(1)-r(x)) beta(L/x); equals -p'(L/x, 1)."""
    _require_flat(poset, x)
    return -characteristic_polynomial(poset, x).derivative()(1)


def beta_invariant(poset: ArrangementPoset, x: int = 0) -> int:
    """Beta invariant of L/x. Zero on the trivial lattice."""
    sign = -1 if (poset.rank_of_top - poset.rank(x)) % 2 else 1
    return sign * signed_beta(poset, x)


def is_modular(poset: ArrangementPoset, x: int) -> bool:
    _require_flat(poset, x)
    sx = poset[x].span
    for z in poset.flat_ids:
        m = meet(poset, x, z)
        inter = sx.intersect(poset[z].span) if sx is not None else None
        if m == 0:
            if inter is not None and not inter.is_empty():
                return False
        elif inter != poset[m].span:
            return False
    return True


def contract(poset: ArrangementPoset, x: int) -> ArrangementPoset:
    """Geometric contraction L/x: project the configuration from span(x).

    Points collapsing to the same projective point are merged, keeping the
    smallest label.
    """
    _require_flat(poset, x)
    cfg = poset.config
    if x == 0:
        return poset
    center = poset[x].span
    keep = [i for i, p in enumerate(cfg.points) if not center.contains_vector(p)]
    projected = center.project_from([cfg.points[i] for i in keep])
    groups = {}
    for i, v in zip(keep, projected):
        key, _ = rref([v], cfg.field)
        groups.setdefault(key, []).append(i)
    items = sorted(groups.items(), key=lambda kv: min(cfg.labels[i] for i in kv[1]))
    pts = tuple(key[0] for key, _ in items)
    labels = tuple(min(cfg.labels[i] for i in idx) for _, idx in items)
    new = PointConfiguration(cfg.field, cfg.ambient_dim - poset.rank(x), pts, labels)
    return build_arrangement(new)


def delete(poset: ArrangementPoset, e: int) -> ArrangementPoset:
    """Deletion L - e: rebuild from every point except the atom ``e``."""
    if poset.kind(e) != "L" or poset.rank(e) != 1:
        raise PreconditionError("deletion needs a rank-1 element of L")
    cfg = poset.config
    (label,) = poset[e].atoms
    idx = [i for i, l in enumerate(cfg.labels) if l != label]
    new = PointConfiguration(cfg.field, cfg.ambient_dim,
                             tuple(cfg.points[i] for i in idx),
                             tuple(cfg.labels[i] for i in idx))
    return build_arrangement(new)


def is_isthmus(poset: ArrangementPoset, e: int) -> bool:
    """e is an isthmus iff removing it lowers the rank of the lattice."""
    cfg = poset.config
    (label,) = poset[e].atoms
    rest = [p for l, p in zip(cfg.labels, cfg.points) if l != label]
    rank = len(rref(rest, cfg.field)[0]) if rest else 0
    return rank < poset.rank_of_top


def deletion_map(poset: ArrangementPoset, e: int, deleted: ArrangementPoset) -> dict:
    """For each x in L, the largest element x' of L - e below x."""
    (label,) = poset[e].atoms
    out = {}
    for x in poset.lattice_ids:
        atoms = poset[x].atoms - {label}
        cfg = deleted.config
        if not atoms:
            out[x] = 0
            continue
        span = Subspace.span([p for l, p in zip(cfg.labels, cfg.points) if l in atoms],
                             cfg.ncols, cfg.field)
        out[x] = deleted.id_of_span(span)
    return out


# -- minors ------------------------------------------------------------

def _restricted_flats(config: PointConfiguration, idx) -> frozenset:
    """Flats of the restriction to ``idx``, as frozensets of positions 0..k-1."""
    pts = [config.points[i] for i in idx]
    k = len(pts)
    flats = set()
    for size in range(k + 1):
        for sub in combinations(range(k), size):
            span = Subspace.span([pts[i] for i in sub], config.ncols, config.field)
            flats.add(frozenset(i for i in range(k) if span.contains_vector(pts[i])))
    return frozenset(flats)


def _isomorphic(flats_a: frozenset, flats_b: frozenset, k: int) -> bool:
    if len(flats_a) != len(flats_b):
        return False
    sig = lambda F: sorted(len(f) for f in F)  # noqa: E731
    if sig(flats_a) != sig(flats_b):
        return False
    for perm in permutations(range(k)):
        if all(frozenset(perm[i] for i in f) in flats_b for f in flats_a):
            return True
    return False


def _target_flats(name: str):
    if name == "L4":
        cfg = PointConfiguration.from_vectors([[1, 0], [0, 1], [1, 1], [1, 2]])
    elif name == "F7":
        cfg = fano_configuration()
    else:
        raise ValueError(f"unknown minor target {name!r}")
    k = len(cfg.points)
    return cfg.rank, k, _restricted_flats(cfg, range(k))


def has_minor(poset: ArrangementPoset, target: str, max_points: int = 10) -> bool:
    """Exhaustive search for a minor isomorphic to ``target`` ("L4" or "F7")."""
    cfg = poset.config
    if len(cfg.points) > max_points:
        raise ResourceLimitError(
            f"minor search limited to {max_points} points, got {len(cfg.points)}"
        )
    t_rank, t_size, t_flats = _target_flats(target)
    memo = poset.cache.setdefault("minor", {})
    if target in memo:
        return memo[target]
    found = False
    for x in poset.lattice_ids:
        if poset.rank_of_top - poset.rank(x) < t_rank:
            continue
        con = contract(poset, x)
        c = con.config
        if len(c.points) < t_size:
            continue
        for sub in combinations(range(len(c.points)), t_size):
            if len(rref([c.points[i] for i in sub], c.field)[0]) != t_rank:
                continue
            if _isomorphic(_restricted_flats(c, sub), t_flats, t_size):
                found = True
                break
        if found:
            break
    memo[target] = found
    return found


def is_nice(poset: ArrangementPoset) -> bool:
    """All contractions have p(L/x, 2) >= 0 and p(L/x, 3) >= 0."""
    return all(p(2) >= 0 and p(3) >= 0 for p in contraction_polynomials(poset).values())


# -- named configurations -----------------------------------------------

def fano_configuration() -> PointConfiguration:
    """The seven points of PG(2, 2), over GF(2)."""
    vecs = [[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1) if (a, b, c) != (0, 0, 0)]
    return PointConfiguration.from_vectors(vecs, field=Field("GF(2)"))


def four_point_line() -> PointConfiguration:
    return PointConfiguration.from_vectors([[1, 0], [0, 1], [1, 1], [1, 2]])
