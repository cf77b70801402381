"""Degrees of top-dimensional products of divisors on the blow-up tower V^n.

Evaluation peels off blow-up stages from the last (highest rank) down.
At a stage, a product of pulled-back classes times ``E_x^k`` for a center
``x`` of codimension ``c`` pushes forward to the center::

    ∫ E_x^k · α  =  (-1)^(c-1) · C(k-1, c-1) · ∫_x α|_x · h_x^(k-c)

where ``h_x = H0 - sum_{y < x} E_y`` restricted to the proper transform of
``x``. This holds because the center is a transversal intersection of
``c`` hyperplane classes ``h_x``, so its normal bundle is ``c`` copies of
``h_x`` and its Segre class is ``(1 + h_x)^(-c)``. Distinct centers of one
stage are disjoint, and a generator ``E_y`` restricts to zero on ``x``
unless ``y < x``. The recursion bottoms out on a projective space where
only ``H0`` survives.
"""

from __future__ import annotations

import warnings
from itertools import product
from math import comb

from .arrangement import ArrangementPoset, PreconditionError
from .divisors import E_BASIS, DivisorClass, build_Sbar, change_basis
from .matroid import is_nice


class DegreeMismatchError(ValueError):
    """Monomial degree differs from the dimension of the variety."""


class SelfIntersectionOnlyWarning(UserWarning):
    """d(m, n) requested for a lattice that is not nice: the value is only S̄(m)^n."""


def pushforward_weight(k: int, c: int) -> int:
    """Coefficient of h^(k-c) in the pushforward of E^k from a codimension-c center."""
    return (-1) ** (c - 1) * comb(k - 1, c - 1)


class BlowupTower:
    """V^n for a poset: P^n blown up along L ∪ M in order of increasing rank.

    ``schedule`` (optional) lists the centers stage by stage; it must be a
    grouping of all non-bottom elements by rank. Its order only affects the
    order of summation.
    """

    def __init__(self, poset: ArrangementPoset, n: int, schedule=None):
        r1 = poset.rank_of_top
        if n <= r1:
            raise PreconditionError(f"tower dimension must exceed r(1) = {r1}; got n = {n}")
        self.poset = poset
        self.n = n
        if schedule is None:
            schedule = [list(ids) for r, ids in poset.by_rank.items() if r > 0]
        self.schedule = [tuple(stage) for stage in schedule]
        self._check_schedule()
        self._stage_of = {x: i for i, st in enumerate(self.schedule) for x in st}
        # keyed by the weight function so a substituted one never sees stale values
        self._memo = poset.cache.setdefault(("degree_memo", pushforward_weight), {})

    def _check_schedule(self):
        p = self.poset
        seen = [x for st in self.schedule for x in st]
        if sorted(seen) != list(range(1, len(p))):
            raise ValueError("schedule must list every non-bottom element exactly once")
        for st in self.schedule:
            if len({p.rank(x) for x in st}) > 1:
                raise ValueError("a stage mixes ranks")
            for a in st:
                for b in st:
                    if a != b and (p.leq(a, b) or p.leq(b, a)):
                        raise ValueError("centers within a stage must be incomparable")
        ranks = [p.rank(st[0]) for st in self.schedule if st]
        if ranks != sorted(ranks):
            raise ValueError("stages must be ordered by increasing rank")

    # -- core recursion ---------------------------------------------------
    def _centers(self, top, rank):
        p = self.poset
        out = []
        for st in self.schedule:
            for x in st:
                if p.rank(x) == rank and (top is None or (x != top and p.leq(x, top))):
                    out.append(x)
        return out

    def _dim(self, top):
        return self.n if top is None else self.poset.rank(top) - 1

    def _integrate(self, top, R, factors):
        key = (("amb", self.n) if top is None else top, R, factors)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if R == 0:
            val = 1
            for cls, e in factors:
                val *= dict(cls).get(0, 0) ** e
            self._memo[key] = val
            return val
        stage = self._centers(top, R)
        involved = [x for x in stage if any(x in dict(cls) for cls, _ in factors)]
        if not involved:
            val = self._integrate(top, R - 1, factors)
            self._memo[key] = val
            return val
        stage_set = set(stage)
        stripped = [{g: c for g, c in cls if g not in stage_set} for cls, _ in factors]
        exps = [e for _, e in factors]
        total = self._integrate(top, R - 1, _canon(zip(stripped, exps)))
        d = self._dim(top)
        p = self.poset
        for x in involved:
            c = d - (p.rank(x) - 1)
            below = {y for y in p.below(x) if y not in (0, x)}
            h = {0: 1}
            for y in below:
                h[y] = -1
            coefs = [dict(cls).get(x, 0) for cls, _ in factors]
            restricted = [{g: v for g, v in a.items() if g == 0 or g in below} for a in stripped]
            ranges = [range(e + 1) if b else range(1) for b, e in zip(coefs, exps)]
            for ks in product(*ranges):
                k = sum(ks)
                if k < c:
                    continue
                w = 1
                for b, e, ki in zip(coefs, exps, ks):
                    w *= comb(e, ki) * b ** ki
                sub = [(a, e - ki) for a, e, ki in zip(restricted, exps, ks)]
                sub.append((h, k - c))
                inner = self._integrate(x, p.rank(x) - 1, _canon(sub))
                if inner:
                    total += w * pushforward_weight(k, c) * inner
        self._memo[key] = total
        return total

    def integrate(self, factors) -> int:
        """Degree of ``prod D_i^e_i`` for ``factors = [(DivisorClass, e_i), ...]``."""
        items = []
        deg = 0
        for D, e in factors:
            De = change_basis(D, E_BASIS)
            if De.poset is not self.poset:
                raise ValueError("class does not live on this tower's poset")
            for g, cf in De.coeffs.items():
                if not isinstance(cf, int):
                    raise TypeError("integrate needs integer coefficients; evaluate first")
            items.append((dict(De.coeffs), e))
            deg += e
        if deg != self.n:
            raise DegreeMismatchError(f"total degree {deg} != dimension {self.n}")
        top_rank = self.poset.rank_of_top
        return self._integrate(None, top_rank, _canon(items))


def _canon(items):
    merged = {}
    for cls, e in items:
        if e == 0:
            continue
        key = tuple(sorted((g, c) for g, c in cls.items() if c != 0))
        merged[key] = merged.get(key, 0) + e
    return tuple(sorted(merged.items()))


class DivisorMonomial(dict):
    """Exponents ``{generator id: a}`` over the E-basis (``0`` is H0)."""

    @property
    def degree(self) -> int:
        return sum(self.values())


def monomial_degree(tower: BlowupTower, mono) -> int:
    mono = DivisorMonomial(mono)
    if mono.degree != tower.n:
        raise DegreeMismatchError(f"monomial degree {mono.degree} != dimension {tower.n}")
    if any(a < 0 for a in mono.values()):
        raise ValueError("negative exponent")
    factors = [(DivisorClass.generator(tower.poset, g), a) for g, a in mono.items() if a]
    return tower.integrate(factors)


def self_intersection(tower: BlowupTower, D: DivisorClass) -> int:
    """D^n on V^n."""
    return tower.integrate([(D, tower.n)])


def self_intersection_by_monomials(tower: BlowupTower, D: DivisorClass) -> int:
    """D^n by multinomial expansion over generators, one monomial at a time.

    Monomials whose support is not a chain are skipped (they vanish). Slow;
    kept as a cross-check for :func:`self_intersection`.
    """
    De = change_basis(D, E_BASIS)
    p = tower.poset
    gens = sorted(De.coeffs)
    n = tower.n
    total = 0

    def rec(i, left, chosen, weight):
        nonlocal total
        if i == len(gens):
            if left == 0:
                total += weight * monomial_degree(tower, dict(chosen))
            return
        g = gens[i]
        rec(i + 1, left, chosen, weight)
        if g != 0 and any(h != 0 and not (p.leq(g, h) or p.leq(h, g)) for h, _ in chosen):
            return
        c = De.coeffs[g]
        for a in range(1, left + 1):
            rec(i + 1, left - a, chosen + [(g, a)], weight * comb(left, a) * c ** a)

    rec(0, n, [], 1)
    return total


def degree_d(tower: BlowupTower, m: int) -> int:
    """d(m, n) = S̄(m)^n. Warns if the lattice is not nice."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    if not is_nice(tower.poset):
        warnings.warn("lattice is not nice; returning the self-intersection only",
                      SelfIntersectionOnlyWarning, stacklevel=2)
    return self_intersection(tower, build_Sbar(tower.poset).evaluate(m))
