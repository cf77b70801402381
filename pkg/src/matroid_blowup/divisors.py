"""Divisor classes on the blow-up V^n of an arrangement, and curve pairings.

A class is a coefficient vector over one of two bases of Pic V^n, keyed by
poset element ids:

* E-basis: ``0 -> H0``, ``x in L -> E_x``, ``y in M -> F_y``
* H-basis: ``0 -> H0``, ``x in L -> H_x``, ``y in M -> F_y``

Coefficients are ints or :class:`IntPolynomial` values in ``t``.
"""

from __future__ import annotations

from .arrangement import (
    ArrangementPoset,
    PointConfiguration,
    PreconditionError,
    build_arrangement,
    meet,
)
from .matroid import (
    contraction_polynomials,
    deletion_map,
    delete,
    is_isthmus,
    is_modular,
)
from .polynomial import IntPolynomial

E_BASIS, H_BASIS = "E", "H"


class DivisorClass:
    __slots__ = ("poset", "basis", "coeffs")

    def __init__(self, poset: ArrangementPoset, coeffs=None, basis: str = E_BASIS):
        if basis not in (E_BASIS, H_BASIS):
            raise ValueError(f"unknown basis {basis!r}")
        self.poset = poset
        self.basis = basis
        self.coeffs = {g: c for g, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def generator(cls, poset, g: int, basis: str = E_BASIS) -> "DivisorClass":
        return cls(poset, {g: 1}, basis)

    def _check(self, other: "DivisorClass"):
        if other.poset is not self.poset:
            raise ValueError("divisor classes live on different posets")
        if other.basis != self.basis:
            other = change_basis(other, self.basis)
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return DivisorClass(self.poset, out, self.basis)

    def __neg__(self):
        return DivisorClass(self.poset, {g: -c for g, c in self.coeffs.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return DivisorClass(self.poset, {g: c * scalar for g, c in self.coeffs.items()},
                            self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DivisorClass) or other.poset is not self.poset:
            return NotImplemented
        other = change_basis(other, self.basis)
        return self.coeffs == other.coeffs

    def __getitem__(self, g):
        return self.coeffs.get(g, 0)

    def evaluate(self, t) -> "DivisorClass":
        """Substitute ``t`` into polynomial coefficients."""
        return DivisorClass(
            self.poset,
            {g: (c(t) if isinstance(c, IntPolynomial) else c) for g, c in self.coeffs.items()},
            self.basis,
        )

    def mod_F(self) -> "DivisorClass":
        """Drop F generators (only meaningful in the H-basis)."""
        return DivisorClass(self.poset,
                            {g: c for g, c in self.coeffs.items() if self.poset.is_flat(g)},
                            self.basis)

    def to(self, basis: str) -> "DivisorClass":
        return change_basis(self, basis)

    def generator_name(self, g: int) -> str:
        if g == 0:
            return "H0"
        if not self.poset.is_flat(g):
            return f"F{g}"
        return f"{self.basis}{g}"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coeffs": {
                self.generator_name(g): IntPolynomial.coerce(c).to_json()
                for g, c in sorted(self.coeffs.items())
            },
        }

    def __repr__(self):
        terms = " + ".join(f"({c})*{self.generator_name(g)}" for g, c in sorted(self.coeffs.items()))
        return f"DivisorClass[{self.basis}]({terms or '0'})"


class CurveFunctional:
    """Linear functional on Pic, stored by its values on the H-basis."""

    __slots__ = ("poset", "values", "name")

    def __init__(self, poset: ArrangementPoset, values: dict, name: str = ""):
        self.poset = poset
        self.values = {g: v for g, v in values.items() if v != 0}
        self.name = name

    def __add__(self, other: "CurveFunctional") -> "CurveFunctional":
        vals = dict(self.values)
        for g, v in other.values.items():
            vals[g] = vals.get(g, 0) + v
        return CurveFunctional(self.poset, vals, f"{self.name}+{other.name}")

    def __eq__(self, other):
        return (isinstance(other, CurveFunctional) and other.poset is self.poset
                and other.values == self.values)

    def __repr__(self):
        return f"CurveFunctional({self.name or self.values})"


def gamma(poset: ArrangementPoset, x: int = 0) -> CurveFunctional:
    """Dual of H_x in the basis {H0, H_*, F_*}."""
    if not poset.is_flat(x):
        raise PreconditionError("gamma is indexed by L")
    return CurveFunctional(poset, {x: 1}, f"gamma_{x}")


def line_class(poset: ArrangementPoset) -> CurveFunctional:
    """Pull-back of a line: 1 on H0, 0 on every E and F."""
    # every H_x has H0-coefficient 1 in the E-basis
    return CurveFunctional(poset, {x: 1 for x in poset.lattice_ids}, "ell")


def h_class(poset: ArrangementPoset, x: int) -> DivisorClass:
    """H_x in the E-basis: H0 - sum_{0<y<=x, y in L} E_y - sum_{z in M, z<x} F_z."""
    coeffs = {0: 1}
    if x != 0:
        for y in poset.below(x):
            if y == 0:
                continue
            if poset.is_flat(y):
                coeffs[y] = -1
            elif y != x:
                coeffs[y] = -1
    return DivisorClass(poset, coeffs, E_BASIS)


def _e_in_h(poset: ArrangementPoset) -> dict:
    """H-basis expression of each E-basis generator; unitriangular by rank."""
    # keyed by the h_class function so substituted implementations are honoured
    key = ("e_in_h", h_class)
    if key in poset.cache:
        return poset.cache[key]
    table = {0: {0: 1}}
    for y in poset.extra_ids:
        table[y] = {y: 1}
    for x in sorted(poset.flat_ids, key=poset.rank):
        hx = h_class(poset, x)
        if hx[x] != -1 or hx[0] != 1:
            raise ValueError("H_x must be H0 - E_x - (lower terms)")
        # E_x = H0 - H_x + (H_x - H0 + E_x), the last bracket in lower generators
        expr = {0: 1, x: -1}
        for g, c in hx.coeffs.items():
            if g in (0, x):
                continue
            for h, d in table[g].items():
                expr[h] = expr.get(h, 0) + c * d
        table[x] = {g: c for g, c in expr.items() if c != 0}
    poset.cache[key] = table
    return table


def change_basis(D: DivisorClass, target: str) -> DivisorClass:
    if D.basis == target:
        return D
    poset = D.poset
    out = {}
    if target == H_BASIS:
        table = _e_in_h(poset)
        for g, c in D.coeffs.items():
            for h, d in table[g].items():
                out[h] = out.get(h, 0) + c * d
    else:
        for g, c in D.coeffs.items():
            if g == 0 or not poset.is_flat(g):
                out[g] = out.get(g, 0) + c
            else:
                for h, d in h_class(poset, g).coeffs.items():
                    out[h] = out.get(h, 0) + c * d
    return DivisorClass(poset, out, target)


def pair(functional: CurveFunctional, D: DivisorClass):
    """Intersection number of a curve functional with a divisor class."""
    if functional.poset is not D.poset:
        raise ValueError("functional and class live on different posets")
    Dh = change_basis(D, H_BASIS)
    total = 0
    for g, v in functional.values.items():
        total = total + v * Dh[g]
    return total


def build_S(poset: ArrangementPoset) -> DivisorClass:
    """S(t) = t^r(1) H0 - sum_{x in L, x != 0} t^(r(1)-r(x)) E_x, in the E-basis."""
    r1 = poset.rank_of_top
    coeffs = {0: IntPolynomial.monomial(r1)}
    for x in poset.flat_ids:
        coeffs[x] = IntPolynomial.monomial(r1 - poset.rank(x), -1)
    return DivisorClass(poset, coeffs, E_BASIS)


def build_Sbar(poset: ArrangementPoset) -> DivisorClass:
    """S-bar(t) = sum_{x in L} p(L/x, t) H_x, in the H-basis."""
    return DivisorClass(poset, dict(contraction_polynomials(poset)), H_BASIS)


def canonical_class(poset: ArrangementPoset, n: int) -> DivisorClass:
    r1 = poset.rank_of_top
    if n <= r1:
        raise PreconditionError(f"need n > r(1) = {r1}, got n = {n}")
    coeffs = {0: -(n + 1)}
    for x in list(poset.flat_ids) + list(poset.extra_ids):
        coeffs[x] = n - poset.rank(x)
    return DivisorClass(poset, coeffs, E_BASIS)


def beta_divisor(poset: ArrangementPoset, n: int) -> DivisorClass:
    """H0 + (n - r(1)) H_1 + omega, in the E-basis."""
    omega = canonical_class(poset, n)
    h1 = h_class(poset, poset.top)
    base = DivisorClass.generator(poset, 0)
    return base + h1 * (n - poset.rank_of_top) + omega


def deletion_pushforward(D: DivisorClass, e: int, deleted: ArrangementPoset | None = None):
    """Push a class forward along V_L -> V_{L-e}, modulo F.

    Returns ``(class, deleted_poset)``; the class is in the H-basis of L - e.
    """
    poset = D.poset
    if deleted is None:
        deleted = delete(poset, e)
    xmap = deletion_map(poset, e, deleted)
    Dh = change_basis(D, H_BASIS).mod_F()
    out = {}
    for x, c in Dh.coeffs.items():
        tgt = xmap[x]
        out[tgt] = out.get(tgt, 0) + c
    return DivisorClass(deleted, out, H_BASIS), deleted


def lower_interval(poset: ArrangementPoset, x: int) -> ArrangementPoset:
    """The arrangement [0, x]: the configuration restricted to the points in x."""
    cfg = poset.config
    atoms = poset[x].atoms
    idx = [i for i, l in enumerate(cfg.labels) if l in atoms]
    sub = PointConfiguration(cfg.field, cfg.ambient_dim,
                             tuple(cfg.points[i] for i in idx),
                             tuple(cfg.labels[i] for i in idx))
    return build_arrangement(sub)


def modular_restriction(D: DivisorClass, x: int, sub: ArrangementPoset | None = None,
                        sub_dim: int | None = None, ambient_dim: int | None = None):
    """Restrict a class to V_[0,x] for modular ``x``.

    Returns ``(class, sub_poset)`` with the class in the E-basis of [0, x].
    ``sub_dim``/``ambient_dim``, when both given, are checked against
    ``r(x) < sub_dim <= ambient_dim - r(1) + r(x)``.
    """
    poset = D.poset
    if not is_modular(poset, x):
        raise PreconditionError(f"element {x} is not modular")
    if sub_dim is not None and ambient_dim is not None:
        rx, r1 = poset.rank(x), poset.rank_of_top
        if not (rx < sub_dim <= ambient_dim - r1 + rx):
            raise PreconditionError("sub-variety dimension out of range")
    if sub is None:
        sub = lower_interval(poset, x)
    De = change_basis(D, E_BASIS)
    out = {}
    for g, c in De.coeffs.items():
        if g == 0:
            tgt = 0
        elif poset.leq(g, x):
            tgt = sub.id_of_span(poset[g].span)
            if tgt is None:
                raise ValueError(f"element {g} <= x has no counterpart in [0, x]")
        else:
            continue
        out[tgt] = out.get(tgt, 0) + c
    return DivisorClass(sub, out, E_BASIS), sub


def restriction_of_H(poset: ArrangementPoset, x: int, z: int) -> int:
    """Index of x ∧ z, the H-generator that H_z restricts to on V_[0,x]."""
    return meet(poset, x, z)


__all__ = [
    "DivisorClass", "CurveFunctional", "gamma", "line_class", "h_class", "change_basis",
    "pair", "build_S", "build_Sbar", "canonical_class", "beta_divisor",
    "deletion_pushforward", "modular_restriction", "lower_interval", "is_isthmus",
    "E_BASIS", "H_BASIS",
]
