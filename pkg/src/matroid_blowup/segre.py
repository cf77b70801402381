"""Segre classes of the base scheme X(m, n) ⊂ P^n and the numbers s_0(m, n).

The linear system of degree-m^r(1) hypersurfaces with multiplicity
m^(r(1)-r(x)) along each flat x is resolved on V^n, where its fixed part is
the divisor ``D(m) = m^r(1) H0 - S̄(m)``. The Segre class of X(m, n) is then
the pushforward of ``D - D^2 + D^3 - ...``, read off degree by degree by
pairing powers of D with powers of H0.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .arrangement import PreconditionError
from .degree import BlowupTower, SelfIntersectionOnlyWarning, degree_d
from .divisors import E_BASIS, DivisorClass, build_Sbar, change_basis
from .matroid import characteristic_polynomial, is_nice


@dataclass(frozen=True)
class SegreVector:
    """``components[k]`` is the degree of the dimension-k part of s(X(m,n), P^n)."""

    m: int
    n: int
    components: tuple
    residual: DivisorClass

    @property
    def s0(self) -> int:
        return self.components[0]

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n,
                "components": [str(c) for c in self.components],
                "residual": self.residual.to_json()}


def _flag_not_nice(poset):
    if not is_nice(poset):
        warnings.warn("lattice is not nice; X(m, n) need not be cut out as assumed",
                      SelfIntersectionOnlyWarning, stacklevel=3)


def residual_divisor(tower: BlowupTower, m: int) -> DivisorClass:
    """D(m) = m^r(1) H0 - S̄(m), in the E-basis."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    poset = tower.poset
    _flag_not_nice(poset)
    sbar = change_basis(build_Sbar(poset).evaluate(m), E_BASIS)
    return DivisorClass.generator(poset, 0) * m ** poset.rank_of_top - sbar


def segre_class(tower: BlowupTower, m: int) -> SegreVector:
    D = residual_divisor(tower, m)
    n = tower.n
    H0 = DivisorClass.generator(tower.poset, 0)
    comps = []
    for k in range(n + 1):
        j = n - k
        if j == 0:
            comps.append(0)
            continue
        sign = -1 if (j - 1) % 2 else 1
        comps.append(sign * tower.integrate([(H0, k), (D, j)]))
    return SegreVector(m, n, tuple(comps), D)


def fulton_degree_identity(tower: BlowupTower, m: int):
    """Both sides of d = (m^r)^n - ∫ (1 + m^r H)^n ∩ s(X, P^n).

    Returns ``(lhs, rhs)``; the left side comes from the degree engine's
    S̄(m)^n, the right side from the Segre vector.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SelfIntersectionOnlyWarning)
        lhs = degree_d(tower, m)
        s = segre_class(tower, m)
    n = tower.n
    deg = m ** tower.poset.rank_of_top
    rhs = deg ** n - sum(comb(n, k) * deg ** k * s.components[k] for k in range(n + 1))
    return lhs, rhs


def fulton_degree_identity_check(tower: BlowupTower, m: int) -> bool:
    lhs, rhs = fulton_degree_identity(tower, m)
    return lhs == rhs


def segre_congruence_check(tower: BlowupTower, m: int) -> bool:
    """p(L, m) ≡ m^r(L) - s_0(m, n) (mod n), for prime n > r(1)."""
    n = tower.n
    if not _is_prime(n):
        raise PreconditionError(f"n = {n} is not prime")
    poset = tower.poset
    p = characteristic_polynomial(poset)(m)
    s0 = segre_class(tower, m).s0
    return (p - (m ** poset.rank_of_top - s0)) % n == 0


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
