"""Exact identity checks over a corpus.

Each check compares two independently computed sides. Functions from the
library are looked up through their modules at call time, so a patched
implementation (see :mod:`.mutations`) is the one exercised.
"""

from __future__ import annotations

from typing import Iterable

from .. import degree as dg
from .. import divisors as dv
from .. import matroid as mt
from ..arrangement import meet
from ..polynomial import IntPolynomial, T
from .oracles import chromatic_by_deletion_contraction, chromatic_by_enumeration
from .report import IdentityReport

IDENTITIES = (
    "moebius_recursion",
    "gamma_pairs_moebius",
    "gamma_pairs_S_is_contraction_polynomial",
    "geometric_contraction_polynomial",
    "S_reduces_to_Sbar_mod_F",
    "line_class_is_sum_of_gammas",
    "line_pairs_S_to_top_power",
    "contraction_polynomials_sum_to_top_power",
    "deletion_contraction",
    "deletion_pushforward_of_S",
    "deletion_pullback_of_gamma0",
    "modular_restriction_of_S",
    "modular_interval_sum",
    "modular_factorization",
    "beta_from_canonical_class",
    "beta_divisor_deletion_pushforward",
    "beta_divisor_modular_restriction",
    "beta_divisor_pairs_signed_beta",
    "signed_beta_upper_sum",
    "beta_deletion_contraction",
    "modular_signed_beta_sum",
    "modular_beta_decomposition",
    "hyperplane_top_powers",
    "high_hyperplane_powers_vanish",
    "chromatic_by_intersection",
    "chromatic_oracles_agree",
    "niceness_matches_nonnegativity",
)


def interval_polynomial(poset, y: int, x: int) -> IntPolynomial:
    """Characteristic polynomial of the interval [y, x] of L."""
    rx = poset.rank(x)
    row = mt.moebius_row(poset, y)
    out = IntPolynomial()
    for w in poset.interval(y, x):
        out = out + IntPolynomial.monomial(rx - poset.rank(w), row.get(w, 0))
    return out


def _modular_elements(poset):
    return [x for x in poset.lattice_ids if mt.is_modular(poset, x)]


class _Ctx:
    """Per-entry context that fills counterexample payloads."""

    def __init__(self, report: IdentityReport, entry):
        self.report = report
        self.entry = entry
        self.fp = entry.poset.fingerprint()

    def check(self, name, lhs, rhs, **where) -> bool:
        return self.report.check(name, lhs == rhs, entry=self.entry.name,
                                 fingerprint=self.fp, lhs=lhs, rhs=rhs, **where)


# -- lattice-level identities ------------------------------------------------

def check_moebius(ctx: _Ctx):
    P = ctx.entry.poset
    for x in P.lattice_ids:
        row = mt.moebius_row(P, x)
        for z in P.lattice_ids:
            if not P.leq(x, z):
                continue
            s = sum(row.get(y, 0) for y in P.interval(x, z))
            ctx.check("moebius_recursion", s, 1 if x == z else 0, x=x, z=z)
            if z != x:
                ctx.check("gamma_pairs_moebius",
                          dv.pair(dv.gamma(P, x), dv.DivisorClass.generator(P, z)),
                          -mt.moebius(P, x, z), x=x, z=z)


def check_S(ctx: _Ctx):
    P = ctx.entry.poset
    S = dv.build_S(P)
    Sbar = dv.build_Sbar(P)
    ell = dv.line_class(P)
    for x in P.lattice_ids:
        p = mt.characteristic_polynomial(P, x)
        ctx.check("gamma_pairs_S_is_contraction_polynomial",
                  dv.pair(dv.gamma(P, x), S), p, x=x)
        ctx.check("geometric_contraction_polynomial",
                  mt.characteristic_polynomial(mt.contract(P, x)), p, x=x)
    ctx.check("S_reduces_to_Sbar_mod_F",
              dv.change_basis(S, dv.H_BASIS).mod_F().coeffs, Sbar.coeffs)
    total = None
    for x in P.lattice_ids:
        g = dv.gamma(P, x)
        total = g if total is None else total + g
    ctx.check("line_class_is_sum_of_gammas", total.values, ell.values)
    r1 = P.rank_of_top
    ctx.check("line_pairs_S_to_top_power", dv.pair(ell, S), IntPolynomial.monomial(r1))
    acc = IntPolynomial()
    for x in P.lattice_ids:
        acc = acc + mt.characteristic_polynomial(P, x)
    ctx.check("contraction_polynomials_sum_to_top_power", acc, IntPolynomial.monomial(r1))


def check_deletions(ctx: _Ctx):
    P = ctx.entry.poset
    if not P.atom_ids:
        return
    S = dv.build_S(P)
    n = P.rank_of_top + 1
    wt = dv.beta_divisor(P, n)
    p = mt.characteristic_polynomial(P)
    for e in P.atom_ids:
        D = mt.delete(P, e)
        pd = mt.characteristic_polynomial(D)
        pc = mt.characteristic_polynomial(P, e)
        isth = mt.is_isthmus(P, e)
        where = dict(e=e, isthmus=isth)
        if isth:
            ctx.check("deletion_contraction", p, (T - 1) * pd, **where)
        else:
            ctx.check("deletion_contraction", p, pd - pc, **where)
        push, _ = dv.deletion_pushforward(S, e, D)
        want = dv.build_Sbar(D) * (T if isth else 1)
        ctx.check("deletion_pushforward_of_S", push.coeffs, want.coeffs, **where)
        g0d = dv.gamma(D, 0)
        g = dv.gamma(P, 0) + dv.gamma(P, e)
        for x in P.lattice_ids:
            Hx = dv.DivisorClass.generator(P, x, dv.H_BASIS)
            lhs = dv.pair(g0d, dv.deletion_pushforward(Hx, e, D)[0])
            ctx.check("deletion_pullback_of_gamma0", lhs, dv.pair(g, Hx), x=x, **where)
        # beta divisor, modulo F
        pw, _ = dv.deletion_pushforward(wt, e, D)
        drop = P.rank_of_top - D.rank_of_top
        rhs = dv.change_basis(dv.beta_divisor(D, n), dv.H_BASIS).mod_F() \
            - dv.DivisorClass.generator(D, D.top, dv.H_BASIS) * drop
        ctx.check("beta_divisor_deletion_pushforward", pw.coeffs, rhs.mod_F().coeffs, **where)
        if not isth:
            ctx.check("beta_deletion_contraction", mt.beta_invariant(P),
                      mt.beta_invariant(D) + mt.beta_invariant(P, e), **where)


def check_modular(ctx: _Ctx):
    P = ctx.entry.poset
    r1 = P.rank_of_top
    S = dv.build_S(P)
    Sbar = dv.build_Sbar(P)
    wt = dv.beta_divisor(P, r1 + 1)
    B = {z: mt.signed_beta(P, z) for z in P.lattice_ids}
    for x in _modular_elements(P):
        rx = P.rank(x)
        sub = dv.lower_interval(P, x)
        shift = IntPolynomial.monomial(r1 - rx)
        iS, _ = dv.modular_restriction(S, x, sub)
        ctx.check("modular_restriction_of_S", iS, dv.build_S(sub) * shift, x=x, part="S")
        iSb, _ = dv.modular_restriction(Sbar, x, sub)
        ctx.check("modular_restriction_of_S",
                  dv.change_basis(iSb, dv.H_BASIS).mod_F(),
                  dv.build_Sbar(sub) * shift, x=x, part="Sbar")
        iw, _ = dv.modular_restriction(wt, x, sub)
        rhs = dv.beta_divisor(sub, rx + 1) - dv.h_class(sub, sub.top) * (r1 - rx)
        ctx.check("beta_divisor_modular_restriction", iw, rhs, x=x)
        by_meet = {}
        for z in P.lattice_ids:
            by_meet.setdefault(meet(P, z, x), []).append(z)
        for y in P.interval(0, x):
            zs = by_meet.get(y, [])
            lhs = IntPolynomial()
            for z in zs:
                lhs = lhs + mt.characteristic_polynomial(P, z)
            ctx.check("modular_interval_sum", lhs, shift * interval_polynomial(P, y, x),
                      x=x, y=y)
            if y != x:
                ipol = interval_polynomial(P, y, x)
                beta_yx = (-1) ** (rx - P.rank(y) - 1) * ipol.derivative()(1)
                ctx.check("modular_signed_beta_sum",
                          (-1) ** (rx - P.rank(y)) * beta_yx, sum(B[z] for z in zs),
                          x=x, y=y)
        mu0 = mt.moebius_row(P, 0)
        fac = IntPolynomial()
        for y in by_meet.get(0, []):
            fac = fac + IntPolynomial.monomial(r1 - rx - P.rank(y), mu0[y])
        ctx.check("modular_factorization", mt.characteristic_polynomial(P),
                  interval_polynomial(P, 0, x) * fac, x=x)
        if x != 0:
            ip0 = interval_polynomial(P, 0, x)
            beta0x = (-1) ** (rx - 1) * ip0.derivative()(1)
            ctx.check("modular_beta_decomposition", mt.beta_invariant(P),
                      (-1) ** (r1 - rx) * beta0x * sum(mu0[y] for y in by_meet.get(0, [])),
                      x=x)


def check_beta(ctx: _Ctx):
    P = ctx.entry.poset
    r1 = P.rank_of_top
    beta = mt.beta_invariant(P)
    if P.atom_ids:
        for n in (r1 + 1, r1 + 2):
            om = dv.canonical_class(P, n)
            ctx.check("beta_from_canonical_class", beta,
                      (-1) ** r1 * (1 + dv.pair(dv.gamma(P, 0), om)), n=n)
    wt = dv.beta_divisor(P, r1 + 1)
    B = {x: mt.signed_beta(P, x) for x in P.lattice_ids}
    for x in P.lattice_ids:
        ctx.check("beta_divisor_pairs_signed_beta", dv.pair(dv.gamma(P, x), wt), B[x], x=x)
        ctx.check("beta_divisor_pairs_signed_beta",
                  (-1) ** (r1 - P.rank(x)) * mt.beta_invariant(P, x), B[x], x=x, part="sign")
    for y in P.lattice_ids:
        ctx.check("signed_beta_upper_sum",
                  sum(B[x] for x in P.above(y) if P.is_flat(x)), P.rank(y) - r1, y=y)


def check_degrees(ctx: _Ctx, max_size: int = 80):
    """H0^n = 1, H_x^n = 0, and H_x^k kills everything once k >= n + 1 - r(x)."""
    P = ctx.entry.poset
    r1 = P.rank_of_top
    H0 = dv.DivisorClass.generator(P, 0)
    for n in (r1 + 1, r1 + 2):
        tower = dg.BlowupTower(P, n)
        ctx.check("hyperplane_top_powers", tower.integrate([(H0, n)]), 1, n=n, x=0)
        for x in P.flat_ids:
            Hx = dv.h_class(P, x)
            ctx.check("hyperplane_top_powers", tower.integrate([(Hx, n)]), 0, n=n, x=x)
        if len(P) > max_size or n != r1 + 1:
            continue
        for x in P.flat_ids:
            k0 = n + 1 - P.rank(x)
            Hx = dv.h_class(P, x)
            for k in range(max(k0, 1), n):
                for g in range(len(P)):
                    G = dv.DivisorClass.generator(P, g)
                    ctx.check("high_hyperplane_powers_vanish",
                              tower.integrate([(Hx, k), (G, n - k)]), 0, n=n, x=x, k=k, g=g)


def check_chromatic(ctx: _Ctx, m_max: int = 4):
    g = ctx.entry.graph
    if g is None:
        return
    P = ctx.entry.poset
    c = g.components()
    S = dv.build_S(P)
    g0 = dv.gamma(P, 0)
    dc = chromatic_by_deletion_contraction(g)
    geo = IntPolynomial.monomial(c) * dv.pair(g0, S)
    ctx.check("chromatic_oracles_agree", dc, geo, part="polynomial")
    for m in range(m_max + 1):
        enum = chromatic_by_enumeration(g, m)
        ctx.check("chromatic_by_intersection", m ** c * dv.pair(g0, S.evaluate(m)), enum, m=m)
        ctx.check("chromatic_oracles_agree", dc(m), enum, m=m)


def check_niceness(ctx: _Ctx, m_max: int = 10):
    P = ctx.entry.poset
    direct = all(p(m) >= 0 for p in mt.contraction_polynomials(P).values()
                 for m in range(1, m_max + 1))
    ctx.check("niceness_matches_nonnegativity", mt.is_nice(P), direct)


CHECKS = (check_moebius, check_S, check_deletions, check_modular, check_beta,
          check_degrees, check_chromatic, check_niceness)


def run_identity_suite(corpus: Iterable, checks=CHECKS) -> IdentityReport:
    """Evaluate every identity on every applicable corpus entry."""
    report = IdentityReport()
    for name in IDENTITIES:
        report.result(name)
    for entry in corpus:
        ctx = _Ctx(report, entry)
        for chk in checks:
            chk(ctx)
    return report
