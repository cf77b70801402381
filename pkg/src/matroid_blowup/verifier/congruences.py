"""Congruences between d(m, n), s_0(m, n) and the characteristic polynomial."""

from __future__ import annotations

import warnings
from typing import Iterable

from .. import degree as dg
from ..graphs import Graph
from ..matroid import characteristic_polynomial, is_nice
from ..segre import _is_prime, fulton_degree_identity, segre_class
from .corpus import graph_entry
from .report import IdentityReport

CONGRUENCES = (
    "degree_congruence",
    "degree_residue",
    "segre_congruence",
    "segre_degree_identity",
    "fermat_step",
)


def default_towers() -> list:
    return [graph_entry(Graph.complete(3)), graph_entry(Graph.complete(4))]


def congruence_scan(entries: Iterable, m_range=range(1, 6), n_max: int = 7,
                    non_prime: bool = True) -> IdentityReport:
    """Check the mod-n congruences on every nice entry for r(1) < n <= n_max.

    Prime n is asserted; composite n is only recorded as an observation
    (``degree_mod_composite``), together with whether it happened to hold.
    """
    report = IdentityReport()
    for name in CONGRUENCES:
        report.result(name)
    for entry in entries:
        P = entry.poset
        if not is_nice(P):
            report.observe("skipped_not_nice", entry=entry.name)
            continue
        r1 = P.rank_of_top
        p = characteristic_polynomial(P)
        fp = P.fingerprint()
        for n in range(r1 + 1, n_max + 1):
            tower = dg.BlowupTower(P, n)
            prime = _is_prime(n)
            for m in m_range:
                pm = p(m)
                where = dict(entry=entry.name, fingerprint=fp, m=m, n=n)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", dg.SelfIntersectionOnlyWarning)
                    d, rhs = fulton_degree_identity(tower, m)
                    s0 = segre_class(tower, m).s0
                report.check("segre_degree_identity", d == rhs, lhs=d, rhs=rhs, **where)
                if prime:
                    report.check("degree_congruence", (d - pm) % n == 0,
                                 d=d, p=pm, **where)
                    if n > pm:
                        report.check("degree_residue", d % n == pm, residue=d % n, p=pm,
                                     **where)
                    report.check("segre_congruence", (pm - (m ** r1 - s0)) % n == 0,
                                 s0=s0, p=pm, **where)
                    report.check("fermat_step", (m ** r1) ** n % n == m ** r1 % n, **where)
                elif non_prime:
                    report.observe("degree_mod_composite", holds=(d - pm) % n == 0,
                                   d=d, p=pm, residue=d % n, **where)
    return report
