"""Seeded bugs used to show that the identity suite can fail.

Each mutation is a context manager that patches one library function.
Posets cache derived data, so always build a fresh corpus inside the
context.
"""

from __future__ import annotations

from contextlib import contextmanager
from math import comb
from unittest import mock

from .. import degree as dg
from .. import divisors as dv
from .. import matroid as mt
from .corpus import CorpusConfig, build_corpus
from .identities import run_identity_suite


@contextmanager
def drop_f_term():
    """h_class forgets the first F generator below x."""
    original = dv.h_class

    def mutated(poset, x):
        D = original(poset, x)
        fs = sorted(g for g in D.coeffs if g != 0 and not poset.is_flat(g))
        if fs:
            coeffs = dict(D.coeffs)
            del coeffs[fs[0]]
            return dv.DivisorClass(poset, coeffs, D.basis)
        return D

    with mock.patch.object(dv, "h_class", mutated):
        yield


@contextmanager
def moebius_sign_flip():
    """Flip the sign of mu(x, z) whenever r(z) - r(x) >= 2."""
    original = mt.moebius_row

    def mutated(poset, x):
        row = original(poset, x)
        rx = poset.rank(x)
        return {z: (-v if poset.rank(z) - rx >= 2 else v) for z, v in row.items()}

    with mock.patch.object(mt, "moebius_row", mutated):
        yield


@contextmanager
def pushforward_index_error():
    """Off-by-one in the binomial of the blow-up pushforward."""

    def mutated(k, c):
        return (-1) ** (c - 1) * comb(k, c - 1)

    with mock.patch.object(dg, "pushforward_weight", mutated):
        yield


MUTATIONS = {
    "drop_f_term": drop_f_term,
    "moebius_sign_flip": moebius_sign_flip,
    "pushforward_index_error": pushforward_index_error,
}


def mutation_corpus() -> list:
    """Small corpus with M elements and nontrivial ranks; rebuilt on each call."""
    cfg = CorpusConfig(max_vertices=4, random_configs=2, named=False)
    return [e for e in build_corpus(cfg) if e.graph is None or e.graph.edges]


def run_mutation(name: str, corpus_factory=mutation_corpus):
    """Run the identity suite under one mutation on a freshly built corpus."""
    with MUTATIONS[name]():
        return run_identity_suite(corpus_factory())
