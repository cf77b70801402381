"""Property tests on random rational configurations."""

from hypothesis import assume, given, settings, strategies as st

from matroid_blowup import (
    BlowupTower,
    ConfigurationError,
    PointConfiguration,
    build_arrangement,
    characteristic_polynomial,
    delete,
    is_isthmus,
    is_nice,
    moebius,
    pair,
    gamma,
    build_S,
    degree_d,
)
from matroid_blowup.polynomial import IntPolynomial, T
from matroid_blowup.segre import fulton_degree_identity

vectors = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3),
                   min_size=1, max_size=5)


def poset_of(vecs):
    try:
        return build_arrangement(PointConfiguration.from_vectors(vecs))
    except ConfigurationError:
        assume(False)


@settings(max_examples=60, deadline=None)
@given(vectors)
def test_moebius_defining_identity(vecs):
    P = poset_of(vecs)
    for x in P.lattice_ids:
        for z in P.lattice_ids:
            if P.leq(x, z):
                total = sum(moebius(P, x, y) for y in P.interval(x, z))
                assert total == (1 if x == z else 0)
            else:
                assert moebius(P, x, z) == 0


@settings(max_examples=60, deadline=None)
@given(vectors)
def test_contraction_polynomials_sum_to_power(vecs):
    P = poset_of(vecs)
    total = IntPolynomial()
    for x in P.lattice_ids:
        total = total + characteristic_polynomial(P, x)
    assert total == IntPolynomial.monomial(P.rank_of_top)


@settings(max_examples=40, deadline=None)
@given(vectors)
def test_deletion_contraction(vecs):
    P = poset_of(vecs)
    p = characteristic_polynomial(P)
    for e in P.atom_ids:
        pd = characteristic_polynomial(delete(P, e))
        if is_isthmus(P, e):
            assert p == (T - 1) * pd
        else:
            assert p == pd - characteristic_polynomial(P, e)


@settings(max_examples=40, deadline=None)
@given(vectors)
def test_gamma_pairing_is_characteristic_polynomial(vecs):
    P = poset_of(vecs)
    S = build_S(P)
    for x in P.lattice_ids:
        assert pair(gamma(P, x), S) == characteristic_polynomial(P, x)


@settings(max_examples=15, deadline=None)
@given(vectors, st.integers(1, 3))
def test_segre_degree_identity_on_nice_configs(vecs, m):
    P = poset_of(vecs)
    assume(is_nice(P))
    tower = BlowupTower(P, P.rank_of_top + 1)
    lhs, rhs = fulton_degree_identity(tower, m)
    assert lhs == rhs
    assert degree_d(tower, 1) == (1 if P.rank_of_top == 0 else 0)
