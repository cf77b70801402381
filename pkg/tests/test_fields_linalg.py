from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matroid_blowup.fields import QQ, Field, GFElement
from matroid_blowup.linalg import Subspace, nullspace, rref


def test_rational_parsing():
    assert QQ("3/4") == Fraction(3, 4)
    assert QQ(Fraction(1, 3)) * 3 == 1


def test_prime_field_arithmetic():
    F = Field("GF(5)")
    assert F("1/2") == 3
    assert F(3) * F(2) == 1
    assert F(2) / F(3) == F(4)
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)
    assert Field("GF:5") == F
    assert F.tag == "GF(5)"


def test_bad_field_tags():
    with pytest.raises(ValueError):
        Field("GF(4)")
    with pytest.raises(ValueError):
        Field("R")
    with pytest.raises(ValueError):
        Field("GF(3)")("1/3")


def test_mixing_fields_rejected():
    with pytest.raises(ValueError):
        GFElement(1, 2) + GFElement(1, 3)


def test_rref_is_canonical():
    a, pa = rref([[2, 4, 6], [1, 1, 1]], QQ)
    b, pb = rref([[1, 1, 1], [0, 2, 4], [1, 3, 5]], QQ)
    assert a == b and pa == pb == (0, 1)


def test_subspace_intersection_of_two_planes():
    U = Subspace.span([[1, 0, 0, 0], [0, 1, 0, 0]], 4, QQ)
    W = Subspace.span([[0, 1, 0, 0], [0, 0, 1, 0]], 4, QQ)
    assert U.intersect(W) == Subspace.span([[0, 1, 0, 0]], 4, QQ)
    X = Subspace.span([[0, 0, 0, 1]], 4, QQ)
    assert U.intersect(X).is_empty()


def test_nullspace_annihilates():
    rows = [[QQ(1), QQ(2), QQ(3)]]
    for v in nullspace(rows, 3, QQ):
        assert sum(a * b for a, b in zip(rows[0], v)) == 0


vec = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@given(st.lists(vec, min_size=1, max_size=4), st.lists(vec, min_size=1, max_size=4))
def test_intersection_is_contained_in_both(a, b):
    U, W = Subspace.span(a, 4, QQ), Subspace.span(b, 4, QQ)
    I = U.intersect(W)
    assert I <= U and I <= W
    # dimension formula for linear subspaces
    assert I.rank == U.rank + W.rank - U.join(W).rank


@given(st.lists(vec, min_size=1, max_size=4), st.randoms())
def test_span_independent_of_row_order(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert Subspace.span(rows, 4, QQ) == Subspace.span(shuffled, 4, QQ)
