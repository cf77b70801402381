import pytest

from matroid_blowup import (
    Graph,
    PreconditionError,
    ResourceLimitError,
    arrangement_of_graph,
    beta_invariant,
    build_arrangement,
    characteristic_polynomial,
    chromatic_polynomial,
    contract,
    delete,
    has_minor,
    is_isthmus,
    is_modular,
    is_nice,
    moebius,
    signed_beta,
)
from matroid_blowup.graphs import all_graphs
from matroid_blowup.polynomial import IntPolynomial, T
from matroid_blowup.verifier.corpus import uniform_configuration

from conftest import lines_by_size


def test_moebius_values(k4):
    assert moebius(k4, 0, 0) == 1
    assert all(moebius(k4, 0, a) == -1 for a in k4.atom_ids)
    assert moebius(k4, 0, k4.top) == -6
    with pytest.raises(PreconditionError):
        moebius(k4, 0, k4.extra_ids[0])


def test_named_characteristic_polynomials(k3, l4, f7):
    assert characteristic_polynomial(k3) == (T - 1) * (T - 2)
    assert characteristic_polynomial(l4) == T ** 2 - 4 * T + 3
    assert characteristic_polynomial(f7) == T ** 3 - 7 * T ** 2 + 14 * T - 8


def test_chromatic_polynomials():
    assert chromatic_polynomial(Graph.complete(4)) == T * (T - 1) * (T - 2) * (T - 3)
    assert chromatic_polynomial(Graph(4, ())) == IntPolynomial.monomial(4)
    assert chromatic_polynomial(Graph.complete(3))(3) == 6


def test_beta_examples(k3):
    assert beta_invariant(arrangement_of_graph(Graph(2, ((0, 1),)))) == 1
    assert beta_invariant(arrangement_of_graph(Graph(4, ((0, 1), (2, 3))))) == 0
    assert beta_invariant(k3) == 1
    assert beta_invariant(arrangement_of_graph(Graph(3, ()))) == 0
    # B(x) = (-1)^(r(1)-r(x)) beta(L/x)
    for x in k3.lattice_ids:
        assert signed_beta(k3, x) == (-1) ** (2 - k3.rank(x)) * beta_invariant(k3, x)


def test_modularity(k4):
    assert all(is_modular(k4, a) for a in k4.atom_ids)
    assert is_modular(k4, k4.top) and is_modular(k4, 0)
    assert not any(is_modular(k4, x) for x in lines_by_size(k4, 2))
    assert all(is_modular(k4, x) for x in lines_by_size(k4, 3))


def test_contraction_and_deletion(k3):
    a = k3.atom_ids[0]
    c = contract(k3, a)
    assert len(c.atom_ids) == 1 and characteristic_polynomial(c) == T - 1
    d = delete(k3, a)
    assert characteristic_polynomial(d) == (T - 1) ** 2
    top = contract(k3, k3.top)
    assert len(top) == 1 and characteristic_polynomial(top) == 1
    assert not is_isthmus(k3, a)
    path = arrangement_of_graph(Graph(3, ((0, 1), (1, 2))))
    assert all(is_isthmus(path, e) for e in path.atom_ids)
    with pytest.raises(PreconditionError):
        delete(k3, k3.top)


def test_contraction_merges_parallel_points(k4):
    a = k4.atom_ids[0]
    c = contract(k4, a)
    # K4 / e is a triangle with two doubled edges; the simplification has 3 points
    assert len(c.atom_ids) == 3
    assert characteristic_polynomial(c) == characteristic_polynomial(k4, a)


def test_minors(l4, f7, k4):
    assert has_minor(l4, "L4")
    assert has_minor(f7, "F7")
    assert not has_minor(k4, "L4")
    assert has_minor(build_arrangement(uniform_configuration(3, 5)), "L4")
    with pytest.raises(ResourceLimitError):
        has_minor(arrangement_of_graph(Graph.complete(5)), "L4", max_points=6)


def test_niceness(l4, f7):
    assert characteristic_polynomial(l4)(2) == -1
    assert characteristic_polynomial(f7)(3) < 0
    assert not is_nice(l4) and not is_nice(f7)
    assert all(is_nice(arrangement_of_graph(g)) for g in all_graphs(5))


def test_nice_iff_no_small_minor_on_small_configs(l4, f7, k4):
    for P in (l4, f7, k4, build_arrangement(uniform_configuration(3, 5))):
        assert is_nice(P) == (not has_minor(P, "L4") and not has_minor(P, "F7"))
