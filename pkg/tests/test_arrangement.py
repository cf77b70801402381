from itertools import combinations

import pytest

from matroid_blowup import (
    ConfigurationError,
    Graph,
    PointConfiguration,
    PreconditionError,
    arrangement_of_graph,
    build_arrangement,
    build_flat_lattice,
    embed_graph,
    meet_join,
)
from matroid_blowup.arrangement import join, meet
from matroid_blowup.fields import Field
from matroid_blowup.graphs import all_graphs
from matroid_blowup.linalg import Subspace

from conftest import lines_by_size


def test_triangle_points_are_collinear():
    cfg = embed_graph(Graph.complete(3))
    assert cfg.ambient_dim == 3
    assert cfg.rank == 2


def test_edgeless_graph_has_trivial_lattice():
    P = arrangement_of_graph(Graph(4, ()))
    assert len(P) == 1 and P.top == 0 and P.rank_of_top == 0


def test_k4_line_census(k4):
    assert len(lines_by_size(k4, 3)) == 4
    assert len(lines_by_size(k4, 2)) == 3
    assert len(k4.atom_ids) == 6
    assert len(k4.lattice_ids) == 15
    assert len(k4.extra_ids) == 3
    assert all(k4.rank(y) == 1 for y in k4.extra_ids)


def test_k3_lattice(k3):
    assert len(k3) == 5 and not k3.extra_ids
    assert [len(v) for v in k3.by_rank.values()] == [1, 3, 1]


def test_single_point():
    P = build_arrangement(PointConfiguration.from_vectors([[1, 2]]))
    assert len(P) == 2 and P.rank_of_top == 1


def test_chain_has_no_extras():
    P = build_arrangement(PointConfiguration.from_vectors([[1, 0, 0]]))
    assert not P.extra_ids
    assert build_flat_lattice(P.config).fingerprint() == P.fingerprint()


def test_k4_diagonal_points_depend_on_field():
    gf2 = arrangement_of_graph(Graph.complete(4), field=Field("GF(2)"))
    # in characteristic two the three diagonal points coincide
    assert len(gf2.extra_ids) == 1


def test_meet_and_join(k3, k4):
    a, b = k3.atom_ids[:2]
    assert meet(k3, a, b) == 0
    assert join(k3, a, b) == k3.top
    x5, x6 = lines_by_size(k4, 2)[:2]
    assert meet(k4, x5, x6) == 0
    inter = k4[x5].span.intersect(k4[x6].span)
    assert k4.id_of_span(inter) in k4.extra_ids
    with pytest.raises(PreconditionError):
        meet_join(k4, k4.extra_ids[0], x5)


def test_intersection_closure(k4):
    spans = [k4[x].span for x in range(1, len(k4))]
    for a, b in combinations(spans, 2):
        c = a.intersect(b)
        if not c.is_empty():
            assert k4.id_of_span(c) is not None


def test_order_relation(k4):
    for x in range(len(k4)):
        assert k4.leq(0, x) and k4.leq(x, k4.top)
        for z in k4.above(x):
            if z != x:
                assert k4.rank(z) > k4.rank(x)


def _components(nv, edges):
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    return find


@pytest.mark.parametrize("g", all_graphs(5), ids=lambda g: str(g.edges))
def test_edge_points_span_matches_connectivity(g):
    cfg = embed_graph(g)
    P = build_arrangement(cfg)
    assert P.rank_of_top == g.vertices - g.components()
    m = len(g.edges)
    for k in range(m + 1):
        for sub in combinations(range(m), k):
            span = Subspace.span([cfg.points[i] for i in sub], cfg.ncols, cfg.field)
            find = _components(g.vertices, [g.edges[i] for i in sub])
            for e, (u, v) in enumerate(g.edges):
                assert span.contains_vector(cfg.points[e]) == (find(u) == find(v))


def test_permuted_points_give_same_poset(k4):
    cfg = embed_graph(Graph.complete(4))
    order = [3, 0, 5, 1, 4, 2]
    perm = PointConfiguration(cfg.field, cfg.ambient_dim,
                              tuple(cfg.points[i] for i in order),
                              tuple(cfg.labels[i] for i in order))
    P = build_arrangement(perm)
    assert P.fingerprint() == k4.fingerprint()
    assert [e.atoms for e in P.elements] == [e.atoms for e in k4.elements]


def test_configuration_validation():
    with pytest.raises(ConfigurationError):
        PointConfiguration.from_vectors([[0, 0, 0]])
    with pytest.raises(ConfigurationError):
        PointConfiguration.from_vectors([[1, 1, 0], [2, 2, 0]])
    with pytest.raises(ConfigurationError):
        PointConfiguration.from_vectors([[1, 0], [0, 1]], ambient_dim=1)


def test_configuration_json_roundtrip():
    cfg = PointConfiguration.from_vectors([["1/2", 0, 0], [0, 1, 0]])
    back = PointConfiguration.from_json(cfg.to_json())
    assert back == cfg


def test_poset_json(k3):
    data = k3.to_json()
    assert data["field"] == "Q"
    assert [e["rank"] for e in data["elements"]] == [0, 1, 1, 1, 2]
    assert [0, 4] in data["order"]
