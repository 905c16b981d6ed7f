import random

from conftest import poly
from groefan.groebner import Ideal
from groefan.fan import enumerate_restricted_fan, FanVertex, FanEdge, FanGraph
from groefan.regularity import (cycle_basis, build_system, check_regularity,
                                verify_embedding, conserved, Embedding,
                                NonRegular)
from groefan.rationals import QQ, vec_add, vec_scale


def _graph(nv, edge_list, nvars):
    vertices = [FanVertex(None, None, ()) for _ in range(nv)]
    edges = [FanEdge(i, j, d, (1,) * nvars) for i, j, d in edge_list]
    return FanGraph(vertices, edges, nvars)


def test_cycle_basis_of_tree_is_empty():
    g = _graph(4, [(1, 2, (1, 0)), (2, 3, (1, 0)), (2, 4, (0, 1))], 2)
    basis = cycle_basis(g)
    assert basis.flows == []
    assert len(basis.spanning_tree) == 3
    assert build_system(g, basis) == []


def test_single_cycle():
    square = [(1, 2, (1, 0)), (2, 3, (0, 1)), (3, 4, (-1, 0)), (1, 4, (0, 1))]
    g = _graph(4, square, 2)
    basis = cycle_basis(g)
    assert len(basis.flows) == 1
    flow = basis.flows[0]
    assert sorted(abs(v) for v in flow.values) == [1, 1, 1, 1]
    assert conserved(flow.values, [(e.i, e.j) for e in g.edges], 4)
    rows = build_system(g, basis)
    assert len(rows) == 2
    out = check_regularity(g)
    assert isinstance(out, Embedding)
    assert verify_embedding(g, out)


def test_inconsistent_triangle_is_non_regular():
    # closing the triangle needs s1*(1,0) + s2*(0,1) + s3*(1,0) = 0, which
    # forces every scalar to zero
    triangle = [(1, 2, (1, 0)), (2, 3, (0, 1)), (1, 3, (-1, 0))]
    g = _graph(3, triangle, 2)
    out = check_regularity(g)
    assert isinstance(out, NonRegular)
    rows = build_system(g, cycle_basis(g))
    assert out.certificate.verify(rows)
    assert len(out.witness_edges) == len(g.edges)


def test_embedding_translation_invariance_and_perturbation():
    square = [(1, 2, (1, 0)), (2, 3, (0, 1)), (3, 4, (-1, 0)), (1, 4, (0, 1))]
    g = _graph(4, square, 2)
    out = check_regularity(g)
    shifted = Embedding(out.scalars,
                        {i: vec_add(c, (5, -7)) for i, c in out.coordinates.items()})
    assert verify_embedding(g, shifted)
    broken = dict(out.coordinates)
    broken[2] = vec_add(broken[2], (1, 0))
    assert not verify_embedding(g, Embedding(out.scalars, broken))


def test_verdict_independent_of_spanning_tree():
    ideal = Ideal([poly([(1, (2, 0)), (-1, (0, 1))], 2),
                   poly([(1, (0, 2)), (-1, (1, 0))], 2)])
    g = enumerate_restricted_fan(ideal)
    verdicts = set()
    for seed in range(3):
        out = check_regularity(g, rng=random.Random(seed))
        verdicts.add(type(out).__name__)
        if isinstance(out, Embedding):
            assert verify_embedding(g, out)
    assert verdicts == {'Embedding'}


def test_direction_scaling_does_not_change_verdict():
    square = [(1, 2, (1, 0)), (2, 3, (0, 1)), (3, 4, (-1, 0)), (1, 4, (0, 1))]
    g = _graph(4, square, 2)
    scaled = _graph(4, [(1, 2, (3, 0)), (2, 3, (0, 5)), (3, 4, (-2, 0)),
                        (1, 4, (0, 7))], 2)
    assert isinstance(check_regularity(g), Embedding)
    assert isinstance(check_regularity(scaled), Embedding)


def test_principal_fan_embedding():
    f = poly([(1, (1, 0)), (1, (0, 1)), (1, (0, 0))], 2)
    g = enumerate_restricted_fan(Ideal([f]))
    out = check_regularity(g)
    assert isinstance(out, Embedding)
    assert verify_embedding(g, out)


def test_zero_dimensional_embedding_matches_vertex_construction():
    # vertex differences must be positive multiples of the differences of the
    # standard-monomial sum vectors v = -(sum of all standard exponents)
    from groefan.groebner import standard_monomials
    from groefan.rationals import primitive_vector
    ideal = Ideal([poly([(1, (2, 0)), (-1, (0, 1))], 2),
                   poly([(1, (0, 2)), (-1, (1, 0))], 2)])
    g = enumerate_restricted_fan(ideal)
    out = check_regularity(g)
    assert isinstance(out, Embedding)
    assert verify_embedding(g, out)
    vs = {}
    for v in g.vertices:
        sm = standard_monomials(v.gb.marks())
        vs[v.index] = tuple(-sum(e[k] for e in sm) for k in range(2))
    for e in g.edges:
        diff_emb = tuple(b - a for a, b in zip(out.coordinates[e.i],
                                               out.coordinates[e.j]))
        diff_v = tuple(b - a for a, b in zip(vs[e.i], vs[e.j]))
        assert primitive_vector(diff_emb) == primitive_vector(diff_v)


def test_homogeneous_ideal_embedding():
    ideal = Ideal([poly([(1, (2, 0, 0)), (-1, (0, 1, 1))], 3)])
    g = enumerate_restricted_fan(ideal)
    out = check_regularity(g)
    assert isinstance(out, Embedding)
    assert verify_embedding(g, out)
