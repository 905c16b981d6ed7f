import random
from fractions import Fraction
from itertools import combinations

from conftest import poly
from groefan.rationals import QQ, dot
from groefan.linalg import rref, rank, nullspace, independent_rows
from groefan.cones import (Cone, positive_orthant, lp_feasible_strict, Feasible,
                           Infeasible, convex_hull_vertices, newton_polytope,
                           normal_cone, normal_fan_maximal_cones, minkowski_sum,
                           refine_with_orthant, common_refinement, Polyhedron,
                           INTERIOR, BOUNDARY, OUTSIDE)


def test_rref_and_rank():
    red, pivots = rref([(1, 2, 3), (2, 4, 6), (0, 0, 1)], 3)
    assert pivots == [0, 2]
    assert rank([(1, 2, 3), (2, 4, 6), (0, 0, 1)], 3) == 2


def test_nullspace_orthogonal_to_rows():
    rows = [(1, 2, 3, 4), (0, 1, 1, 0)]
    for v in nullspace(rows, 4):
        for r in rows:
            assert dot(r, v) == 0
    assert len(nullspace(rows, 4)) == 2


def test_independent_rows():
    rows = [(1, 1), (2, 2), (1, 0), (0, 1)]
    assert independent_rows(rows, 2) == [(1, 1), (1, 0)]


def test_redundant_inequality_removed():
    c = Cone((), [(1, 0), (0, 1), (1, 1)], n=2)
    assert sorted(c.facet_normals()) == [(0, 1), (1, 0)]
    assert c.dimension() == 2


def test_membership_classification():
    c = Cone((), [(1, 0), (0, 1)], n=2)
    assert c.contains((-1, -2)) == INTERIOR
    assert c.contains((0, -1)) == BOUNDARY
    assert c.contains((1, 0)) == OUTSIDE
    assert c.contains((0, 0)) == BOUNDARY


def test_implicit_equalities_and_dimension():
    # u1 <= 0 and -u1 <= 0 force u1 = 0
    c = Cone((), [(1, 0), (-1, 0), (0, 1)], n=2)
    assert c.dimension() == 1
    assert c.facet_normals() == ((0, 1),)
    p = c.relative_interior_point(prefer_positive=False)
    assert p[0] == 0 and p[1] < 0
    assert c.contains((0, -5)) == INTERIOR


def test_positive_relative_interior_point():
    c = Cone((), [(1, -1)], n=2)
    p = c.relative_interior_point()
    assert all(x > 0 for x in p)
    assert c.contains(p) == INTERIOR


def test_admits():
    c = Cone((), [(1, 0), (0, 1)], n=2)
    assert c.admits((1, 1))
    assert c.admits((1, 0))
    assert not c.admits((-1, 0))


def test_same_cone():
    a = Cone((), [(1, 0), (0, 1)], n=2)
    b = Cone((), [(1, 0), (0, 1), (3, 5)], n=2)
    assert a.same_cone(b)
    assert not a.same_cone(Cone((), [(1, -1), (0, 1)], n=2))


def test_common_refinement_and_orthant():
    halfplane = Cone((), [(1, -1)], n=2)
    both = common_refinement(halfplane, positive_orthant(2))
    assert both.is_full_dimensional()
    assert sorted(both.facet_normals()) == [(-1, 0), (1, -1)]


def test_lp_feasible_strict_outcomes():
    out = lp_feasible_strict([(1, -1, 0), (0, 1, -1)])
    assert isinstance(out, Feasible)
    assert all(s >= 1 for s in out.s)
    out = lp_feasible_strict([(1, 1)])
    assert isinstance(out, Infeasible)
    assert out.certificate.verify([(1, 1)])
    # full column rank: only s = 0
    out = lp_feasible_strict([(1, 0), (0, 1), (1, 1)])
    assert isinstance(out, Infeasible)
    assert out.certificate.verify([(1, 0), (0, 1), (1, 1)])


def test_lp_feasible_strict_random_replay():
    rng = random.Random(7)
    for _ in range(25):
        rows = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)]
        out = lp_feasible_strict(rows)
        if isinstance(out, Feasible):
            for r in rows:
                assert dot(r, out.s) == 0
            assert all(s >= 1 for s in out.s)
        else:
            assert out.certificate.verify(rows)


def test_convex_hull_vertices():
    pts = [(0, 0), (2, 0), (0, 2), (1, 1), (1, 0), (2, 0)]
    assert convex_hull_vertices(pts) == [(0, 0), (0, 2), (2, 0)]
    # with a ray swallowing a would-be vertex
    assert convex_hull_vertices([(0, 0), (1, 0)], rays=[(1, 0)]) == [(0, 0)]


def test_newton_polytope_and_normal_fan():
    f = poly([(1, (1, 0)), (1, (0, 1)), (1, (0, 0))], 2)
    p = newton_polytope(f)
    assert sorted(p.vertices) == [(0, 0), (0, 1), (1, 0)]
    cones = normal_fan_maximal_cones(p)
    # normal cones at the three vertices cover the plane
    rng = random.Random(3)
    for _ in range(50):
        w = (rng.randint(-6, 6), rng.randint(-6, 6))
        assert any(c.contains(w) != OUTSIDE for c in cones)


def test_normal_cone_of_edge():
    p = Polyhedron([(0, 0), (1, 0), (0, 1)])
    c = normal_cone(p, [1, 2])  # the edge between (1,0) and (0,1)
    assert c.dimension() == 1
    assert c.contains((1, 1)) == INTERIOR


def test_minkowski_refinement_law():
    # N(P+Q) at a generic weight = common refinement of N(P), N(Q)
    f = poly([(1, (1, 0)), (1, (0, 1)), (1, (0, 0))], 2)
    g = poly([(1, (2, 0)), (1, (0, 1))], 2)
    pf, pg = newton_polytope(f), newton_polytope(g)
    ps = minkowski_sum(pf, pg)
    assert sorted(ps.vertices) == sorted(newton_polytope(f * g).vertices)
    fan_f = normal_fan_maximal_cones(pf)
    fan_g = normal_fan_maximal_cones(pg)
    fan_s = normal_fan_maximal_cones(ps)
    rng = random.Random(11)
    for _ in range(40):
        w = (rng.randint(-9, 9), rng.randint(-9, 9))
        in_f = [c for c in fan_f if c.contains(w) == INTERIOR]
        in_g = [c for c in fan_g if c.contains(w) == INTERIOR]
        in_s = [c for c in fan_s if c.contains(w) == INTERIOR]
        if in_f and in_g:
            assert len(in_s) == 1
            assert in_s[0].same_cone(common_refinement(in_f[0], in_g[0]))


def test_facets_against_brute_force_oracle():
    # random 3D cones: a normal is a facet iff dropping it changes the cone
    rng = random.Random(5)
    for _ in range(12):
        normals = []
        while len(normals) < 4:
            v = tuple(rng.randint(-3, 3) for _ in range(3))
            if any(v):
                normals.append(v)
        c = Cone((), normals, n=3)
        if not c.is_full_dimensional():
            continue
        facets = set(c.facet_normals())
        from groefan.rationals import primitive_vector
        prim = {primitive_vector(a) for a in normals}
        for a in prim:
            without = Cone((), [b for b in prim if b != a], n=3)
            if a in facets:
                assert not without.same_cone(c)
            else:
                assert without.same_cone(c)


def test_refine_with_orthant_drops_lower_dimensional():
    cones = [Cone((), [(1, 0), (0, 1)], n=2),   # negative quadrant
             Cone((), [(-1, 0), (0, -1)], n=2)]  # positive quadrant
    kept = refine_with_orthant(cones)
    assert len(kept) == 1
    assert kept[0].same_cone(positive_orthant(2))
