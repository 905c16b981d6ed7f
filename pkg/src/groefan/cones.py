"""Exact polyhedral cones, strict-feasibility LP, facets, and hull oracles."""

from .rationals import (QQ, dot, primitive_vector, vec_sub, vec_neg,
                        is_zero_vector)
from .linalg import rref, rank, nullspace, independent_row_indices
from .simplex import solve_lp, OPTIMAL, INFEASIBLE

INTERIOR = 'interior'
BOUNDARY = 'boundary'
OUTSIDE = 'outside'


class FarkasVector:
    """Certificate y with y^T A >= 0 and y^T A != 0 for a system {As=0, s>0}."""

    def __init__(self, y):
        self.y = tuple(QQ(v) for v in y)

    def verify(self, rows):
        """Replay the certificate against the matrix it was issued for."""
        ncols = len(rows[0]) if rows else 0
        prods = [sum(yi * QQ(row[j]) for yi, row in zip(self.y, rows))
                 for j in range(ncols)]
        return all(p >= 0 for p in prods) and any(p > 0 for p in prods)

    def __repr__(self):
        return 'FarkasVector(%r)' % (self.y,)


class Feasible:
    def __init__(self, s):
        self.s = tuple(QQ(v) for v in s)


class Infeasible:
    def __init__(self, certificate):
        self.certificate = certificate


def lp_feasible_strict(rows, ncols=None):
    """Decide whether {As = 0, s > 0} has a solution.

    Returns Feasible(s) with every s_i >= 1, or Infeasible(FarkasVector).
    The two outcomes are exhaustive (Stiemke's alternative).  Solved in
    nullspace coordinates (s = N lambda), which keeps the LP small when the
    solution space of As = 0 is low-dimensional.
    """
    rows = [tuple(QQ(x) for x in row) for row in rows]
    if ncols is None:
        assert rows, 'need ncols for an empty system'
        ncols = len(rows[0])
    if not rows or all(is_zero_vector(r) for r in rows):
        return Feasible((QQ(1),) * ncols)
    basis = nullspace(rows, ncols)
    if basis:
        a_ub = [[-n[e] for n in basis] for e in range(ncols)]
        res = solve_lp([0] * len(basis), a_ub=a_ub, b_ub=[-1] * ncols)
        if res.status == OPTIMAL:
            s = tuple(sum(n[e] * lam for n, lam in zip(basis, res.x))
                      for e in range(ncols))
            assert all(x >= 1 for x in s)
            return Feasible(s)
        nu = [-m for m in res.farkas]
    else:
        # As = 0 forces s = 0; any positive row-space vector certifies
        nu = [QQ(1)] * ncols
    # nu >= 0 with nu . N = 0, so nu lies in the row space: solve y^T A = nu
    y = _row_combination(rows, ncols, nu)
    cert = FarkasVector(y)
    assert cert.verify(rows), 'lifted Farkas certificate failed to replay'
    return Infeasible(cert)


def _row_combination(rows, ncols, target):
    """Coefficients y with sum_i y_i row_i = target (zeros off a row basis)."""
    kept = independent_row_indices(rows, ncols)
    aug = [[rows[i][e] for i in kept] + [target[e]] for e in range(ncols)]
    red, pivots = rref(aug, len(kept) + 1)
    assert len(kept) not in pivots, 'target outside the row space'
    y = [QQ(0)] * len(rows)
    for row, p in zip(red, pivots):
        y[kept[p]] = row[-1]
    return y


def _dual_member(target, generators, span):
    """Is target in cone(generators) + linear span(span)?"""
    n = len(target)
    cols = [tuple(g) for g in generators]
    for e in span:
        cols.append(tuple(e))
        cols.append(vec_neg(e))
    if not cols:
        return is_zero_vector(target)
    a_eq = [[QQ(c[i]) for c in cols] for i in range(n)]
    res = solve_lp([0] * len(cols), a_eq=a_eq, b_eq=list(target), nonneg=True)
    return res.status == OPTIMAL


def _reduce_mod_rows(vec, red_rows, pivots):
    vec = [QQ(x) for x in vec]
    for row, p in zip(red_rows, pivots):
        if vec[p] != 0:
            f = vec[p]
            vec = [a - f * b for a, b in zip(vec, row)]
    return tuple(vec)


class Cone:
    """{u : E u = 0, A u <= 0} with exact facet and interior computations."""

    def __init__(self, equalities=(), inequalities=(), n=None):
        equalities = [tuple(e) for e in equalities]
        inequalities = [tuple(a) for a in inequalities]
        if n is None:
            sample = (equalities + inequalities)
            assert sample, 'need dimension for the trivial cone'
            n = len(sample[0])
        for v in equalities + inequalities:
            assert len(v) == n, 'dimension mismatch'
        self.n = n
        self.equalities = tuple(primitive_vector(e) for e in equalities
                                if not is_zero_vector(e))
        seen = set()
        ineqs = []
        for a in inequalities:
            p = primitive_vector(a)
            if not is_zero_vector(p) and p not in seen:
                seen.add(p)
                ineqs.append(p)
        self.inequalities = tuple(ineqs)
        self._analysis = None

    # -- analysis ---------------------------------------------------------

    def _analyze(self):
        if self._analysis is not None:
            return self._analysis
        n = self.n
        eqs = list(self.equalities)
        red_rows, pivots = rref(eqs, n) if eqs else ([], [])
        ineqs = []
        seen = set()
        for a in self.inequalities:
            r = primitive_vector(_reduce_mod_rows(a, red_rows, pivots))
            if not is_zero_vector(r) and r not in seen:
                seen.add(r)
                ineqs.append(r)

        # fast path: all inequalities simultaneously strict
        relint = self._strict_point(red_rows, pivots, ineqs)
        if relint is None:
            # find implicit equalities, fold them in, retry
            implicit = [a for a in ineqs
                        if _dual_member(vec_neg(a), ineqs, red_rows)]
            assert implicit, 'no strict point yet no implicit equality'
            red_rows, pivots = rref(list(red_rows) + implicit, n)
            kept = []
            seen = set()
            for a in ineqs:
                r = primitive_vector(_reduce_mod_rows(a, red_rows, pivots))
                if not is_zero_vector(r) and r not in seen:
                    seen.add(r)
                    kept.append(r)
            ineqs = kept
            relint = self._strict_point(red_rows, pivots, ineqs)
            assert relint is not None, 'implicit equality detection incomplete'

        facets = [a for a in ineqs
                  if not _dual_member(a, [b for b in ineqs if b != a], red_rows)]
        dim = n - len(red_rows)
        self._analysis = {
            'span_rows': [tuple(r) for r in red_rows],
            'span_pivots': list(pivots),
            'facets': tuple(facets),
            'dim': dim,
            'relint': relint,
        }
        return self._analysis

    def _strict_point(self, red_rows, pivots, ineqs):
        """A point with Eu=0 and a.u <= -1 on every listed inequality, or None."""
        n = self.n
        a_ub = [list(a) for a in ineqs]
        b_ub = [-1] * len(ineqs)
        a_eq = [list(e) for e in red_rows]
        b_eq = [0] * len(red_rows)
        if not a_ub and not a_eq:
            return (QQ(0),) * n
        res = solve_lp([0] * n, a_ub=a_ub, b_ub=b_ub, a_eq=a_eq, b_eq=b_eq)
        if res.status == OPTIMAL:
            return res.x
        return None

    # -- queries ----------------------------------------------------------

    def dimension(self):
        return self._analyze()['dim']

    def facet_normals(self):
        """Irredundant outward inequality normals (reduced modulo the span)."""
        return self._analyze()['facets']

    def relative_interior_point(self, prefer_positive=True):
        """Exact rational point in the relative interior.

        When the cone meets the open positive orthant a strictly positive
        point is returned.
        """
        ana = self._analyze()
        if prefer_positive:
            n = self.n
            a_ub = [list(a) for a in ana['facets']]
            b_ub = [-1] * len(a_ub)
            for i in range(n):
                row = [0] * n
                row[i] = -1
                a_ub.append(row)
                b_ub.append(-1)
            res = solve_lp([0] * n, a_ub=a_ub, b_ub=b_ub,
                           a_eq=[list(e) for e in ana['span_rows']],
                           b_eq=[0] * len(ana['span_rows']))
            if res.status == OPTIMAL:
                return res.x
        return ana['relint']

    def contains(self, w):
        """INTERIOR (relative interior), BOUNDARY, or OUTSIDE."""
        w = tuple(QQ(x) for x in w)
        assert len(w) == self.n, 'dimension mismatch'
        for e in self.equalities:
            if dot(e, w) != 0:
                return OUTSIDE
        for a in self.inequalities:
            if dot(a, w) > 0:
                return OUTSIDE
        ana = self._analyze()
        for e in ana['span_rows']:
            if dot(e, w) != 0:
                return BOUNDARY
        for a in ana['facets']:
            if dot(a, w) == 0:
                return BOUNDARY
        return INTERIOR

    def admits(self, a):
        """True iff a.u <= 0 holds on the whole cone."""
        ana = self._analyze()
        return _dual_member(tuple(QQ(x) for x in a), ana['facets'],
                            ana['span_rows'])

    def is_full_dimensional(self):
        return self.dimension() == self.n

    def intersect(self, other):
        assert self.n == other.n, 'dimension mismatch'
        return Cone(self.equalities + other.equalities,
                    self.inequalities + other.inequalities, n=self.n)

    def slice_coordinate_zero(self, coord):
        """Intersect with {u_coord = 0} and drop that coordinate."""
        unit = tuple(1 if i == coord else 0 for i in range(self.n))
        drop = lambda v: v[:coord] + v[coord + 1:]
        eqs = [drop(e) for e in self.equalities]
        ineqs = [drop(a) for a in self.inequalities]
        return Cone(eqs, ineqs, n=self.n - 1)

    def canonical_key(self):
        """Canonical form for full-dimensional cones: the sorted facet set."""
        return tuple(sorted(self.facet_normals()))

    def same_cone(self, other):
        """Set equality of the two cones, decided by mutual validity LPs."""
        assert self.n == other.n, 'dimension mismatch'
        return (self._valid_on(other) and other._valid_on(self))

    def _valid_on(self, other):
        # every defining constraint of self holds on other
        a2 = self._analyze()
        span2 = a2['span_rows']
        o = other._analyze()
        gens = list(o['facets'])
        span = o['span_rows']
        for e in span2:
            if not (_dual_member(e, gens, span) and _dual_member(vec_neg(e), gens, span)):
                return False
        for a in a2['facets']:
            if not _dual_member(a, gens, span):
                return False
        return True

    def __repr__(self):
        return 'Cone(eq=%d, ineq=%d, n=%d)' % (
            len(self.equalities), len(self.inequalities), self.n)


def positive_orthant(n):
    ineqs = []
    for i in range(n):
        row = [0] * n
        row[i] = -1
        ineqs.append(row)
    return Cone((), ineqs, n=n)


def facets(cone):
    """Irredundant oriented facet normals of the cone."""
    assert cone.dimension() > 0, 'degenerate cone'
    return list(cone.facet_normals())


def relative_interior_point(cone):
    return cone.relative_interior_point()


def contains(cone, w):
    return cone.contains(w)


def common_refinement(c1, c2):
    return c1.intersect(c2)


def refine_with_orthant(cones, n=None):
    """Intersect each cone with the orthant, keeping full-dimensional pieces."""
    cones = list(cones)
    if n is None:
        assert cones, 'need dimension'
        n = cones[0].n
    orthant = positive_orthant(n)
    out = []
    for c in cones:
        piece = c.intersect(orthant)
        if piece.is_full_dimensional():
            out.append(piece)
    return out


# -- polyhedra and hull oracles (V-representation, tiny dimensions) --------

class Polyhedron:
    """V-representation: convex hull of vertices plus cone of rays."""

    def __init__(self, vertices, rays=()):
        self.vertices = tuple(tuple(QQ(x) for x in v) for v in vertices)
        self.rays = tuple(primitive_vector(r) for r in rays)
        assert self.vertices, 'pointed polyhedron needs vertices'
        self.n = len(self.vertices[0])

    def __repr__(self):
        return 'Polyhedron(%d vertices, %d rays)' % (len(self.vertices), len(self.rays))


def _in_hull(point, points, rays):
    """point in conv(points) + cone(rays)?"""
    if not points and not rays:
        return False
    n = len(point)
    cols = [tuple(p) for p in points] + [tuple(r) for r in rays]
    a_eq = [[QQ(c[i]) for c in cols] for i in range(n)]
    a_eq.append([QQ(1)] * len(points) + [QQ(0)] * len(rays))
    b_eq = list(point) + [QQ(1)]
    res = solve_lp([0] * len(cols), a_eq=a_eq, b_eq=b_eq, nonneg=True)
    return res.status == OPTIMAL


def convex_hull_vertices(points, rays=()):
    """Vertices of conv(points) + cone(rays), by brute-force LP tests."""
    points = [tuple(QQ(x) for x in p) for p in points]
    uniq = sorted(set(points))
    out = []
    for p in uniq:
        others = [q for q in uniq if q != p]
        if not _in_hull(p, others, rays):
            out.append(p)
    return out


def newton_polytope(f):
    """Convex hull of the exponent vectors of a nonzero polynomial."""
    assert not f.is_zero(), 'zero polynomial'
    pts = [tuple(QQ(e) for e in t.exponent) for t in f.terms]
    return Polyhedron(convex_hull_vertices(pts))


def normal_cone(poly, face_vertices, face_rays=()):
    """Closure of the weights maximized exactly on the given face.

    face_vertices / face_rays index into poly.vertices and poly.rays.
    """
    face_vertices = list(face_vertices)
    assert face_vertices, 'face needs at least one vertex'
    v0 = poly.vertices[face_vertices[0]]
    eqs = []
    for i in face_vertices[1:]:
        eqs.append(vec_sub(poly.vertices[i], v0))
    for j in face_rays:
        eqs.append(poly.rays[j])
    ineqs = []
    for i, v in enumerate(poly.vertices):
        if i not in face_vertices:
            ineqs.append(vec_sub(v, v0))
    for j, r in enumerate(poly.rays):
        if j not in face_rays:
            ineqs.append(r)
    return Cone(eqs, ineqs, n=poly.n)


def normal_fan_maximal_cones(poly):
    """Normal cones of all vertices."""
    return [normal_cone(poly, [i]) for i in range(len(poly.vertices))]


def minkowski_sum(p, q):
    """Minkowski sum of two V-represented polyhedra (oracle-sized inputs)."""
    assert p.n == q.n, 'dimension mismatch'
    sums = [tuple(a + b for a, b in zip(v, w))
            for v in p.vertices for w in q.vertices]
    rays = list(dict.fromkeys(p.rays + q.rays))
    return Polyhedron(convex_hull_vertices(sums, rays), rays)
