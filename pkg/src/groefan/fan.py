"""Groebner cones, restricted-fan enumeration by facet flips, extended-fan slice."""

from .rationals import QQ, dot, primitive_vector, vec_neg
from .orders import TermOrder
from .polynomial import initial_form
from .groebner import Ideal, buchberger, gb_for_weight, homogenize
from .cones import Cone, OUTSIDE


class FanVertex:
    """A maximal cone of the fan together with its reduced GB key."""

    def __init__(self, gb, cone, representative):
        self.gb = gb
        self.cone = cone
        self.representative = tuple(representative)
        self.index = None

    def __repr__(self):
        return 'FanVertex(index=%r, rep=%r)' % (self.index, self.representative)


class FanEdge:
    """Adjacency between maximal cones i < j across a shared facet.

    Cone i lies on the non-positive side of direction, cone j on the
    non-negative side; facet_point is in the relative interior of the facet.
    """

    def __init__(self, i, j, direction, facet_point):
        assert i < j, 'edges are stored with i < j'
        self.i = i
        self.j = j
        self.direction = tuple(direction)
        self.facet_point = tuple(facet_point)

    def __repr__(self):
        return 'FanEdge(%d, %d, d=%r)' % (self.i, self.j, self.direction)


class FanGraph:
    """Maximal cones (1-indexed) plus the facet-adjacency edges."""

    def __init__(self, vertices, edges, nvars):
        self.vertices = list(vertices)
        self.edges = list(edges)
        self.nvars = nvars
        for k, v in enumerate(self.vertices):
            v.index = k + 1

    def vertex(self, i):
        return self.vertices[i - 1]

    def locate(self, w):
        """Indices of maximal cones whose closure contains w."""
        return [v.index for v in self.vertices
                if v.cone.contains(w) != OUTSIDE]

    def __repr__(self):
        return 'FanGraph(%d cones, %d edges)' % (len(self.vertices), len(self.edges))


def groebner_cone(gb, weight=None):
    """Closed cone of weight vectors selecting the marked initial forms.

    Inequalities <u, beta - alpha> <= 0 for every marked element; when a
    defining weight is supplied, exponents tied with the mark under it
    contribute equalities instead (non-generic weights).
    """
    n = gb.nvars
    eqs = []
    ineqs = []
    for mark, poly in gb:
        if weight is not None:
            top = initial_form(weight, poly).exponents()
            assert mark in top, 'marking inconsistent with the weight'
        else:
            top = [mark]
        for t in poly.terms:
            beta = t.exponent
            if beta == mark:
                continue
            row = tuple(b - a for b, a in zip(beta, mark))
            if weight is not None and beta in top:
                eqs.append(row)
            else:
                ineqs.append(row)
    return Cone(eqs, ineqs, n=n)


def restricted_groebner_cone(gb, weight=None):
    """Groebner cone intersected with the non-negative orthant."""
    n = gb.nvars
    cone = groebner_cone(gb, weight)
    orthant = []
    for i in range(n):
        row = [0] * n
        row[i] = -1
        orthant.append(tuple(row))
    return Cone(cone.equalities, cone.inequalities + tuple(orthant), n=n)


def _unit_normal_index(a):
    """Index i when a == -e_i (an orthant-boundary facet normal), else None."""
    if sum(1 for x in a if x != 0) == 1:
        i = next(k for k, x in enumerate(a) if x != 0)
        if a[i] == -1:
            return i
    return None


def _facet_interior_point(cone, normal):
    """Strictly positive point in the relative interior of the given facet."""
    ana_facets = cone.facet_normals()
    others = [list(b) for b in ana_facets if b != normal]
    from .simplex import solve_lp, OPTIMAL
    res = solve_lp([0] * cone.n, a_ub=others, b_ub=[-1] * len(others),
                   a_eq=[list(normal)], b_eq=[0])
    assert res.status == OPTIMAL, 'facet has empty relative interior'
    p = res.x
    assert all(x > 0 for x in p), 'facet interior point not strictly positive'
    return primitive_vector(p)


def flip(vertex, facet_normal, facet_point, tiebreak=None):
    """Reduced GB of the neighbor across the given facet.

    Recomputed from scratch under the matrix order (facet_point, outward
    normal, tiebreak); a facet on the orthant boundary has no neighbor.
    """
    if tiebreak is None:
        tiebreak = TermOrder((), 'lex')
    facet_normal = primitive_vector(facet_normal)
    if _unit_normal_index(facet_normal) is not None:
        raise ValueError('facet lies on the orthant boundary; no neighbor')
    facet_point = tuple(QQ(x) for x in facet_point)
    assert all(x > 0 for x in facet_point), 'facet point must be positive'
    ideal = Ideal(vertex.gb.polynomials())
    order = tiebreak.prepend(facet_normal).prepend(facet_point)
    return buchberger(ideal, order)


def enumerate_restricted_fan(ideal, tiebreak='lex'):
    """All maximal cones of the restricted Groebner fan, with adjacency.

    Graph search: start from the all-ones weight, cross every facet meeting
    the open positive orthant, dedup by reduced GB.
    """
    if isinstance(tiebreak, str):
        tiebreak = TermOrder((), tiebreak)
    n = ideal.nvars
    seed = gb_for_weight(ideal, (1,) * n, tiebreak)
    visited = {}
    order_of_arrival = []
    queue = [seed]
    edge_data = {}

    def admit(gb):
        key = gb.key()
        if key in visited:
            return visited[key]
        cone = restricted_groebner_cone(gb)
        assert cone.is_full_dimensional(), 'enumerated cone is not maximal'
        vert = FanVertex(gb, cone, ())
        visited[key] = vert
        order_of_arrival.append(key)
        return vert

    admit(seed)
    while queue:
        gb = queue.pop()
        key = gb.key()
        vert = visited[key]
        for a in vert.cone.facet_normals():
            if _unit_normal_index(a) is not None:
                continue  # orthant boundary, no neighbor
            p = _facet_interior_point(vert.cone, a)
            neighbor = None
            for k2, v2 in visited.items():
                if k2 != key and v2.cone.contains(p) != OUTSIDE:
                    neighbor = v2
                    break
            if neighbor is None:
                order = tiebreak.prepend(a).prepend(p)
                gb2 = buchberger(ideal, order)
                assert gb2.key() != key, 'flip did not leave the cone'
                neighbor = admit(gb2)
                queue.append(gb2)
            pair = frozenset((key, neighbor.gb.key()))
            if pair not in edge_data:
                edge_data[pair] = (key, a, p)

    # canonical ordering: lexicographic on the serialized GB
    ordered = sorted(visited, key=_key_sort_form)
    index_of = {k: i + 1 for i, k in enumerate(ordered)}
    vertices = []
    for k in ordered:
        v = visited[k]
        v.representative = primitive_vector(v.cone.relative_interior_point())
        assert all(x > 0 for x in v.representative), \
            'representative not strictly positive'
        vertices.append(v)
    edges = []
    for pair, (from_key, a, p) in edge_data.items():
        k1, k2 = tuple(pair)
        i, j = index_of[k1], index_of[k2]
        if i > j:
            i, j, k1, k2 = j, i, k2, k1
        d = a if from_key == k1 else vec_neg(a)
        edges.append(FanEdge(i, j, primitive_vector(d), p))
    edges.sort(key=lambda e: (e.i, e.j))
    graph = FanGraph(vertices, edges, n)
    _assert_connected(graph)
    return graph


def _key_sort_form(key):
    # flatten to a uniformly comparable tuple: exponents and rational pairs
    out = []
    for mark, poly_key in key:
        out.append(tuple(mark))
        for exp, coeff in poly_key:
            out.append(tuple(exp))
            out.append((int(QQ(coeff).numerator), int(QQ(coeff).denominator)))
    return tuple(out)


def _assert_connected(graph):
    m = len(graph.vertices)
    if m <= 1:
        return
    adj = {i: set() for i in range(1, m + 1)}
    for e in graph.edges:
        adj[e.i].add(e.j)
        adj[e.j].add(e.i)
    seen = {1}
    stack = [1]
    while stack:
        for k in adj[stack.pop()]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    assert len(seen) == m, 'fan adjacency graph is disconnected'


def extended_fan_slice(ideal, tiebreak='lex'):
    """Fan of the homogenized ideal sliced back to the original coordinates.

    The homogenized ideal's restricted fan lives one dimension up; each of
    its maximal cones is intersected with {last coordinate = 0} and the
    full-dimensional slices (deduplicated geometrically, since distinct
    cones may share a wall lying inside the hyperplane) form the result.
    """
    if isinstance(tiebreak, str):
        tiebreak = TermOrder((), tiebreak)
    n = ideal.nvars
    lifted = homogenize(ideal, tiebreak)
    upstairs = enumerate_restricted_fan(lifted, tiebreak)
    slices = {}
    for v in upstairs.vertices:
        s = v.cone.slice_coordinate_zero(n)
        if s.dimension() != n:
            continue
        geo = s.canonical_key()
        if geo not in slices or _key_sort_form(v.gb.key()) < _key_sort_form(slices[geo].gb.key()):
            slices[geo] = FanVertex(v.gb, s, ())
    ordered = sorted(slices.values(), key=lambda v: _key_sort_form(v.gb.key()))
    for v in ordered:
        v.representative = primitive_vector(v.cone.relative_interior_point())
        assert all(x > 0 for x in v.representative), \
            'slice representative not strictly positive'
    graph = FanGraph(ordered, [], n)
    edge_data = {}
    for v in graph.vertices:
        for a in v.cone.facet_normals():
            if _unit_normal_index(a) is not None:
                continue
            p = _facet_interior_point(v.cone, a)
            neighbor = None
            for v2 in graph.vertices:
                if v2 is not v and v2.cone.contains(p) != OUTSIDE:
                    neighbor = v2
                    break
            assert neighbor is not None, 'slice fan does not cover the orthant'
            pair = (min(v.index, neighbor.index), max(v.index, neighbor.index))
            if pair not in edge_data:
                d = a if v.index == pair[0] else vec_neg(a)
                edge_data[pair] = FanEdge(pair[0], pair[1], primitive_vector(d), p)
    graph.edges = sorted(edge_data.values(), key=lambda e: (e.i, e.j))
    _assert_connected(graph)
    return graph
