"""Embedded non-regularity certificate for the ideal <acd+a^2c-ab, ad^2-c, ad^4+ac>.

The data below — a 15-vertex, 20-edge subgraph of the fan's adjacency graph,
four flows, edge directions, per-edge facet vectors, representative weight
vectors and a Farkas vector — witnesses that the restricted Groebner fan of
this ideal is not the normal fan of any polyhedron.
"""

from .rationals import QQ, dot
from .polynomial import Polynomial
from .orders import TermOrder
from .groebner import Ideal, gb_for_weight
from .fan import restricted_groebner_cone
from .cones import OUTSIDE, FarkasVector

VERTEX_IDS = (5, 6, 15, 16, 17, 18, 19, 26, 27, 29, 30, 33, 44, 57, 58)

REPRESENTATIVES = {
    5: (10, 2, 5, 3), 6: (14, 4, 11, 5), 15: (7, 6, 5, 3), 16: (7, 11, 8, 4),
    17: (5, 2, 3, 3), 18: (4, 3, 5, 4), 19: (5, 1, 2, 2), 26: (7, 1, 2, 3),
    27: (17, 1, 4, 9), 29: (10, 1, 2, 6), 30: (15, 1, 3, 11), 33: (3, 1, 2, 3),
    44: (7, 5, 4, 4), 57: (7, 1, 2, 7), 58: (7, 1, 3, 8),
}

# per edge: four flow values f1..f4, direction d, facet vector
EDGE_TABLE = (
    ((5, 6),   (-72, 0, -36, -36),   (-1, -1, 2, 0),  (3, 1, 2, 1)),
    ((5, 19),  (72, 0, 36, 36),      (0, 1, -2, 2),   (8, 4, 5, 3)),
    ((6, 18),  (-72, 0, -36, -36),   (-1, 0, 0, 2),   (2, 1, 2, 1)),
    ((15, 16), (72, 54, 60, 36),     (-1, 0, 0, 2),   (6, 8, 6, 3)),
    ((15, 19), (-72, 0, -24, 0),     (-1, -2, 3, 1),  (5, 3, 3, 2)),
    ((15, 26), (0, -54, -36, -36),   (0, 0, -1, 1),   (9, 2, 3, 3)),
    ((16, 17), (0, 0, 6, -18),       (-1, -2, 3, 1),  (8, 15, 11, 5)),
    ((16, 44), (72, 54, 54, 54),     (0, 1, -2, 1),   (5, 7, 5, 3)),
    ((17, 19), (0, 0, -12, 0),       (1, 0, 0, -2),   (4, 1, 2, 2)),
    ((17, 33), (0, 0, 18, -18),      (-1, -1, 1, 1),  (6, 1, 3, 4)),
    ((18, 33), (-72, 0, -36, -36),   (1, 1, -3, 1),   (4, 1, 3, 4)),
    ((19, 26), (0, 0, 0, 36),        (1, 2, -4, 0),   (10, 1, 3, 4)),
    ((26, 27), (0, -54, -36, 0),     (-1, 0, 0, 2),   (18, 2, 5, 9)),
    ((27, 29), (0, -54, -36, 0),     (0, 2, -3, 1),   (13, 1, 3, 7)),
    ((29, 30), (0, -18, 0, 0),       (-1, -1, 2, 1),  (8, 1, 2, 5)),
    ((29, 44), (0, -36, -36, 0),     (0, 1, -1, 0),   (9, 3, 3, 5)),
    ((30, 44), (-72, -18, -18, -54), (1, 2, -3, -1),  (6, 5, 4, 4)),
    ((30, 57), (72, 0, 18, 54),      (-1, -1, 1, 1),  (13, 1, 3, 11)),
    ((33, 58), (-72, 0, -18, -54),   (0, 2, -3, 1),   (6, 1, 3, 7)),
    ((57, 58), (72, 0, 18, 54),      (-1, -2, 4, 0),  (10, 1, 3, 11)),
)

FARKAS_Y = (1, 0, 0, 0,
            0, 1, 0, 0,
            0, 0, 1, 0,
            0, 0, 0, 1)

SPECIAL_EDGE = (29, 30)
SPECIAL_VALUE = 18


class CertificateData:
    """Immutable container for the embedded certificate tables."""

    def __init__(self):
        self.vertex_ids = VERTEX_IDS
        self.representatives = dict(REPRESENTATIVES)
        self.edges = tuple(row[0] for row in EDGE_TABLE)
        self.flows = {row[0]: row[1] for row in EDGE_TABLE}
        self.directions = {row[0]: row[2] for row in EDGE_TABLE}
        self.facet_vectors = {row[0]: row[3] for row in EDGE_TABLE}
        self.farkas_y = FARKAS_Y


def certificate_data():
    return CertificateData()


def theorem_one_ideal():
    """<acd + a^2 c - ab, a d^2 - c, a d^4 + a c> in Q[a,b,c,d]."""
    gens = [
        Polynomial([(1, (1, 0, 1, 1)), (1, (2, 0, 1, 0)), (-1, (1, 1, 0, 0))],
                   nvars=4),
        Polynomial([(1, (1, 0, 0, 2)), (-1, (0, 0, 1, 0))], nvars=4),
        Polynomial([(1, (1, 0, 0, 4)), (1, (1, 0, 1, 0))], nvars=4),
    ]
    return Ideal(gens)


def check_flows(data=None):
    """Each of the four flows is conserved at every subgraph vertex."""
    data = data or certificate_data()
    for r in range(4):
        net = {v: QQ(0) for v in data.vertex_ids}
        for (i, j) in data.edges:
            f = QQ(data.flows[(i, j)][r])
            net[i] -= f
            net[j] += f
        if any(x != 0 for x in net.values()):
            return False
    return True


def check_orthogonality(data=None):
    """Per-edge local contribution sum_t d_t * f^t; zero except on (29,30)."""
    data = data or certificate_data()
    report = {e: dot(data.directions[e], data.flows[e]) for e in data.edges}
    ok = all(v == (SPECIAL_VALUE if e == SPECIAL_EDGE else 0)
             for e, v in report.items())
    return ok, report


def assemble_matrix(data=None):
    """16x20 matrix A' with rows (flow r, coordinate t) and edge columns."""
    data = data or certificate_data()
    rows = []
    for r in range(4):
        for t in range(4):
            rows.append(tuple(QQ(data.flows[e][r]) * data.directions[e][t]
                              for e in data.edges))
    return rows


def farkas_replay(data=None, y=None):
    """Does y (default: the embedded vector) certify infeasibility of A'?"""
    data = data or certificate_data()
    if y is None:
        y = data.farkas_y
    return FarkasVector(y).verify(assemble_matrix(data))


def verify_subgraph(ideal=None, data=None, tiebreak='lex'):
    """Replay the full per-edge checklist against freshly computed cones.

    For every listed edge (i,j): (a) the representatives yield distinct
    reduced GBs with full-dimensional cones, (b) the facet vector lies in
    both closed cones, (c) the direction is non-positive on cone i and
    non-negative on cone j, (d) the facet vector lies in the relative
    interior of a facet of cone i.
    """
    ideal = ideal or theorem_one_ideal()
    data = data or certificate_data()
    if isinstance(tiebreak, str):
        tiebreak = TermOrder((), tiebreak)
    gbs = {}
    cones = {}
    for v in data.vertex_ids:
        gbs[v] = gb_for_weight(ideal, data.representatives[v], tiebreak)
        cones[v] = restricted_groebner_cone(gbs[v])
    checks = []
    for (i, j) in data.edges:
        d = data.directions[(i, j)]
        p = data.facet_vectors[(i, j)]
        ci, cj = cones[i], cones[j]
        tight = [a for a in ci.facet_normals() if dot(a, p) == 0]
        row = {
            'edge': (i, j),
            'distinct_bases': gbs[i].key() != gbs[j].key(),
            'full_dimensional': ci.is_full_dimensional() and cj.is_full_dimensional(),
            'facet_vector_in_both': (ci.contains(p) != OUTSIDE
                                     and cj.contains(p) != OUTSIDE),
            'direction_separates': (ci.admits(d)
                                    and cj.admits(tuple(-x for x in d))),
            'facet_relative_interior': len(tight) == 1,
        }
        row['ok'] = all(v for k, v in row.items() if k != 'edge')
        checks.append(row)
    report = {
        'flows_conserved': check_flows(data),
        'orthogonality': check_orthogonality(data)[0],
        'farkas': farkas_replay(data),
        'edges': checks,
    }
    report['ok'] = (report['flows_conserved'] and report['orthogonality']
                    and report['farkas'] and all(c['ok'] for c in checks))
    return report
