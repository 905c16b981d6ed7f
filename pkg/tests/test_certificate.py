from groefan.certificate import (certificate_data, theorem_one_ideal,
                                 check_flows, check_orthogonality,
                                 assemble_matrix, farkas_replay,
                                 verify_subgraph, SPECIAL_EDGE, SPECIAL_VALUE)
from groefan.rationals import QQ


def test_data_shape():
    data = certificate_data()
    assert len(data.vertex_ids) == 15
    assert len(data.edges) == 20
    assert all(len(data.flows[e]) == 4 for e in data.edges)
    assert all(len(data.directions[e]) == 4 for e in data.edges)
    assert all(all(x > 0 for x in data.facet_vectors[e]) for e in data.edges)
    assert len(data.farkas_y) == 16


def test_flows_conserved():
    assert check_flows()


def test_flow_perturbation_breaks_conservation():
    data = certificate_data()
    e = data.edges[0]
    data.flows[e] = tuple(-x for x in data.flows[e][:1]) + data.flows[e][1:]
    # flow 1 has a nonzero value on edge (5,6); negating it must break it
    assert not check_flows(data)


def test_orthogonality_single_nonzero():
    ok, report = check_orthogonality()
    assert ok
    assert report[SPECIAL_EDGE] == SPECIAL_VALUE
    assert all(v == 0 for e, v in report.items() if e != SPECIAL_EDGE)


def test_orthogonality_of_zero_flows():
    data = certificate_data()
    for e in data.edges:
        data.flows[e] = (0, 0, 0, 0)
    ok, report = check_orthogonality(data)
    assert not ok  # the (29,30) entry is now 0 instead of 18
    assert all(v == 0 for v in report.values())


def test_farkas_replay():
    assert farkas_replay()
    assert not farkas_replay(y=[0] * 16)


def test_matrix_products():
    data = certificate_data()
    m = assemble_matrix(data)
    assert len(m) == 16 and all(len(r) == 20 for r in m)
    y = data.farkas_y
    prods = [sum(QQ(yi) * row[j] for yi, row in zip(y, m)) for j in range(20)]
    special = data.edges.index(SPECIAL_EDGE)
    assert prods[special] == SPECIAL_VALUE
    assert all(p == 0 for j, p in enumerate(prods) if j != special)


def test_verify_subgraph_full_checklist():
    report = verify_subgraph()
    assert report['ok']
    assert len(report['edges']) == 20
    assert all(row['ok'] for row in report['edges'])


def test_verify_subgraph_detects_tampering():
    data = certificate_data()
    # swap a direction sign: separation must fail on that edge
    e = (29, 30)
    data.directions[e] = tuple(-x for x in data.directions[e])
    report = verify_subgraph(data=data)
    row = next(r for r in report['edges'] if r['edge'] == e)
    assert not row['direction_separates']
    assert not report['ok']


def test_facet_vector_replaced_by_interior_vector_fails():
    data = certificate_data()
    data.facet_vectors[(29, 30)] = (10, 1, 2, 6)  # representative of cone 29
    report = verify_subgraph(data=data)
    row = next(r for r in report['edges'] if r['edge'] == (29, 30))
    assert not row['facet_relative_interior']


def test_certificate_agrees_with_fan_search(theorem_fan):
    # map certificate vertex ids to enumerated cones by membership of the
    # representatives, then check every certificate edge is a fan edge with
    # matching separation direction (up to positive scaling)
    from groefan.rationals import primitive_vector
    data = certificate_data()
    where = {}
    for vid, rep in data.representatives.items():
        holders = theorem_fan.locate(rep)
        assert len(holders) == 1
        where[vid] = holders[0]
    assert len(set(where.values())) == 15
    fan_edges = {}
    for e in theorem_fan.edges:
        fan_edges[(e.i, e.j)] = e.direction
        fan_edges[(e.j, e.i)] = tuple(-x for x in e.direction)
    for (i, j) in data.edges:
        key = (where[i], where[j])
        assert key in fan_edges
        assert primitive_vector(data.directions[(i, j)]) == fan_edges[key]
