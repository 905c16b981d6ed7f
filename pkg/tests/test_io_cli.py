import json

import pytest

from conftest import poly
from groefan.groebner import Ideal
from groefan.fan import enumerate_restricted_fan
from groefan.io import (parse_ideal, ParseError, parse_polynomial_text,
                        fan_to_document, document_to_graph, dumps_document,
                        loads_document, regularity_to_document)
from groefan.cli import main

THEOREM_TEXT = 'ring a,b,c,d; ideal a*c*d + a^2*c - a*b, a*d^2 - c, a*d^4 + a*c;'


def test_parse_theorem_ideal():
    ideal, variables, tiebreak = parse_ideal(THEOREM_TEXT)
    assert variables == ['a', 'b', 'c', 'd']
    assert tiebreak == 'lex'
    from groefan.certificate import theorem_one_ideal
    assert list(ideal.generators) == list(theorem_one_ideal().generators)


def test_parse_optional_star_and_rationals():
    ideal, variables, _ = parse_ideal('ring x,y; ideal 3/2x^2 y - 2x, x+y;')
    f = ideal.generators[0]
    from groefan.rationals import QQ
    assert f.coefficient_of((2, 1)) == QQ(3, 2)
    assert f.coefficient_of((1, 0)) == -2


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as err:
        parse_ideal('ring x,x; ideal x;')
    assert 'duplicate' in str(err.value)
    with pytest.raises(ParseError):
        parse_ideal('ring x; ideal x - x;')  # zero generator
    with pytest.raises(ParseError) as err:
        parse_ideal('ring x; ideal x + y;')
    assert 'unknown variable' in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_ideal('ring x;\nideal @;')
    assert str(err.value).startswith('2:')


def test_tiebreak_statement():
    _, _, tiebreak = parse_ideal('ring x; ideal x+1; tiebreak grevlex;')
    assert tiebreak == 'grevlex'


def test_fan_document_round_trip(tmp_path):
    ideal, variables, tiebreak = parse_ideal('ring x,y; ideal x+y+1;')
    graph = enumerate_restricted_fan(ideal, tiebreak)
    gens = [g.text(variables) for g in ideal.generators]
    doc = fan_to_document(graph, variables, gens, tiebreak, 'restricted')
    text = dumps_document(doc)
    assert dumps_document(loads_document(text)) == text  # byte-identical
    back = document_to_graph(loads_document(text))
    assert len(back.vertices) == len(graph.vertices)
    for v, w in zip(back.vertices, graph.vertices):
        assert v.cone.same_cone(w.cone)
        assert v.gb.key() == w.gb.key()
        assert v.representative == w.representative
    assert [(e.i, e.j, e.direction) for e in back.edges] == \
        [(e.i, e.j, e.direction) for e in graph.edges]


def test_cli_enumerate_and_regularity(tmp_path, capsys):
    src = tmp_path / 'ideal.txt'
    src.write_text('ring x,y; ideal x+y+1;')
    out = tmp_path / 'fan.json'
    assert main(['enumerate', str(src), '-o', str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc['metadata']['cone_count'] == 2
    assert doc['metadata']['edge_count'] == 1
    code = main(['regularity', str(out)])
    captured = capsys.readouterr()
    assert code == 0
    reg = json.loads(captured.out)
    assert reg['outcome'] == 'embedding'


def test_cli_classify(tmp_path, capsys):
    src = tmp_path / 'ideal.txt'
    src.write_text(THEOREM_TEXT)
    assert main(['classify', str(src), '--weight', '7,1,2,7']) == 0
    doc_a = json.loads(capsys.readouterr().out)
    assert main(['classify', str(src), '--weight', '7,1,3,8']) == 0
    doc_b = json.loads(capsys.readouterr().out)
    assert doc_a['basis'] != doc_b['basis']  # distinct cones 57 / 58
    assert doc_a['weight_position'] == 'Interior'


def test_cli_verify_paper_cert(capsys):
    assert main(['verify-paper-cert', '--report', 'json']) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc['ok'] and len(doc['edges']) == 20


def test_cli_parse_error_exit_code(tmp_path, capsys):
    src = tmp_path / 'bad.txt'
    src.write_text('ring x; ideal @;')
    assert main(['enumerate', str(src)]) == 1


def test_cli_usage_error():
    assert main(['no-such-command']) == 1


def test_regularity_nonregular_document():
    from groefan.fan import FanVertex, FanEdge, FanGraph
    from groefan.regularity import check_regularity
    triangle = [(1, 2, (1, 0)), (2, 3, (0, 1)), (1, 3, (-1, 0))]
    g = FanGraph([FanVertex(None, None, ()) for _ in range(3)],
                 [FanEdge(i, j, d, (1, 1)) for i, j, d in triangle], 2)
    doc = regularity_to_document(g, check_regularity(g))
    assert doc['outcome'] == 'non-regular'
    assert doc['forced_zero_edges']
