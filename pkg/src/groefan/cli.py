"""Command line interface: enumerate, regularity, extended, verify-paper-cert, classify."""

import argparse
import sys
import time

from .rationals import rational, primitive_vector
from .groebner import gb_for_weight
from .orders import TermOrder
from .fan import enumerate_restricted_fan, extended_fan_slice
from .regularity import check_regularity, Embedding
from .cones import INTERIOR, BOUNDARY, OUTSIDE
from . import certificate as cert
from .io import (parse_ideal, ParseError, fan_to_document, document_to_graph,
                 regularity_to_document, dumps_document, loads_document)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NONREGULAR = 2


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='fan',
        description='Restricted Groebner fans, regularity, and certificate replay.')
    parser.add_argument('--threads', type=int, default=1,
                        help='worker hint; execution is sequential and '
                             'results are identical for any value')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('enumerate', help='enumerate the restricted Groebner fan')
    p.add_argument('file')
    p.add_argument('--tiebreak', choices=('lex', 'grevlex'), default=None)
    p.add_argument('-o', '--output', default=None)

    p = sub.add_parser('extended', help='extended-fan slice via homogenization')
    p.add_argument('file')
    p.add_argument('--tiebreak', choices=('lex', 'grevlex'), default=None)
    p.add_argument('-o', '--output', default=None)

    p = sub.add_parser('regularity', help='normal-fan test on an enumerated fan')
    p.add_argument('fan_file')
    p.add_argument('-o', '--output', default=None)

    p = sub.add_parser('verify-paper-cert',
                       help='replay the embedded non-regularity certificate')
    p.add_argument('--report', choices=('json', 'text'), default='text')

    p = sub.add_parser('classify', help='reduced GB and cone for a weight vector')
    p.add_argument('file')
    p.add_argument('--weight', required=True,
                   help='comma-separated positive rationals, e.g. 10,1,2,6')
    p.add_argument('--tiebreak', choices=('lex', 'grevlex'), default=None)
    return parser


def _read_ideal(path, tiebreak_flag):
    with open(path, encoding='utf-8') as fh:
        text = fh.read()
    ideal, variables, tiebreak = parse_ideal(text)
    if tiebreak_flag is not None:
        tiebreak = tiebreak_flag
    return ideal, variables, tiebreak


def _emit(doc, output):
    text = dumps_document(doc)
    if output:
        with open(output, 'w', encoding='utf-8') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args, extended=False):
    ideal, variables, tiebreak = _read_ideal(args.file, args.tiebreak)
    t0 = time.time()
    if extended:
        graph = extended_fan_slice(ideal, tiebreak)
    else:
        graph = enumerate_restricted_fan(ideal, tiebreak)
    elapsed = time.time() - t0
    gens = [g.text(variables) for g in ideal.generators]
    kind = 'extended-slice' if extended else 'restricted'
    doc = fan_to_document(graph, variables, gens, tiebreak, kind)
    _emit(doc, args.output)
    print('%s fan: %d cones, %d edges (%.1fs)'
          % (kind, len(graph.vertices), len(graph.edges), elapsed),
          file=sys.stderr)
    return EXIT_OK


def _cmd_regularity(args):
    with open(args.fan_file, encoding='utf-8') as fh:
        doc = loads_document(fh.read())
    graph = document_to_graph(doc)
    outcome = check_regularity(graph)
    _emit(regularity_to_document(graph, outcome), args.output)
    return EXIT_OK if isinstance(outcome, Embedding) else EXIT_NONREGULAR


def _cmd_verify(args):
    report = cert.verify_subgraph()
    if args.report == 'json':
        doc = dict(report)
        doc['edges'] = [{k: (list(v) if isinstance(v, tuple) else v)
                         for k, v in row.items()} for row in report['edges']]
        _emit(doc, None)
    else:
        print('flows conserved: %s' % report['flows_conserved'])
        print('orthogonality (single 18 at (29,30)): %s' % report['orthogonality'])
        print('farkas vector accepted: %s' % report['farkas'])
        for row in report['edges']:
            marks = ' '.join('%s=%s' % (k, 'ok' if v else 'FAIL')
                             for k, v in row.items() if k not in ('edge', 'ok'))
            print('edge %-8s %s' % ('%d-%d' % row['edge'], marks))
        print('verdict: %s' % ('all checks pass' if report['ok'] else 'FAILED'))
    return EXIT_OK if report['ok'] else EXIT_NONREGULAR


def _cmd_classify(args):
    ideal, variables, tiebreak = _read_ideal(args.file, args.tiebreak)
    try:
        weight = tuple(rational(x) for x in args.weight.split(','))
    except (ValueError, ZeroDivisionError):
        raise ParseError('malformed weight vector', 0, 0)
    if len(weight) != len(variables):
        print('error: weight length does not match the ring', file=sys.stderr)
        return EXIT_USAGE
    gb = gb_for_weight(ideal, weight, TermOrder((), tiebreak))
    from .fan import restricted_groebner_cone
    cone = restricted_groebner_cone(gb)
    place = cone.contains(weight)
    doc = {
        'weight': [str(x) for x in args.weight.split(',')],
        'tiebreak': tiebreak,
        'basis': [{'mark': list(mark), 'polynomial': poly.text(variables)}
                  for mark, poly in gb],
        'cone_facets': [list(a) for a in cone.facet_normals()],
        'representative': [str(x) for x in primitive_vector(
            cone.relative_interior_point())],
        'weight_position': {INTERIOR: 'Interior', BOUNDARY: 'Boundary',
                            OUTSIDE: 'Outside'}[place],
    }
    _emit(doc, None)
    return EXIT_OK


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == 'enumerate':
            return _cmd_enumerate(args)
        if args.command == 'extended':
            return _cmd_enumerate(args, extended=True)
        if args.command == 'regularity':
            return _cmd_regularity(args)
        if args.command == 'verify-paper-cert':
            return _cmd_verify(args)
        if args.command == 'classify':
            return _cmd_classify(args)
    except (ParseError, FileNotFoundError, ValueError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
