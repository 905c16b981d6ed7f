"""Ideal-file parsing and deterministic JSON serialization of fans."""

import json
import re

from .rationals import QQ, rational, format_rational
from .polynomial import Polynomial
from .groebner import Ideal, MarkedReducedGB
from .cones import Cone
from .fan import FanVertex, FanEdge, FanGraph


class ParseError(ValueError):
    """Input error with a line:column position."""

    def __init__(self, message, line, column):
        super().__init__('%d:%d: %s' % (line, column, message))
        self.line = line
        self.column = column


_TOKEN = re.compile(r'\s+|[A-Za-z_][A-Za-z_0-9]*|\d+|[;,+\-*^/]')


def _tokenize(text):
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError('unexpected character %r' % text[pos], line, col)
        chunk = m.group(0)
        if not chunk.isspace():
            tokens.append((chunk, line, col))
        for ch in chunk:
            if ch == '\n':
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    tokens.append((None, line, col))  # end marker
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, what):
        tok, line, col = self.next()
        if tok != what:
            raise ParseError('expected %r, found %r' % (what, tok), line, col)

    def fail(self, message):
        _, line, col = self.tokens[self.pos]
        raise ParseError(message, line, col)


def parse_ideal(text):
    """Parse `ring x1,x2; ideal f1, f2; [tiebreak lex;]` into an Ideal.

    Returns (ideal, variables, tiebreak). Polynomials use `+ - * ^` with `*`
    optional between factors and rational coefficients written as p/q.
    """
    p = _Parser(text)
    p.expect('ring')
    variables = []
    while True:
        tok, line, col = p.next()
        if tok is None or not re.fullmatch(r'[A-Za-z_][A-Za-z_0-9]*', tok or ''):
            raise ParseError('expected a variable name', line, col)
        if tok in variables:
            raise ParseError('duplicate variable %r' % tok, line, col)
        variables.append(tok)
        if p.peek() == ',':
            p.next()
            continue
        break
    p.expect(';')
    p.expect('ideal')
    generators = []
    while True:
        _, line, col = p.tokens[p.pos]
        poly = _parse_polynomial(p, variables)
        if poly.is_zero():
            raise ParseError('zero generator', line, col)
        generators.append(poly)
        if p.peek() == ',':
            p.next()
            continue
        break
    p.expect(';')
    tiebreak = 'lex'
    if p.peek() == 'tiebreak':
        p.next()
        tok, line, col = p.next()
        if tok not in ('lex', 'grevlex'):
            raise ParseError('unknown tiebreak %r' % tok, line, col)
        tiebreak = tok
        p.expect(';')
    if p.peek() is not None:
        p.fail('trailing input after the final statement')
    return Ideal(generators, nvars=len(variables)), variables, tiebreak


def _parse_polynomial(p, variables):
    terms = []
    first = True
    while True:
        sign = QQ(1)
        tok = p.peek()
        if tok in ('+', '-'):
            p.next()
            if tok == '-':
                sign = QQ(-1)
        elif not first:
            break
        terms.append(_parse_term(p, variables, sign))
        first = False
    return Polynomial(terms, nvars=len(variables))


def _parse_term(p, variables, sign):
    coeff = sign
    exponent = [0] * len(variables)
    saw_factor = False
    while True:
        tok, line, col = p.tokens[p.pos]
        if tok is not None and tok.isdigit():
            p.next()
            value = QQ(int(tok))
            if p.peek() == '/':
                p.next()
                den, dl, dc = p.next()
                if den is None or not den.isdigit() or int(den) == 0:
                    raise ParseError('expected a nonzero denominator', dl, dc)
                value = value / int(den)
            coeff = coeff * value
            saw_factor = True
        elif tok in variables:
            p.next()
            e = 1
            if p.peek() == '^':
                p.next()
                etok, el, ec = p.next()
                if etok is None or not etok.isdigit():
                    raise ParseError('expected an integer exponent', el, ec)
                e = int(etok)
            exponent[variables.index(tok)] += e
            saw_factor = True
        elif tok is not None and re.fullmatch(r'[A-Za-z_][A-Za-z_0-9]*', tok):
            raise ParseError('unknown variable %r' % tok, line, col)
        else:
            break
        if p.peek() == '*':
            p.next()
            continue
    if not saw_factor:
        p.fail('expected a term')
    return (coeff, tuple(exponent))


# -- JSON documents --------------------------------------------------------


def _rat_list(vec):
    return [format_rational(x) for x in vec]


def _homog_name(variables):
    k = 0
    while 'h%d' % k in variables:
        k += 1
    return 'h%d' % k


def fan_to_document(graph, variables, generators_text, tiebreak, kind):
    """Structured, fully rational-exact description of a FanGraph."""
    cones = []
    for v in graph.vertices:
        gb_vars = variables
        if v.gb.nvars == len(variables) + 1:
            gb_vars = list(variables) + [_homog_name(variables)]
        cones.append({
            'id': v.index,
            'basis': [{'mark': list(mark), 'polynomial': poly.text(gb_vars)}
                      for mark, poly in v.gb],
            'facets': [list(a) for a in v.cone.facet_normals()],
            'representative': _rat_list(v.representative),
        })
    edges = [{'i': e.i, 'j': e.j,
              'direction': list(e.direction),
              'facet_point': _rat_list(e.facet_point)}
             for e in graph.edges]
    return {
        'ideal': {'variables': list(variables), 'generators': list(generators_text)},
        'tiebreak': tiebreak,
        'kind': kind,
        'cones': cones,
        'edges': edges,
        'metadata': {'cone_count': len(cones), 'edge_count': len(edges)},
    }


def document_to_graph(doc):
    """Rebuild the FanGraph (cones from stored facets) from a document."""
    n = len(doc['ideal']['variables'])
    vertices = []
    for c in doc['cones']:
        cone = Cone((), [tuple(a) for a in c['facets']], n=n)
        rep = tuple(rational(x) for x in c['representative'])
        gb = _basis_from_document(c['basis'], doc['ideal']['variables'])
        vertices.append(FanVertex(gb, cone, rep))
    edges = [FanEdge(e['i'], e['j'], tuple(int(x) for x in e['direction']),
                     tuple(rational(x) for x in e['facet_point']))
             for e in doc['edges']]
    return FanGraph(vertices, edges, n)


def _basis_from_document(entries, variables):
    nv = len(entries[0]['mark'])
    names = list(variables)
    if nv == len(variables) + 1:
        names = names + [_homog_name(variables)]
    elements = []
    for entry in entries:
        poly = parse_polynomial_text(entry['polynomial'], names)
        elements.append((tuple(entry['mark']), poly))
    return MarkedReducedGB(elements)


def parse_polynomial_text(text, variables):
    """Parse a bare polynomial in the given variables."""
    p = _Parser(text)
    poly = _parse_polynomial(p, variables)
    if p.peek() is not None:
        p.fail('trailing input after the polynomial')
    return poly


def regularity_to_document(graph, outcome):
    from .regularity import Embedding
    if isinstance(outcome, Embedding):
        return {
            'outcome': 'embedding',
            'note': 'passes necessary condition',
            'scalars': _rat_list(outcome.scalars),
            'coordinates': {str(i): _rat_list(c)
                            for i, c in sorted(outcome.coordinates.items())},
        }
    return {
        'outcome': 'non-regular',
        'certificate': _rat_list(outcome.certificate.y),
        'forced_zero_edges': [{'i': e.i, 'j': e.j} for e in outcome.witness_edges],
    }


def dumps_document(doc):
    """Deterministic serialization; serialize-parse-serialize is byte-identical."""
    return json.dumps(doc, indent=2, sort_keys=True) + '\n'


def loads_document(text):
    return json.loads(text)
