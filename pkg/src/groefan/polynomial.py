"""Sparse multivariate polynomials over exact rationals."""

from math import gcd

from .rationals import QQ, format_rational
from .orders import GT


def _canonical_key(exponent):
    # graded lex, descending when used with sorted(..., reverse=True)
    return (sum(exponent), exponent)


class Term:
    """A nonzero coefficient attached to an exponent vector."""

    __slots__ = ('coefficient', 'exponent')

    def __init__(self, coefficient, exponent):
        coefficient = QQ(coefficient)
        assert coefficient != 0, 'zero coefficient'
        self.coefficient = coefficient
        self.exponent = tuple(int(e) for e in exponent)
        assert all(e >= 0 for e in self.exponent), 'negative exponent'

    def __eq__(self, other):
        return (self.coefficient, self.exponent) == (other.coefficient, other.exponent)

    def __hash__(self):
        return hash((self.coefficient, self.exponent))

    def __repr__(self):
        return 'Term(%s, %r)' % (self.coefficient, self.exponent)


class Polynomial:
    """Immutable polynomial; equal polynomials have equal representations.

    Terms are stored sorted by graded lex on exponents, descending, with no
    zero coefficients and no duplicate exponents.
    """

    __slots__ = ('terms', 'nvars')

    def __init__(self, terms, nvars=None):
        merged = {}
        for t in terms:
            if isinstance(t, Term):
                exp, coeff = t.exponent, t.coefficient
            else:
                coeff, exp = t
                exp = tuple(int(e) for e in exp)
                coeff = QQ(coeff)
            merged[exp] = merged.get(exp, QQ(0)) + coeff
        merged = {e: c for e, c in merged.items() if c != 0}
        if nvars is None:
            assert merged, 'cannot infer variable count of the zero polynomial'
            nvars = len(next(iter(merged)))
        for e in merged:
            assert len(e) == nvars, 'dimension mismatch'
        self.nvars = nvars
        self.terms = tuple(Term(merged[e], e)
                           for e in sorted(merged, key=_canonical_key, reverse=True))

    @classmethod
    def zero(cls, nvars):
        return cls((), nvars=nvars)

    @classmethod
    def constant(cls, value, nvars):
        value = QQ(value)
        if value == 0:
            return cls.zero(nvars)
        return cls([(value, (0,) * nvars)], nvars=nvars)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls([(coefficient, exponent)], nvars=len(exponent))

    def is_zero(self):
        return not self.terms

    def coefficient_of(self, exponent):
        exponent = tuple(exponent)
        for t in self.terms:
            if t.exponent == exponent:
                return t.coefficient
        return QQ(0)

    def exponents(self):
        return [t.exponent for t in self.terms]

    def total_degree(self):
        assert self.terms, 'zero polynomial'
        return max(sum(t.exponent) for t in self.terms)

    def is_homogeneous(self):
        degs = {sum(t.exponent) for t in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.terms + other.terms, nvars=self.nvars)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial([(-t.coefficient, t.exponent) for t in self.terms],
                          nvars=self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = QQ(other)
            return Polynomial([(t.coefficient * other, t.exponent) for t in self.terms],
                              nvars=self.nvars)
        assert self.nvars == other.nvars, 'dimension mismatch'
        out = []
        for s in self.terms:
            for t in other.terms:
                out.append((s.coefficient * t.coefficient,
                            tuple(a + b for a, b in zip(s.exponent, t.exponent))))
        return Polynomial(out, nvars=self.nvars)

    def __rmul__(self, other):
        return self.__mul__(other)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            assert self.nvars == other.nvars, 'dimension mismatch'
            return other
        return Polynomial.constant(other, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = self._coerce(other)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.terms))

    def key(self):
        """Hashable canonical form."""
        return tuple((t.exponent, QQ(t.coefficient)) for t in self.terms)

    def text(self, variables):
        """Render with the given variable names; inverse of io.parse_polynomial."""
        assert len(variables) == self.nvars, 'dimension mismatch'
        if not self.terms:
            return '0'
        chunks = []
        for t in self.terms:
            parts = []
            for name, e in zip(variables, t.exponent):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append('%s^%d' % (name, e))
            coeff = t.coefficient
            if not parts:
                body = format_rational(abs(coeff))
            elif abs(coeff) == 1:
                body = '*'.join(parts)
            else:
                body = format_rational(abs(coeff)) + '*' + '*'.join(parts)
            chunks.append(('- ' if coeff < 0 else '+ ') + body)
        out = ' '.join(chunks)
        if out.startswith('+ '):
            out = out[2:]
        elif out.startswith('- '):
            out = '-' + out[2:]
        return out

    def __repr__(self):
        return 'Polynomial(%s)' % self.text(['x%d' % (i + 1) for i in range(self.nvars)])


def initial_term(order, f):
    """The unique order-maximal term of a nonzero polynomial."""
    assert not f.is_zero(), 'zero polynomial'
    best = f.terms[0]
    for t in f.terms[1:]:
        if order.compare(t.exponent, best.exponent) == GT:
            best = t
    return best


def initial_form(w, f):
    """Sub-polynomial of f supported on the <.,w>-maximal exponents."""
    assert not f.is_zero(), 'zero polynomial'
    w = tuple(QQ(x) for x in w)
    assert len(w) == f.nvars, 'dimension mismatch'
    best = None
    keep = []
    for t in f.terms:
        val = sum(wi * e for wi, e in zip(w, t.exponent))
        if best is None or val > best:
            best = val
            keep = [t]
        elif val == best:
            keep.append(t)
    return Polynomial(keep, nvars=f.nvars)


def content_normalize(coeff_dict):
    """Scale an exponent->int dict to content 1 with positive leading sign kept."""
    g = 0
    for c in coeff_dict.values():
        g = gcd(g, abs(c))
    if g in (0, 1):
        return coeff_dict
    return {e: c // g for e, c in coeff_dict.items()}
