"""Matrix-style term orders: integer weight rows plus a named tiebreak."""

from .rationals import QQ, primitive_vector

LT, EQ, GT = -1, 0, 1

TIEBREAKS = ('lex', 'grevlex')


class TermOrder:
    """Weight rows applied in sequence, ties resolved by lex or graded revlex.

    Rows may be given with rational entries; each row is scaled to a
    primitive integer vector, which does not change the induced order.
    """

    def __init__(self, rows=(), tiebreak='lex'):
        assert tiebreak in TIEBREAKS, 'unknown tiebreak %r' % tiebreak
        self.rows = tuple(primitive_vector(row) for row in rows)
        self.tiebreak = tiebreak

    def compare(self, a, b):
        """Return LT, EQ or GT for monomials x^a vs x^b; EQ only when a == b."""
        for row in self.rows:
            assert len(row) == len(a) == len(b), 'dimension mismatch'
            wa = sum(r * e for r, e in zip(row, a))
            wb = sum(r * e for r, e in zip(row, b))
            if wa != wb:
                return GT if wa > wb else LT
        return _tiebreak_compare(self.tiebreak, a, b)

    def prepend(self, row):
        return TermOrder((tuple(row),) + self.rows, self.tiebreak)

    def greater(self, a, b):
        return self.compare(a, b) == GT

    def max_exponent(self, exponents):
        exponents = list(exponents)
        best = exponents[0]
        for e in exponents[1:]:
            if self.compare(e, best) == GT:
                best = e
        return best

    def __repr__(self):
        return 'TermOrder(rows=%r, tiebreak=%r)' % (self.rows, self.tiebreak)


def _tiebreak_compare(tiebreak, a, b):
    if a == b:
        return EQ
    if tiebreak == 'lex':
        for x, y in zip(a, b):
            if x != y:
                return GT if x > y else LT
        return EQ
    da, db = sum(a), sum(b)
    if da != db:
        return GT if da > db else LT
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return LT if x > y else GT
    return EQ


def compare_monomials(order, a, b):
    assert len(a) == len(b), 'dimension mismatch'
    return order.compare(tuple(a), tuple(b))


def check_term_order(order, n):
    """True iff for every variable the first weight row touching it is positive there.

    This guarantees 1 < x_i before the tiebreak gets a say; combined with the
    multiplicativity of weight comparisons it certifies a genuine term order.
    """
    for i in range(n):
        decided = False
        for row in order.rows:
            if len(row) != n:
                return False
            if row[i] != 0:
                if row[i] < 0:
                    return False
                decided = True
                break
        if not decided:
            # both tiebreaks satisfy 1 < x_i
            continue
    return True


def lex_order(n=None):
    return TermOrder((), 'lex')


def grevlex_order(n=None):
    return TermOrder((), 'grevlex')


def weight_order(w, tiebreak='lex'):
    """Order refining the weight vector w (rationals allowed) by a tiebreak."""
    return TermOrder((tuple(QQ(x) for x in w),), tiebreak)
