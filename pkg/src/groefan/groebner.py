"""Buchberger's algorithm, reduced Groebner bases, initial ideals, homogenization."""

from .rationals import QQ
from .orders import TermOrder, GT, check_term_order
from .polynomial import Polynomial, Term, initial_form, content_normalize, _canonical_key


class LimitExceededError(RuntimeError):
    """Raised by the nontermination guard; usually means an invalid order."""


class Ideal:
    """A nonempty list of nonzero generators in a fixed ring Q[x_1..x_n]."""

    def __init__(self, generators, nvars=None):
        generators = tuple(generators)
        assert generators, 'ideal needs at least one generator'
        for g in generators:
            assert isinstance(g, Polynomial) and not g.is_zero(), 'zero generator'
        if nvars is None:
            nvars = generators[0].nvars
        for g in generators:
            assert g.nvars == nvars, 'dimension mismatch'
        self.generators = generators
        self.nvars = nvars

    def __repr__(self):
        return 'Ideal(%r)' % (self.generators,)


class MarkedReducedGB:
    """Reduced Groebner basis with marked initial exponents, stored canonically."""

    def __init__(self, elements):
        elements = [(tuple(mark), poly) for mark, poly in elements]
        for mark, poly in elements:
            assert poly.coefficient_of(mark) == 1, 'polynomial not monic at its mark'
        self.elements = tuple(sorted(elements, key=lambda mp: _canonical_key(mp[0])))

    @property
    def nvars(self):
        return self.elements[0][1].nvars

    def marks(self):
        return [mark for mark, _ in self.elements]

    def polynomials(self):
        return [poly for _, poly in self.elements]

    def key(self):
        return tuple((mark, poly.key()) for mark, poly in self.elements)

    def __eq__(self, other):
        return isinstance(other, MarkedReducedGB) and self.elements == other.elements

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return 'MarkedReducedGB(%d elements)' % len(self.elements)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _lead(pdict, order):
    lead = None
    for e in pdict:
        if lead is None or order.compare(e, lead) == GT:
            lead = e
    return lead


def _top_reduce(pdict, basis, order, guard):
    """Fraction-free top reduction of an integer-coefficient dict."""
    while pdict:
        lead = _lead(pdict, order)
        hit = None
        for blead, bdict in basis:
            if _divides(blead, lead):
                hit = (blead, bdict)
                break
        if hit is None:
            return pdict, lead
        guard[0] -= 1
        if guard[0] < 0:
            raise LimitExceededError(
                'reduction step limit exceeded; the order is probably not a '
                'term order on this input')
        blead, bdict = hit
        shift = _exp_sub(lead, blead)
        c = pdict[lead]
        bc = bdict[blead]
        new = {}
        for e, v in pdict.items():
            new[e] = v * bc
        for e, v in bdict.items():
            t = _exp_add(e, shift)
            new[t] = new.get(t, 0) - c * v
        pdict = content_normalize({e: v for e, v in new.items() if v != 0})
    return pdict, None


def _poly_to_intdict(poly):
    denom = 1
    for t in poly.terms:
        d = int(QQ(t.coefficient).denominator)
        denom = denom * d // _gcd(denom, d)
    out = {t.exponent: int(QQ(t.coefficient) * denom) for t in poly.terms}
    return content_normalize(out)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def buchberger(ideal, order, pair_limit=50000, step_limit=2000000):
    """Unique reduced Groebner basis of the ideal under the given matrix order.

    Works for genuine term orders, and for weight orders on homogeneous input;
    the guard raises LimitExceededError instead of looping on invalid orders.
    """
    guard = [step_limit]
    basis = []  # (lead, intdict)
    pairs = set()

    def push(pdict):
        lead = _lead(pdict, order)
        idx = len(basis)
        for i in range(idx):
            pairs.add((i, idx))
        basis.append((lead, pdict))

    for g in ideal.generators:
        push(_poly_to_intdict(g))

    processed = 0
    while pairs:
        best = None
        best_lcm = None
        for (i, j) in pairs:
            l = _exp_lcm(basis[i][0], basis[j][0])
            if best is None or order.compare(l, best_lcm) == -1 or \
                    (l == best_lcm and (i, j) < best):
                best, best_lcm = (i, j), l
        i, j = best
        pairs.discard(best)
        processed += 1
        if processed > pair_limit:
            raise LimitExceededError('S-pair limit exceeded')
        li, lj = basis[i][0], basis[j][0]
        if _exp_add(li, lj) == best_lcm:
            continue  # coprime leading monomials
        if _chain_criterion(basis, pairs, i, j, best_lcm):
            continue
        s = _spoly(basis[i], basis[j])
        if not s:
            continue
        s, lead = _top_reduce(s, basis, order, guard)
        if s:
            push(s)

    return _reduce_basis(basis, order, guard)


def _chain_criterion(basis, pairs, i, j, lcm_ij):
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if _divides(basis[k][0], lcm_ij):
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                return True
    return False


def _spoly(fi, fj):
    (li, di), (lj, dj) = fi, fj
    l = _exp_lcm(li, lj)
    ci, cj = di[li], dj[lj]
    si, sj = _exp_sub(l, li), _exp_sub(l, lj)
    out = {}
    for e, v in di.items():
        t = _exp_add(e, si)
        out[t] = out.get(t, 0) + cj * v
    for e, v in dj.items():
        t = _exp_add(e, sj)
        out[t] = out.get(t, 0) - ci * v
    return content_normalize({e: v for e, v in out.items() if v != 0})


def _reduce_basis(basis, order, guard):
    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for idx, (lead, pdict) in enumerate(basis):
        if any(_divides(ol, lead) and (ol != lead or oi < idx)
               for oi, (ol, _) in enumerate(basis) if oi != idx):
            continue
        keep.append((lead, pdict))
    # interreduce: full normal form of the tail against the other elements
    marked = []
    for lead, pdict in keep:
        poly = Polynomial([(c, e) for e, c in pdict.items()])
        marked.append((lead, poly))
    reduced = []
    for i, (lead, poly) in enumerate(marked):
        others = [marked[k] for k in range(len(marked)) if k != i]
        nf = _normal_form_poly(poly, others, guard)
        lc = nf.coefficient_of(lead)
        assert lc != 0, 'mark vanished during interreduction'
        nf = nf * (QQ(1) / lc)
        reduced.append((lead, nf))
    return MarkedReducedGB(reduced)


def _normal_form_poly(f, marked, guard):
    work = {t.exponent: QQ(t.coefficient) for t in f.terms}
    done = {}
    while work:
        exp = max(work, key=_canonical_key)
        coeff = work.pop(exp)
        hit = None
        for mark, g in marked:
            if _divides(mark, exp):
                hit = (mark, g)
                break
        if hit is None:
            done[exp] = done.get(exp, QQ(0)) + coeff
            continue
        guard[0] -= 1
        if guard[0] < 0:
            raise LimitExceededError('reduction step limit exceeded')
        mark, g = hit
        shift = _exp_sub(exp, mark)
        factor = coeff / g.coefficient_of(mark)
        for t in g.terms:
            if t.exponent == mark:
                continue
            tgt = _exp_add(t.exponent, shift)
            v = work.get(tgt, QQ(0)) - factor * t.coefficient
            if v == 0:
                work.pop(tgt, None)
            else:
                work[tgt] = v
    return Polynomial([(c, e) for e, c in done.items() if c != 0],
                      nvars=f.nvars)


def normal_form(f, basis, step_limit=200000):
    """Remainder of f under division by marked polynomials (monic at marks)."""
    if isinstance(basis, MarkedReducedGB):
        basis = list(basis.elements)
    basis = [(tuple(mark), poly) for mark, poly in basis]
    for mark, poly in basis:
        assert poly.coefficient_of(mark) == 1, 'divisor not monic at its mark'
    if f.is_zero():
        return f
    return _normal_form_poly(f, basis, [step_limit])


def gb_for_weight(ideal, w, tiebreak=None):
    """Reduced GB for the order (w | tiebreak); w must be strictly positive."""
    w = tuple(QQ(x) for x in w)
    assert len(w) == ideal.nvars, 'dimension mismatch'
    if not all(x > 0 for x in w):
        raise ValueError('weight vector must be strictly positive')
    if tiebreak is None:
        tiebreak = TermOrder((), 'lex')
    return buchberger(ideal, tiebreak.prepend(w))


def initial_ideal(gb):
    """Monomial ideal spanned by the marked exponents."""
    return Ideal([Polynomial.monomial(mark) for mark in gb.marks()],
                 nvars=gb.nvars)


def initial_forms_ideal(ideal, w, tiebreak=None):
    """Generators of in_w(I) for strictly positive w (not necessarily monomial)."""
    w = tuple(QQ(x) for x in w)
    if not all(x > 0 for x in w):
        raise ValueError('weight vector must be strictly positive')
    gb = gb_for_weight(ideal, w, tiebreak)
    return [initial_form(w, g) for g in gb.polynomials()]


def homogenize_polynomial(poly):
    """Append a grading variable as the last coordinate."""
    d = poly.total_degree()
    return Polynomial([(t.coefficient, t.exponent + (d - sum(t.exponent),))
                       for t in poly.terms], nvars=poly.nvars + 1)


def dehomogenize_polynomial(poly):
    """Set the last variable to 1 (terms may merge or cancel)."""
    return Polynomial([(t.coefficient, t.exponent[:-1]) for t in poly.terms],
                      nvars=poly.nvars - 1)


def homogenize(ideal, order=None):
    """Homogenization of I by a new last variable.

    A degree-compatible reduced GB is computed first (all-ones row prepended
    to the supplied order), then each element is homogenized; this generates
    the full homogenization, not just generator-wise lifts.
    """
    if order is None:
        order = TermOrder((), 'grevlex')
    graded = order.prepend((1,) * ideal.nvars)
    gb = buchberger(ideal, graded)
    return Ideal([homogenize_polynomial(g) for g in gb.polynomials()],
                 nvars=ideal.nvars + 1)


def initial_ideal_any_weight(ideal, w, tiebreak=None):
    """Generators of in_w(I) for an arbitrary (possibly negative) weight w.

    Route: homogenize, compute a GB of the homogenization under the lifted
    weight (w,0) -- valid because the homogenization is graded -- take
    weight-initial forms and set the grading variable to 1.
    """
    if tiebreak is None:
        tiebreak = TermOrder((), 'lex')
    w = tuple(QQ(x) for x in w)
    assert len(w) == ideal.nvars, 'dimension mismatch'
    ih = homogenize(ideal, tiebreak)
    wh = w + (QQ(0),)
    gb = buchberger(ih, tiebreak.prepend(wh))
    gens = []
    for g in gb.polynomials():
        de = dehomogenize_polynomial(initial_form(wh, g))
        if not de.is_zero():
            gens.append(de)
    assert gens, 'initial ideal unexpectedly zero'
    return gens


def canonical_ideal_key(generators, tiebreak=None):
    """Hashable key identifying the ideal spanned by the generators (via lex GB)."""
    if tiebreak is None:
        tiebreak = TermOrder((), 'lex')
    gb = buchberger(Ideal(generators), tiebreak)
    return gb.key()


def standard_monomials(marks, limit=10000):
    """All exponents outside the monomial ideal of the marks (zero-dim only)."""
    marks = [tuple(m) for m in marks]
    n = len(marks[0])
    seen = set()
    frontier = [(0,) * n]
    out = []
    while frontier:
        e = frontier.pop()
        if e in seen or any(_divides(m, e) for m in marks):
            continue
        seen.add(e)
        out.append(e)
        if len(out) > limit:
            raise LimitExceededError('standard monomial set looks infinite')
        for i in range(n):
            frontier.append(e[:i] + (e[i] + 1,) + e[i + 1:])
    return sorted(out, key=_canonical_key)
