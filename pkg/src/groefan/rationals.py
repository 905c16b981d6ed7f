"""Exact rational scalars and integer vector utilities."""

from fractions import Fraction
from math import gcd

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is normally available
    QQ = Fraction


def rational(value):
    """Coerce ints, Fractions, mpq or 'p/q' strings to the working rational type."""
    if isinstance(value, str):
        if '/' in value:
            p, q = value.split('/')
            return QQ(int(p), int(q))
        return QQ(int(value))
    return QQ(value)


def format_rational(value):
    """Serialize a rational as 'p' or 'p/q' in lowest terms."""
    value = QQ(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%s/%s' % (value.numerator, value.denominator)


def vector_lcm_denominator(vec):
    lcm = 1
    for x in vec:
        d = QQ(x).denominator
        lcm = lcm * d // gcd(lcm, int(d))
    return lcm


def primitive_vector(vec):
    """Scale a rational vector to coprime integers, preserving orientation."""
    scale = vector_lcm_denominator(vec)
    ints = [int(QQ(x) * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(x // g for x in ints)


def dot(u, v):
    assert len(u) == len(v), 'dimension mismatch'
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def is_zero_vector(u):
    return all(x == 0 for x in u)
