"""Rational numbers.

All exact constants are :class:`gmpy2.mpq` instances. This module only adds
parsing, the ``"p/q"`` text form and a few combinatorial helpers.
"""
from fractions import Fraction
from numbers import Integral

from gmpy2 import mpq

__all__ = ["mpq", "Q", "as_rational", "format_rational", "parse_rational",
           "pochhammer", "factorial", "binomial"]


def as_rational(x):
    """Coerce ``x`` (int, str, Fraction, mpq) to an ``mpq``."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, type(mpq(0))):
        return x
    if hasattr(x, "p") and hasattr(x, "q"):  # sympy Rational / Integer
        return mpq(int(x.p), int(x.q))
    if isinstance(x, Integral):
        return mpq(int(x))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


Q = as_rational


def parse_rational(text):
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        q = int(q)
        if q <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return mpq(int(p), q)
    return mpq(int(text))


def format_rational(q):
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def pochhammer(a, k):
    """Rising factorial (a)_k for a nonnegative integer k."""
    out = mpq(1)
    a = as_rational(a)
    for i in range(k):
        out *= a + i
    return out


def factorial(n):
    return pochhammer(1, n)


def binomial(a, k):
    """Generalized binomial coefficient C(a, k) for rational a."""
    a = as_rational(a)
    out = mpq(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out
