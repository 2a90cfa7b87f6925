"""Dense univariate polynomials and rational functions over Q."""
from math import gcd as igcd

from gmpy2 import mpq

from .rational import as_rational, format_rational, parse_rational

__all__ = ["Poly", "RationalFunction", "poly_gcd", "poly_lcm"]

_ZERO = mpq(0)
_ONE = mpq(1)


def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Polynomial ``sum c[i] * var**i`` with ``mpq`` coefficients."""

    __slots__ = ("c", "var")

    def __init__(self, coeffs=(), var="t"):
        self.c = _strip(as_rational(x) for x in coeffs)
        self.var = var

    @classmethod
    def _raw(cls, cs, var):
        p = cls.__new__(cls)
        p.c = _strip(cs)
        p.var = var
        return p

    @classmethod
    def const(cls, a, var="t"):
        return cls((a,), var)

    @classmethod
    def x(cls, var="t"):
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots, var="t"):
        p = cls.const(1, var)
        for r in roots:
            p = p * cls((-as_rational(r), 1), var)
        return p

    # queries
    @property
    def degree(self):
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else _ZERO

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def is_constant(self):
        return len(self.c) <= 1

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else _ZERO

    def valuation(self):
        """Order of vanishing at 0 (``None`` for the zero polynomial)."""
        for i, a in enumerate(self.c):
            if a != 0:
                return i
        return None

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly._raw((as_rational(other),), self.var)

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        o = self._coerce(other)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] += y
        return Poly._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-x for x in self.c], self.var)

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, Poly):
            k = as_rational(other)
            return Poly._raw([k * x for x in self.c], self.var)
        a, b = self.c, other.c
        if not a or not b:
            return Poly._raw((), self.var)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly.const(1, self.var)
        b = self
        while n:
            if n & 1:
                out = out * b
            n >>= 1
            if n:
                b = b * b
        return out

    def __truediv__(self, other):
        if isinstance(other, (Poly, RationalFunction)):
            return RationalFunction(self, other) if isinstance(other, Poly) \
                else RationalFunction(self) / other
        k = as_rational(other)
        return Poly._raw([x / k for x in self.c], self.var)

    def __rtruediv__(self, other):
        return RationalFunction(self._coerce(other), self)

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = len(other.c) - 1
        inv = 1 / other.c[-1]
        if len(r) - 1 < db:
            return Poly._raw((), self.var), self
        q = [_ZERO] * (len(r) - db)
        b = other.c
        for k in range(len(r) - 1 - db, -1, -1):
            coef = r[k + db] * inv
            q[k] = coef
            if coef != 0:
                for j in range(db + 1):
                    r[k + j] -= coef * b[j]
        return Poly._raw(q, self.var), Poly._raw(r[:db], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self):
        return Poly._raw([i * self.c[i] for i in range(1, len(self.c))], self.var)

    def __call__(self, x):
        out = _ZERO if not isinstance(x, (Poly, RationalFunction)) else x * 0
        for a in reversed(self.c):
            out = out * x + a
        return out

    def compose(self, other):
        return self(other)

    def monic(self):
        if not self.c:
            return self
        inv = 1 / self.c[-1]
        return Poly._raw([x * inv for x in self.c], self.var)

    def content(self):
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        if not self.c:
            return _ONE
        num = 0
        den = 1
        for x in self.c:
            num = igcd(num, int(x.numerator))
            den = den * int(x.denominator) // igcd(den, int(x.denominator))
        return mpq(num, den)

    def primitive(self):
        """Integral primitive part with positive leading coefficient."""
        if not self.c:
            return self
        c = self.content()
        if self.c[-1] < 0:
            c = -c
        return Poly._raw([x / c for x in self.c], self.var)

    def rename(self, var):
        return Poly._raw(self.c, var)

    # comparison
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, RationalFunction):
            return other == self
        try:
            return self.c == _strip((as_rational(other),))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            mon = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            parts.append(format_rational(a) + ("*" + mon if mon else ""))
        return " + ".join(parts)

    def to_list(self):
        return [format_rational(x) for x in self.c]

    @classmethod
    def from_list(cls, items, var="t"):
        return cls([parse_rational(x) if isinstance(x, str) else x for x in items], var)


def poly_gcd(a, b):
    """Monic gcd (zero only when both inputs vanish)."""
    while b.c:
        a, b = b, a.divmod(b)[1]
        if b.c:
            b = b.monic()
    return a.monic()


def poly_lcm(a, b):
    if not a.c or not b.c:
        return Poly._raw((), a.var)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class RationalFunction:
    """Reduced quotient of univariate polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        if not isinstance(num, Poly):
            var = den.var if isinstance(den, Poly) else "t"
            num = Poly.const(num, var)
        if den is None:
            den = Poly.const(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.var)
        if not den.c:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if not num.c:
                den = Poly.const(1, num.var)
            elif den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.c[-1]
            if lc != 1:
                num = num * (1 / lc)
                den = den.monic()
        self.num = num
        self.den = den

    @property
    def var(self):
        return self.num.var

    @classmethod
    def const(cls, a, var="t"):
        return cls(Poly.const(a, var), _reduced=True)

    def is_zero(self):
        return not self.num.c

    def __bool__(self):
        return bool(self.num.c)

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, _reduced=True)
        return RationalFunction(Poly.const(other, self.var), _reduced=True)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        if o.den.degree == 0:
            return RationalFunction(self.num + o.num * self.den, self.den, _reduced=True)
        if self.den.degree == 0:
            return RationalFunction(self.num * o.den + o.num, o.den, _reduced=True)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RationalFunction(self.num * o.den + o.num * self.den,
                                    self.den * o.den, _reduced=True)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RationalFunction(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (RationalFunction, Poly)):
            k = as_rational(other)
            if k == 0:
                return RationalFunction(Poly((), self.var), _reduced=True)
            return RationalFunction(self.num * k, self.den, _reduced=True)
        o = self._coerce(other)
        if not self.num.c or not o.num.c:
            return RationalFunction(Poly((), self.var), _reduced=True)
        # cross-cancel to keep sizes small
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if d2.degree > 0 and n1.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if d1.degree > 0 and n2.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        den = d1 * d2
        num = n1 * n2
        lc = den.c[-1]
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        return RationalFunction(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, (RationalFunction, Poly)):
            return self * (1 / as_rational(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    def derivative(self):
        n, d = self.num, self.den
        if d.degree == 0:
            return RationalFunction(n.derivative(), d, _reduced=True)
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        """Evaluate at a rational number or substitute a rational function."""
        if isinstance(x, (RationalFunction, Poly)):
            x = x if isinstance(x, RationalFunction) else RationalFunction(x, _reduced=True)
            return self._compose(x)
        x = as_rational(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def _compose(self, x):
        # homogenized evaluation keeps a single common denominator
        p, q = x.num, x.den
        m = max(self.num.degree, self.den.degree, 0)
        qpow = [Poly.const(1, p.var)]
        for _ in range(m):
            qpow.append(qpow[-1] * q)

        def hom(poly):
            acc = Poly((), p.var)
            pk = Poly.const(1, p.var)
            for k, a in enumerate(poly.c):
                if a != 0:
                    acc = acc + pk * qpow[m - k] * a
                pk = pk * p
            return acc

        return RationalFunction(hom(self.num), hom(self.den))

    def valuation(self):
        """Order at 0: positive for zeros, negative for poles."""
        if not self.num.c:
            return None
        return self.num.valuation() - self.den.valuation()

    def degree_at_infinity(self):
        """``deg num - deg den``; the function behaves like t**that at infinity."""
        return self.num.degree - self.den.degree

    def to_series(self, order):
        """Laurent expansion at 0, valid below ``var**order``."""
        from .series import TruncatedSeries
        if not self.num.c:
            return TruncatedSeries([], valid=order, base=order, var=self.var)
        n = TruncatedSeries.exact(self.num.c, var=self.var)
        d = TruncatedSeries.exact(self.den.c, var=self.var)
        return n * d.reciprocal(order=order - n.leading_exponent)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den.degree == 0 and self.num == other
        try:
            return self.den.degree == 0 and self.num == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def to_dict(self):
        return {"numerator_coeffs": self.num.to_list(),
                "denominator_coeffs": self.den.to_list()}

    @classmethod
    def from_dict(cls, d, var="t"):
        return cls(Poly.from_list(d["numerator_coeffs"], var),
                   Poly.from_list(d["denominator_coeffs"], var))

