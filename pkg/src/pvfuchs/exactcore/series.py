"""Ramified truncated power series with exact rational coefficients.

A series in the variable ``t`` with ramification ``r`` stores the
coefficients of ``t^(e/r)`` for consecutive integers ``e`` starting at
``base``.  ``valid`` is the exponent bound (same 1/r units) below which every
coefficient is known; ``valid=None`` marks an exact, finite Laurent
polynomial.
"""
from fractions import Fraction
from math import gcd, lcm

from gmpy2 import mpq

from .rational import as_rational, format_rational, parse_rational

__all__ = [
    "TruncatedSeries",
    "SeriesError",
    "pfq_series",
    "pfq_terminating",
    "series_product",
    "series_reciprocal",
    "series_derivative",
    "change_variable",
]

_ZERO = mpq(0)


class SeriesError(ValueError):
    pass


def _vmin(*vals):
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


class TruncatedSeries:
    __slots__ = ("var", "ram", "base", "coeffs", "valid")

    def __init__(self, coeffs, *, valid, base=0, ram=1, var="t"):
        if ram < 1:
            raise SeriesError("ramification must be positive")
        coeffs = [as_rational(c) for c in coeffs]
        if valid is not None:
            n = valid - base
            if n < 0:
                coeffs, base = [], valid
            else:
                coeffs = coeffs[:n] + [_ZERO] * (n - len(coeffs))
        # strip leading zeros
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        base += k
        coeffs = coeffs[k:]
        if valid is None:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if not coeffs:
                base = 0
        # reduce the ramification when the support allows it
        if ram > 1:
            d = ram
            for i, c in enumerate(coeffs):
                if c != 0:
                    d = gcd(d, base + i)
                    if d == 1:
                        break
            if coeffs:
                d = gcd(d, base)
            if valid is not None:
                d = gcd(d, valid)
            if d > 1:
                coeffs = coeffs[::d]
                if valid is not None:
                    coeffs = coeffs[: (valid - base) // d]
                base //= d
                valid = None if valid is None else valid // d
                ram //= d
        self.var = var
        self.ram = ram
        self.base = base
        self.coeffs = tuple(coeffs)
        self.valid = valid

    # constructors -------------------------------------------------------
    @classmethod
    def exact(cls, coeffs, base=0, ram=1, var="t"):
        return cls(coeffs, valid=None, base=base, ram=ram, var=var)

    @classmethod
    def constant(cls, c, var="t"):
        return cls.exact([c], var=var)

    @classmethod
    def monomial(cls, exponent, coeff=1, var="t"):
        e = Fraction(exponent)
        return cls.exact([coeff], base=e.numerator, ram=e.denominator, var=var)

    @classmethod
    def from_terms(cls, terms, *, valid_order, var="t"):
        """Build from ``{exponent: coeff}`` with rational exponents."""
        exps = [Fraction(e) for e in terms]
        r = 1
        for e in exps:
            r = lcm(r, e.denominator)
        if valid_order is not None:
            vo = Fraction(valid_order)
            r = lcm(r, vo.denominator)
            valid = int(vo * r)
        else:
            valid = None
        if not terms:
            return cls([], valid=valid, base=valid or 0, ram=r, var=var)
        lo = min(int(e * r) for e in exps)
        hi = max(int(e * r) for e in exps)
        dense = [_ZERO] * (hi - lo + 1)
        for e, c in terms.items():
            dense[int(Fraction(e) * r) - lo] += as_rational(c)
        return cls(dense, valid=valid, base=lo, ram=r, var=var)

    # basic queries ------------------------------------------------------
    @property
    def is_exact(self):
        return self.valid is None

    @property
    def valid_order(self):
        """Exponent bound in units of the variable (``None`` if exact)."""
        return None if self.valid is None else Fraction(self.valid, self.ram)

    @property
    def leading_exponent(self):
        if not self.coeffs:
            return None
        return Fraction(self.base, self.ram)

    @property
    def leading_coefficient(self):
        return self.coeffs[0] if self.coeffs else _ZERO

    def is_zero(self):
        return not any(self.coeffs)

    def nterms(self):
        """Number of known coefficients past the leading exponent, in whole
        steps of the variable."""
        if self.valid is None:
            return None
        return Fraction(self.valid - self.base, self.ram)

    def coefficient(self, exponent):
        e = Fraction(exponent) * self.ram
        if e.denominator != 1:
            return _ZERO
        e = int(e)
        if self.valid is not None and e >= self.valid:
            raise SeriesError(
                f"coefficient of {self.var}^{Fraction(exponent)} is beyond the "
                f"valid order {self.valid_order}")
        k = e - self.base
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def terms(self):
        """Nonzero ``(exponent, coefficient)`` pairs in increasing order."""
        return [(Fraction(self.base + k, self.ram), c)
                for k, c in enumerate(self.coeffs) if c != 0]

    def _end(self):
        return self.valid if self.valid is not None else self.base + len(self.coeffs)

    # alignment ----------------------------------------------------------
    def with_ramification(self, r):
        """Dense coefficient list, base and valid expressed in 1/r units."""
        if r % self.ram:
            raise SeriesError("target ramification must be a multiple")
        m = r // self.ram
        if m == 1:
            return list(self.coeffs), self.base, self.valid
        dense = [_ZERO] * (len(self.coeffs) * m)
        for i, c in enumerate(self.coeffs):
            dense[i * m] = c
        valid = None if self.valid is None else self.valid * m
        if valid is not None:
            dense = dense[: valid - self.base * m]
        return dense, self.base * m, valid

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, var=self.var)
        if other.var != self.var:
            raise SeriesError(f"incompatible series: {self.var} vs {other.var}")
        return other

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        r = lcm(self.ram, other.ram)
        a, ba, va = self.with_ramification(r)
        b, bb, vb = other.with_ramification(r)
        if not a:
            ba = va if va is not None else bb
        if not b:
            bb = vb if vb is not None else ba
        valid = _vmin(va, vb)
        base = min(ba, bb)
        end = valid if valid is not None else max(ba + len(a), bb + len(b))
        if end < base:
            base = end
        out = [_ZERO] * (end - base)
        for off, src in ((ba, a), (bb, b)):
            for i, c in enumerate(src):
                j = off + i - base
                if 0 <= j < len(out):
                    out[j] += c
        return TruncatedSeries(out, valid=valid, base=base, ram=r, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], valid=self.valid,
                               base=self.base, ram=self.ram, var=self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        c = as_rational(c)
        return TruncatedSeries([c * x for x in self.coeffs], valid=self.valid,
                               base=self.base, ram=self.ram, var=self.var)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        other = self._check(other)
        r = lcm(self.ram, other.ram)
        a, ba, va = self.with_ramification(r)
        b, bb, vb = other.with_ramification(r)
        if not a and va is not None:
            ba = va
        if not b and vb is not None:
            bb = vb
        base = ba + bb
        cands = []
        if va is not None:
            cands.append(va + bb)
        if vb is not None:
            cands.append(vb + ba)
        valid = min(cands) if cands else None
        if valid is None:
            n = len(a) + len(b) - 1 if a and b else 0
        else:
            n = max(valid - base, 0)
        out = [_ZERO] * n
        nz_b = [(j, y) for j, y in enumerate(b) if y != 0]
        for i, x in enumerate(a):
            if x == 0 or i >= n:
                continue
            lim = n - i
            for j, y in nz_b:
                if j >= lim:
                    break
                out[i + j] += x * y
        if valid is not None and n == 0:
            base = valid
        return TruncatedSeries(out, valid=valid, base=base, ram=r, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only nonnegative integer powers are supported")
        out = TruncatedSeries.constant(1, var=self.var)
        sq = self
        while n:
            if n & 1:
                out = out * sq
            n >>= 1
            if n:
                sq = sq * sq
        return out

    def reciprocal(self, order=None):
        """Multiplicative inverse.

        For a truncated input the precision relative to the leading term is
        preserved.  An exact input needs ``order`` (absolute exponent bound).
        """
        if self.is_zero():
            raise SeriesError("not invertible: zero series")
        a0 = self.coeffs[0]
        if self.valid is None:
            if order is None:
                if len(self.coeffs) == 1:
                    return TruncatedSeries.exact([1 / a0], base=-self.base,
                                                 ram=self.ram, var=self.var)
                raise SeriesError("reciprocal of an exact series needs an order")
            vo = Fraction(order)
            r = lcm(self.ram, vo.denominator)
            a, ba, _ = self.with_ramification(r)
            valid = int(vo * r)
            n = valid + ba
        else:
            if order is not None:
                raise SeriesError("order only applies to exact series")
            r = self.ram
            a, ba = list(self.coeffs), self.base
            valid = self.valid - 2 * ba
            n = self.valid - ba
        inv0 = 1 / a0
        out = []
        nz = [(k, c) for k, c in enumerate(a) if c != 0 and k > 0]
        for m in range(max(n, 0)):
            if m == 0:
                out.append(inv0)
                continue
            s = _ZERO
            for k, c in nz:
                if k > m:
                    break
                s += c * out[m - k]
            out.append(-s * inv0)
        return TruncatedSeries(out, valid=valid, base=-ba, ram=r, var=self.var)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(1 / as_rational(other))
        other = self._check(other)
        if other.valid is None and len(other.coeffs) > 1:
            if self.valid is None:
                raise SeriesError("division of exact series needs an order")
            lead = self.leading_exponent if self.coeffs else self.valid_order
            order = self.valid_order - other.leading_exponent - lead
            return self * other.reciprocal(order=order)
        return self * other.reciprocal()

    def derivative(self):
        r = self.ram
        out = [c * mpq(self.base + k, r) for k, c in enumerate(self.coeffs)]
        valid = None if self.valid is None else self.valid - r
        return TruncatedSeries(out, valid=valid, base=self.base - r, ram=r,
                               var=self.var)

    def mul_power(self, exponent):
        """Multiply by ``var**exponent`` (rational exponent)."""
        e = Fraction(exponent)
        r = lcm(self.ram, e.denominator)
        a, ba, va = self.with_ramification(r)
        sh = int(e * r)
        return TruncatedSeries(a, valid=None if va is None else va + sh,
                               base=ba + sh, ram=r, var=self.var)

    def truncate(self, order):
        """Forget everything at exponents ``>= order``."""
        vo = Fraction(order)
        if self.valid_order is not None and vo > self.valid_order:
            raise SeriesError(f"cannot truncate to {vo}: valid only to "
                              f"{self.valid_order}")
        r = lcm(self.ram, vo.denominator)
        a, ba, _ = self.with_ramification(r)
        return TruncatedSeries(a, valid=int(vo * r), base=ba, ram=r, var=self.var)

    def rename(self, var):
        return TruncatedSeries(self.coeffs, valid=self.valid, base=self.base,
                               ram=self.ram, var=var)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.var, self.ram, self.base, self.coeffs, self.valid) == \
            (other.var, other.ram, other.base, other.coeffs, other.valid)

    def __hash__(self):
        return hash((self.var, self.ram, self.base, self.coeffs, self.valid))

    def agrees_with(self, other):
        """Equal on the common range of validity."""
        diff = self - other
        return diff.is_zero()

    def __repr__(self):
        shown = []
        for e, c in self.terms()[:6]:
            shown.append(f"{format_rational(c)}*{self.var}^{e}")
        tail = "exact" if self.valid is None else f"O({self.var}^{self.valid_order})"
        return f"TruncatedSeries({' + '.join(shown) or '0'} + ... {tail})"

    # serialization ------------------------------------------------------
    def to_dict(self):
        return {
            "variable": self.var,
            "ramification": self.ram,
            "base_exponent": self.base,
            "coefficients": [format_rational(c) for c in self.coeffs],
            "valid_order": self.valid,
        }

    @classmethod
    def from_dict(cls, d):
        return cls([parse_rational(c) for c in d["coefficients"]],
                   valid=d["valid_order"], base=d["base_exponent"],
                   ram=d["ramification"], var=d["variable"])


# ----------------------------------------------------------------------
def _pfq_terms(upper, lower, n):
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    term = mpq(1)
    out = []
    for k in range(n):
        out.append(term)
        if term == 0:
            continue
        num = mpq(1)
        for a in upper:
            num *= a + k
        den = mpq(k + 1)
        for b in lower:
            den *= b + k
        if num == 0:
            term = _ZERO
            continue
        if den == 0:
            raise SeriesError("ill-posed parameter list: a lower parameter "
                              f"hits {-k} before the series terminates")
        term = term * num / den
    return out


def pfq_series(upper, lower, variable="t", order=20):
    """Coefficients of pFq(upper; lower; x) below ``x**order``."""
    return TruncatedSeries(_pfq_terms(upper, lower, order), valid=order,
                           var=variable)


def pfq_terminating(upper, lower, z=1):
    """Exact value of a terminating pFq at the rational point ``z``."""
    upper = [as_rational(a) for a in upper]
    stop = [int(-a) for a in upper if a <= 0 and a.denominator == 1]
    if not stop:
        raise SeriesError("series does not terminate")
    n = min(stop) + 1
    z = as_rational(z)
    total, zp = _ZERO, mpq(1)
    for c in _pfq_terms(upper, lower, n):
        total += c * zp
        zp *= z
    return total


def series_product(a, b):
    return a * b


def series_reciprocal(a, order=None):
    return a.reciprocal(order)


def series_derivative(a):
    return a.derivative()


def change_variable(a, kind, arg=None, new_var=None):
    """Re-expand ``a`` under a change of variable.

    ``kind`` is one of

    * ``"power"``: ``t = x**arg`` (``arg`` a positive integer),
    * ``"inverse"``: ``t -> 1/t`` (exact series only),
    * ``"shift"``: ``t = arg + x`` (exact polynomials only).
    """
    var = new_var or a.var
    if kind == "power":
        k = int(arg)
        if k < 1:
            raise SeriesError("power map needs a positive integer")
        dense = []
        for c in a.coeffs:
            dense.append(c)
            dense.extend([_ZERO] * (k - 1))
        valid = None if a.valid is None else a.valid * k
        if valid is not None:
            dense = dense[: valid - a.base * k]
        return TruncatedSeries(dense, valid=valid, base=a.base * k, ram=a.ram,
                               var=var)
    if kind == "inverse":
        if a.valid is not None:
            raise SeriesError("unsupported: t -> 1/t of a truncated series "
                              "has infinitely many negative exponents")
        out = {-e: c for e, c in a.terms()}
        return TruncatedSeries.from_terms(out, valid_order=None, var=var)
    if kind == "shift":
        if a.valid is not None:
            raise SeriesError("unsupported: shifting a truncated series")
        t0 = as_rational(arg)
        res = {}
        for e, c in a.terms():
            if e.denominator != 1 or e < 0:
                raise SeriesError("shift needs a polynomial")
            e = int(e)
            # (t0 + x)^e
            b = mpq(1)
            for j in range(e + 1):
                res[j] = res.get(j, _ZERO) + c * b * t0 ** (e - j)
                b = b * (e - j) / (j + 1)
        return TruncatedSeries.from_terms(res, valid_order=None, var=var)
    raise SeriesError(f"unknown change of variable {kind!r}")
