"""Linear differential operators with rational-function coefficients."""
from functools import reduce
from math import gcd, lcm

from gmpy2 import mpq

from ..exactcore.poly import Poly, RationalFunction, poly_gcd, poly_lcm
from ..exactcore.rational import as_rational, binomial
from ..exactcore.series import TruncatedSeries

__all__ = ["DiffOperator", "op_apply", "op_multiply", "op_change_variable",
           "taylor_solution"]


def _rf(c, var):
    if isinstance(c, RationalFunction):
        if c.var != var and c.is_constant():
            return RationalFunction(Poly.const(c.constant_value(), var), _reduced=True)
        if c.var != var:
            raise ValueError(f"coefficient in {c.var}, operator in {var}")
        return c
    if isinstance(c, Poly):
        return RationalFunction(c.rename(var) if c.is_constant() else c)
    return RationalFunction(Poly.const(c, var), _reduced=True)


class DiffOperator:
    """``sum coeffs[i] * D**i`` acting on functions of ``var``."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs, var="t"):
        cs = [_rf(c, var) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs) if cs else (_rf(0, var),)

    @classmethod
    def D(cls, var="t"):
        return cls([0, 1], var)

    @classmethod
    def scalar(cls, f, var="t"):
        return cls([f], var)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def is_zero(self):
        return self.order == 0 and self.coeffs[0].is_zero()

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _rf(0, self.var)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, DiffOperator):
            if other.var != self.var:
                raise ValueError("operators in different variables")
            return other
        return DiffOperator([other], self.var)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return DiffOperator([self.coeff(i) + o.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return DiffOperator([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, DiffOperator):
            # right multiplication by a function is an operator product too
            return op_multiply(self, self._coerce(other))
        return op_multiply(self, other)

    def __rmul__(self, other):
        return op_multiply(self._coerce(other), self)

    def __pow__(self, n):
        out = DiffOperator([1], self.var)
        for _ in range(n):
            out = out * self
        return out

    def left_scale(self, f):
        f = _rf(f, self.var)
        return DiffOperator([f * c for c in self.coeffs], self.var)

    def monic(self):
        inv = self.leading.inverse()
        return DiffOperator([c * inv for c in self.coeffs], self.var)

    def divmod_right(self, other):
        """``self = q * other + r`` with ``ord r < ord other``."""
        other = self._coerce(other)
        q = DiffOperator([0], self.var)
        r = self
        while not r.is_zero() and r.order >= other.order:
            k = r.order - other.order
            c = r.leading / other.leading
            term = DiffOperator([0] * k + [c], self.var)
            q = q + term
            nr = r - term * other
            # drop the cancelled top coefficient explicitly
            if nr.order >= r.order:
                raise ArithmeticError("right division failed to reduce the order")
            r = nr
        return q, r

    # normal forms -------------------------------------------------------
    def cleared(self):
        """Polynomial coefficients: integral, jointly primitive, with a positive
        leading coefficient on the top polynomial."""
        den = reduce(poly_lcm, (c.den for c in self.coeffs))
        polys = [(c.num * den.exact_div(c.den)) for c in self.coeffs]
        g = Poly((), self.var)
        for p in polys:
            g = poly_gcd(g, p) if g.c else p.monic()
        if g.degree > 0:
            polys = [p.exact_div(g) for p in polys]
        num = 0
        d = 1
        for p in polys:
            for x in p.c:
                num = gcd(num, int(x.numerator))
                d = lcm(d, int(x.denominator))
        k = mpq(d, num) if num else mpq(1)
        if polys[-1].lc < 0:
            k = -k
        return [p * k for p in polys]

    def canonical(self):
        return DiffOperator(self.cleared(), self.var)

    def equivalent_up_to_scalar(self, other):
        """Same operator after multiplication by a nonzero rational function."""
        return self.canonical() == other.canonical()

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            d = "" if i == 0 else (f"D{self.var}" if i == 1 else f"D{self.var}^{i}")
            parts.append(f"{c}" + (f"*{d}" if d else ""))
        return "DiffOperator(" + (" + ".join(parts) or "0") + ")"

    # application --------------------------------------------------------
    def apply(self, y, cleared=False):
        return op_apply(self, y, cleared=cleared)

    def __call__(self, y):
        return op_apply(self, y)

    # serialization ------------------------------------------------------
    def to_dict(self):
        return {"variable": self.var, "order": self.order,
                "coefficients": [c.to_dict() for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d):
        var = d["variable"]
        op = cls([RationalFunction.from_dict(c, var) for c in d["coefficients"]], var)
        if op.order != d.get("order", op.order):
            raise ValueError("order field does not match coefficients")
        return op

    def to_cleared_dict(self):
        return {"variable": self.var, "order": self.order,
                "polynomials": [p.to_list() for p in self.cleared()]}

    @classmethod
    def from_cleared_dict(cls, d):
        var = d["variable"]
        return cls([Poly.from_list(p, var) for p in d["polynomials"]], var)


def op_multiply(a, b):
    """Operator product ``a * b`` using ``D f = f D + f'``."""
    if a.var != b.var:
        raise ValueError("operators in different variables")
    var = a.var
    na = a.order
    zero = _rf(0, var)
    # derivatives of b's coefficients up to order na
    ders = []
    for c in b.coeffs:
        row = [c]
        for _ in range(na):
            row.append(row[-1].derivative())
        ders.append(row)
    out = [zero] * (a.order + b.order + 1)
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        for k in range(i + 1):
            bk = binomial(i, k)
            for j, row in enumerate(ders):
                d = row[k]
                if d.is_zero():
                    continue
                out[i - k + j] = out[i - k + j] + ai * d * bk
    return DiffOperator(out, var)


def op_apply(L, y, cleared=False):
    """Apply ``L`` to a series.

    Denominators are cleared first so only exact polynomials multiply the
    truncated derivatives; the result is divided back unless ``cleared``.
    """
    if y.var != L.var:
        raise ValueError(f"series in {y.var}, operator in {L.var}")
    den = reduce(poly_lcm, (c.den for c in L.coeffs))
    polys = [c.num * den.exact_div(c.den) for c in L.coeffs]
    acc = None
    d = y
    for i, p in enumerate(polys):
        if i:
            d = d.derivative()
        if p.is_zero():
            continue
        term = TruncatedSeries.exact(p.c, var=L.var) * d
        acc = term if acc is None else acc + term
    if acc is None:
        acc = y.scale(0)
    if cleared or den.degree == 0:
        return acc if den.degree > 0 else acc.scale(1 / den.c[0])
    return acc / TruncatedSeries.exact(den.c, var=L.var)


def op_change_variable(L, kind, arg=None, new_var=None):
    """Transform ``L`` under a change of variable or a conjugation.

    * ``"power"``: ``t = x**arg``;
    * ``"inverse"``: ``t = 1/x``;
    * ``"map"``: ``t = arg(x)`` for a rational function ``arg`` in ``x``;
    * ``"shift"``: ``t = arg + x``;
    * ``"conjugate"``: ``g**-1 * L * g`` where ``arg = g'/g`` is rational.
    """
    if kind == "conjugate":
        r = _rf(arg, L.var)
        Dr = DiffOperator([r, 1], L.var)
        out = DiffOperator([0], L.var)
        P = DiffOperator([1], L.var)
        for c in L.coeffs:
            out = out + P.left_scale(c)
            P = Dr * P
        return out
    x = new_var or L.var
    X = Poly.x(x)
    if kind == "power":
        g = RationalFunction(X ** int(arg))
    elif kind == "inverse":
        g = RationalFunction(Poly.const(1, x), X)
    elif kind == "shift":
        g = RationalFunction(X + as_rational(arg))
    elif kind == "map":
        g = arg if isinstance(arg, RationalFunction) else RationalFunction(arg)
        if g.var != x:
            raise ValueError("map must be expressed in the new variable")
    else:
        raise ValueError(f"unknown change of variable {kind!r}")
    phi = g.derivative().inverse()          # D_t = phi * D_x
    step = DiffOperator([0, phi], x)
    out = DiffOperator([0], x)
    P = DiffOperator([1], x)
    for c in L.coeffs:
        out = out + P.left_scale(c(g) if not c.is_constant() else
                                 _rf(c.constant_value(), x))
        P = step * P
    return out


def taylor_solution(L, initial, order, point=0):
    """Power-series solution at an ordinary point with given initial values.

    ``initial`` lists y(point), y'(point), ..., y^(n-1)(point).  The result is
    a series in ``x = var - point`` valid below ``x**order``.
    """
    n = L.order
    if len(initial) != n:
        raise ValueError(f"need {n} initial values")
    M = op_change_variable(L, "shift", point) if point else L
    lead = M.leading
    if lead.num.coeff(0) == 0 or lead.den.coeff(0) == 0:
        raise ValueError(f"{point} is not an ordinary point")
    q = [(c / lead).to_series(order) for c in M.coeffs[:-1]]
    q = [[s.coefficient(j) for j in range(order)] for s in q]
    y = [mpq(0)] * max(order, n)
    fact = 1
    for k in range(n):
        y[k] = as_rational(initial[k]) / fact
        fact *= k + 1

    def deriv_coeff(k, j):
        # coefficient of x^j in y^(k)
        f = 1
        for i in range(k):
            f *= j + k - i
        return y[j + k] * f

    for m in range(n, order):
        j = m - n
        s = mpq(0)
        for k in range(n):
            qk = q[k]
            for i in range(j + 1):
                if qk[i]:
                    s += qk[i] * deriv_coeff(k, j - i)
        f = 1
        for i in range(n):
            f *= m - i
        y[m] = -s / f
    return TruncatedSeries(y[:order], valid=order, var=L.var)
