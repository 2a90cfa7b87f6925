"""Local exponents, regularity and apparent singularities."""
from dataclasses import dataclass, field

import sympy
from gmpy2 import mpq

from ..exactcore.linalg import field_nullspace, rational_nullspace
from ..exactcore.poly import Poly
from ..exactcore.rational import as_rational
from .operator import op_change_variable

__all__ = ["AlgebraicNumber", "ExponentReport", "FuchsianReport",
           "indicial_exponents", "fuchsian_analysis", "local_polynomials"]


class AlgebraicNumber:
    """Element of Q[a]/(m(a)) for an irreducible ``m`` (a root of ``m``)."""

    __slots__ = ("p", "m")

    def __init__(self, p, m):
        self.m = m
        self.p = p if p.degree < m.degree else p % m

    @classmethod
    def generator(cls, m):
        return cls(Poly.x(m.var), m)

    def _c(self, other):
        if isinstance(other, AlgebraicNumber):
            return other
        return AlgebraicNumber(Poly.const(other, self.m.var), self.m)

    def __add__(self, o):
        return AlgebraicNumber(self.p + self._c(o).p, self.m)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(-self.p, self.m)

    def __sub__(self, o):
        return AlgebraicNumber(self.p - self._c(o).p, self.m)

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        return AlgebraicNumber(self.p * self._c(o).p, self.m)

    __rmul__ = __mul__

    def inverse(self):
        # extended Euclid on (p, m)
        r0, r1 = self.m, self.p
        s0, s1 = Poly((), self.m.var), Poly.const(1, self.m.var)
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ZeroDivisionError("not invertible in the number field")
        return AlgebraicNumber(s0 * (1 / r0.c[0]), self.m)

    def __truediv__(self, o):
        return self * self._c(o).inverse()

    def __rtruediv__(self, o):
        return self._c(o) * self.inverse()

    def __bool__(self):
        return bool(self.p)

    def __eq__(self, o):
        if isinstance(o, str):
            return False
        return not (self - o)

    def __hash__(self):
        return hash(self.p)

    def rational(self):
        """The value as a rational, or ``None`` if irrational."""
        return self.p.coeff(0) if self.p.degree <= 0 else None

    def __repr__(self):
        return f"{self.p}  mod {self.m}"


@dataclass
class ExponentReport:
    point: object                 # rational, "infinity", or a sympy polynomial string
    exponents: list = field(default_factory=list)   # rationals with multiplicity
    irrational_factors: list = field(default_factory=list)
    indicial: str = ""
    singular: bool = True
    regular: bool = True
    apparent: bool = False

    def to_dict(self):
        return {"point": str(self.point),
                "exponents": [str(e) for e in self.exponents],
                "irrational_factors": list(self.irrational_factors),
                "indicial": self.indicial, "singular": self.singular,
                "regular": self.regular, "apparent": self.apparent}


@dataclass
class FuchsianReport:
    singular_points: list
    all_regular: bool
    apparent_points: list
    reports: list

    def to_dict(self):
        return {"singular_points": [str(p) for p in self.singular_points],
                "all_regular": self.all_regular,
                "apparent_points": [str(p) for p in self.apparent_points],
                "reports": [r.to_dict() for r in self.reports]}


def _taylor(poly, point, degree):
    """Coefficients of poly(point + x) in powers of x, up to ``degree``."""
    out = []
    p = poly
    fact = 1
    for k in range(degree + 1):
        if not p:
            break
        val = _horner(p, point)
        out.append(val * mpq(1, fact))
        p = p.derivative()
        fact *= k + 1
    return out


def _horner(p, x):
    acc = x * 0
    for a in reversed(p.c):
        acc = acc * x + a
    return acc


def local_polynomials(L, point):
    """Cleared coefficients of ``L`` expanded at ``point`` (x = t - point).

    ``point`` may be a rational, an :class:`AlgebraicNumber`, or ``"infinity"``.
    """
    if isinstance(point, str) or point is None:
        M = op_change_variable(L, "inverse", new_var="_x")
        polys = M.cleared()
        return [list(p.c) for p in polys]
    polys = L.cleared()
    deg = max(p.degree for p in polys)
    return [_taylor(p, point, deg) for p in polys]


def _valuation(cs):
    for i, a in enumerate(cs):
        if a:
            return i
    return None


def _rational_roots(poly_coeffs):
    """Rational roots with multiplicity and remaining irreducible factors."""
    r = sympy.Symbol("r")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * r ** k
               for k, c in enumerate(poly_coeffs))
    _, facs = sympy.factor_list(sympy.Poly(expr, r))
    roots, other = [], []
    for f, mult in facs:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            roots += [as_rational(-b / a)] * mult
        else:
            other += [str(f.as_expr())] * mult
    return sorted(roots), other, str(sympy.factor(expr))


def _falling(i):
    """Coefficients of r(r-1)...(r-i+1)."""
    p = [mpq(1)]
    for k in range(i):
        # multiply by (r - k)
        q = [mpq(0)] * (len(p) + 1)
        for j, a in enumerate(p):
            q[j + 1] += a
            q[j] -= k * a
        p = q
    return p


def _frobenius_kernel_dim(loc, shift, depth, algebraic):
    """Dimension of power-series solutions sum c_m x^m up to ``depth``."""

    def falling_val(m, i):
        v = 1
        for k in range(i):
            v *= m - k
        return v

    rows = []
    for eq in range(depth + 1):
        row = []
        for m in range(depth + 1):
            if m > eq:
                row.append(0)
                continue
            j = eq - m
            s = 0
            for i, cs in enumerate(loc):
                k = j + i + shift
                if 0 <= k < len(cs) and cs[k]:
                    fv = falling_val(m, i)
                    if fv:
                        s = cs[k] * fv + s
            row.append(s)
        rows.append(row)
    if algebraic is not None:
        one = AlgebraicNumber(Poly.const(1, algebraic.var), algebraic)
        rows = [[x if isinstance(x, AlgebraicNumber) else one * x for x in row]
                for row in rows]
        return len(field_nullspace(rows, depth + 1, one=one))
    return len(rational_nullspace(rows, depth + 1))


def indicial_exponents(L, point, *, check_apparent=True):
    """Exponents of ``L`` at ``point``.

    ``point``: a rational, ``"infinity"``, or a univariate irreducible
    polynomial (sympy expression/string or :class:`Poly`) naming the class of
    its roots.  At infinity the exponents are those in ``x = 1/t``.
    """
    modulus = None
    label = point
    if point in ("infinity", "oo", "inf"):
        at = "infinity"
        label = "infinity"
    elif isinstance(point, (Poly, str, sympy.Expr)) and not _is_number(point):
        modulus = _as_poly(point, L.var)
        if modulus.degree == 1:
            at = -modulus.c[0] / modulus.c[1]
            modulus = None
            label = at
        else:
            modulus = modulus.monic().rename("_a")
            at = AlgebraicNumber.generator(modulus)
            label = str(point)
    else:
        at = as_rational(point)
        label = at
    loc = local_polynomials(L, at)
    n = len(loc) - 1
    vals = [_valuation(cs) for cs in loc]
    m = min(v - i for i, v in enumerate(vals) if v is not None)
    regular = vals[n] - n == m
    singular = vals[n] != 0
    rep = ExponentReport(point=label, singular=singular, regular=regular)
    if not regular:
        rep.indicial = "irregular"
        return rep
    ind = [0] * (n + 1)
    for i, v in enumerate(vals):
        if v is not None and v - i == m:
            for k, a in enumerate(_falling(i)):
                ind[k] = loc[i][v] * a + ind[k]
    lead = ind[n]
    ind = [c / lead for c in ind]
    if modulus is not None:
        rat = [c.rational() if isinstance(c, AlgebraicNumber) else as_rational(c)
               for c in ind]
        if any(c is None for c in rat):
            rep.indicial = " + ".join(f"({c})*r^{k}" for k, c in enumerate(ind))
            rep.irrational_factors = [rep.indicial]
            return rep
        ind = rat
    rep.exponents, rep.irrational_factors, rep.indicial = _rational_roots(ind)
    ints = [e for e in rep.exponents if e.denominator == 1 and e >= 0]
    if check_apparent and rep.singular and not rep.irrational_factors \
            and len(ints) == n and len(set(ints)) == n:
        depth = int(max(ints)) + 2 * n + 10
        dim = _frobenius_kernel_dim(loc, m, depth, modulus)
        rep.apparent = dim == n
    return rep


def _is_number(p):
    if isinstance(p, str):
        try:
            as_rational(p)
            return True
        except (ValueError, TypeError, ZeroDivisionError):
            return False
    if isinstance(p, sympy.Expr):
        return p.is_number
    return False


def _as_poly(p, var):
    if isinstance(p, Poly):
        return p
    expr = sympy.sympify(p)
    syms = list(expr.free_symbols)
    sp = sympy.Poly(expr, *syms)
    cs = [as_rational(c) for c in reversed(sp.all_coeffs())]
    return Poly(cs, var)


def fuchsian_analysis(L):
    """Singular points, regularity and apparent singularities of ``L``."""
    lead = L.cleared()[-1]
    x = sympy.Symbol(L.var)
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x ** k
               for k, c in enumerate(lead.c))
    points = []
    if lead.degree > 0:
        _, facs = sympy.factor_list(sympy.Poly(expr, x))
        for f, _ in facs:
            if f.degree() == 1:
                a, b = f.all_coeffs()
                points.append(as_rational(-b / a))
            else:
                points.append(str(f.as_expr()))
    reports = []
    for p in sorted((q for q in points if not isinstance(q, str))) + \
            [q for q in points if isinstance(q, str)]:
        reports.append(indicial_exponents(L, p))
    inf = indicial_exponents(L, "infinity")
    if inf.singular:
        reports.append(inf)
    sing = [r.point for r in reports]
    return FuchsianReport(
        singular_points=sing,
        all_regular=all(r.regular for r in reports),
        apparent_points=[r.point for r in reports if r.apparent],
        reports=reports)
