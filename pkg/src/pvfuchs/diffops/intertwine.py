"""Operator equivalence: intertwiner search and least common left multiples."""
from functools import reduce

import sympy

from ..exactcore.linalg import field_nullspace, rational_nullspace
from ..exactcore.poly import Poly, RationalFunction, poly_lcm
from ..exactcore.rational import as_rational
from .operator import DiffOperator, _rf

__all__ = ["intertwiner_search", "lclm", "singular_factors"]


def singular_factors(*ops):
    """Irreducible factors over Q of the cleared leading coefficients."""
    var = ops[0].var
    x = sympy.Symbol(var)
    out = []
    for L in ops:
        lead = L.cleared()[-1]
        if lead.degree < 1:
            continue
        expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x ** k
                   for k, c in enumerate(lead.c))
        for f, _ in sympy.factor_list(sympy.Poly(expr, x))[1]:
            cs = [as_rational(c) for c in reversed(f.all_coeffs())]
            p = Poly(cs, var).monic()
            if p not in out:
                out.append(p)
    return out


def _columns(L1, L2, ord_a, ord_r, den, top):
    """Operators multiplying each unknown of the ansatz."""
    var = L1.var
    X = Poly.x(var)
    inv = RationalFunction(Poly.const(1, var), den)
    cols = []
    for i in range(ord_a + 1):
        base = DiffOperator([0] * i + [inv], var) * L1
        for j in range(top + 1):
            cols.append(base.left_scale(RationalFunction(X ** j)))
    for i in range(ord_r + 1):
        for j in range(top + 1):
            c = RationalFunction(X ** j, den)
            cols.append(-(L2 * DiffOperator([0] * i + [c], var)))
    return cols


def _solve(cols):
    width = max(c.order for c in cols) + 1
    dens = [c.coeff(k).den for c in cols for k in range(width)]
    common = reduce(poly_lcm, dens)
    polys = []
    for c in cols:
        row = []
        for k in range(width):
            rf = c.coeff(k)
            row.append(rf.num * common.exact_div(rf.den))
        polys.append(row)
    maxdeg = max((p.degree for row in polys for p in row), default=0)
    matrix = []
    for k in range(width):
        for m in range(maxdeg + 1):
            eq = [row[k].coeff(m) for row in polys]
            if any(eq):
                matrix.append(eq)
    return rational_nullspace(matrix, len(cols))


def intertwiner_search(L1, L2, order_bound, degree_bound, factors=None):
    """Search ``A, R`` with ``A * L1 = L2 * R`` and ``R`` not a multiple of L1.

    Coefficients have the shape ``N(t) / den`` where ``den`` is a product of
    singular factors of the two operators, each to a power ``e``, and
    ``deg N <= deg den + e``.  The power ``e`` deepens from 0 to
    ``degree_bound``; the order of ``R`` from 0 to ``order_bound``.
    Returns ``None`` when nothing exists inside the bounds.
    """
    if L1.var != L2.var:
        raise ValueError("operators in different variables")
    var = L1.var
    if factors is None:
        factors = singular_factors(L1, L2)
    for e in range(degree_bound + 1):
        den = Poly.const(1, var)
        for f in factors:
            den = den * f ** e
        top = den.degree + e
        for ord_r in range(min(order_bound, L1.order - 1) + 1):
            ord_a = ord_r + L2.order - L1.order
            if ord_a < 0 or ord_a >= L2.order:
                continue
            cols = _columns(L1, L2, ord_a, ord_r, den, top)
            ker = _solve(cols)
            if not ker:
                continue
            vec = ker[0]
            n_a = (ord_a + 1) * (top + 1)
            A = _assemble(vec[:n_a], ord_a, top, den, var)
            R = _assemble(vec[n_a:], ord_r, top, den, var)
            if R.is_zero() or A.is_zero():
                continue
            if not (A * L1 - L2 * R).is_zero():
                raise ArithmeticError("intertwiner failed exact verification")
            return A, R
    return None


def _assemble(vec, order, top, den, var):
    coeffs = []
    for i in range(order + 1):
        num = Poly(vec[i * (top + 1):(i + 1) * (top + 1)], var)
        coeffs.append(RationalFunction(num, den))
    return DiffOperator(coeffs, var)


def lclm(A, B):
    """Least common left multiple, made monic.

    Finds the first order ``k`` at which the left multiples
    ``D**i * A`` and ``D**j * B`` become dependent over Q(t).
    """
    if A.var != B.var:
        raise ValueError("operators in different variables")
    var = A.var
    one = _rf(1, var)
    start = max(A.order, B.order)
    for k in range(start, A.order + B.order + 1):
        left = [DiffOperator([0] * i + [1], var) * A for i in range(k - A.order + 1)]
        right = [DiffOperator([0] * j + [1], var) * B for j in range(k - B.order + 1)]
        cols = left + right
        rows = [[c.coeff(r) for c in cols] for r in range(k + 1)]
        ker = field_nullspace(rows, len(cols), one=one)
        for vec in ker:
            u = vec[:len(left)]
            if any(u):
                out = DiffOperator([0], var)
                for ui, op in zip(u, left):
                    if ui:
                        out = out + op.left_scale(ui)
                return out.monic()
    raise ArithmeticError("lclm search exceeded ord A + ord B")
