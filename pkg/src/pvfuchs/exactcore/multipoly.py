"""Sparse multivariate polynomials over Q, with Sylvester resultants."""
from math import gcd as igcd

from gmpy2 import mpq

from .poly import Poly
from .rational import as_rational, format_rational, parse_rational

__all__ = ["MultiPoly", "resultant_eliminate", "sylvester_matrix",
           "VARIABLE_PRECEDENCE", "EliminationError"]

VARIABLE_PRECEDENCE = ("S3", "S2", "S1", "S0", "u", "t", "alpha")

_ZERO = mpq(0)


class EliminationError(ValueError):
    pass


def _var_key(name):
    if name in VARIABLE_PRECEDENCE:
        return (0, VARIABLE_PRECEDENCE.index(name), name)
    return (1, 0, name)


def _order_vars(names):
    return tuple(sorted(set(names), key=_var_key))


class MultiPoly:
    """Polynomial stored as ``{exponent tuple: coefficient}``.

    Variables are kept in the canonical order ``S3, S2, S1, S0, u, t, alpha``
    followed by any other names alphabetically.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        ordered = _order_vars(variables)
        if len(ordered) != len(variables):
            raise ValueError("duplicate variable names")
        self.vars = ordered
        perm = [variables.index(v) for v in ordered]
        out = {}
        for e, c in (terms or {}).items():
            c = as_rational(c)
            if c == 0:
                continue
            e = tuple(e[i] for i in perm)
            s = out.get(e, _ZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        self.terms = out

    @classmethod
    def _raw(cls, variables, terms):
        p = cls.__new__(cls)
        p.vars = variables
        p.terms = terms
        return p

    # constructors -------------------------------------------------------
    @classmethod
    def var(cls, name):
        return cls._raw((name,), {(1,): mpq(1)})

    @classmethod
    def const(cls, c, variables=()):
        c = as_rational(c)
        vs = _order_vars(variables)
        return cls._raw(vs, {(0,) * len(vs): c} if c != 0 else {})

    @classmethod
    def from_poly(cls, p):
        """Lift a univariate :class:`Poly`."""
        return cls._raw((p.var,), {(i,): c for i, c in enumerate(p.c) if c != 0})

    @classmethod
    def symbols(cls, *names):
        return tuple(cls.var(n) for n in names)

    # alignment ----------------------------------------------------------
    def with_vars(self, variables):
        variables = _order_vars(variables)
        if variables == self.vars:
            return self
        missing = [v for v in self.vars if v not in variables]
        for v in missing:
            if self.degree(v) > 0:
                raise ValueError(f"variable {v} still occurs")
        idx = [self.vars.index(v) if v in self.vars else -1 for v in variables]
        terms = {}
        for e, c in self.terms.items():
            terms[tuple(e[i] if i >= 0 else 0 for i in idx)] = c
        return MultiPoly._raw(variables, terms)

    def compact(self):
        """Drop variables that do not occur."""
        used = [v for i, v in enumerate(self.vars)
                if any(e[i] for e in self.terms)]
        return self.with_vars(used)

    def _align(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, Poly):
                other = MultiPoly.from_poly(other)
            else:
                other = MultiPoly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        vs = _order_vars(self.vars + other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    # queries ------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()), _ZERO)

    def ordered_terms(self):
        """Terms in graded lexicographic order (largest first)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]),
                      reverse=True)

    def leading_coefficient(self):
        return self.ordered_terms()[0][1] if self.terms else _ZERO

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, _ZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly._raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._align(other)
        return b + (-a)

    def scale(self, k):
        k = as_rational(k)
        if k == 0:
            return MultiPoly._raw(self.vars, {})
        return MultiPoly._raw(self.vars, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, (MultiPoly, Poly)):
            return self.scale(other)
        a, b = self._align(other)
        out = {}
        get = out.get
        bt = list(b.terms.items())
        n = len(a.vars)
        if n == 1:
            for (e1,), c1 in a.terms.items():
                for (e2,), c2 in bt:
                    k = (e1 + e2,)
                    out[k] = get(k, _ZERO) + c1 * c2
        else:
            for e1, c1 in a.terms.items():
                for e2, c2 in bt:
                    k = tuple([x + y for x, y in zip(e1, e2)])
                    out[k] = get(k, _ZERO) + c1 * c2
        return MultiPoly._raw(a.vars, {e: c for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1, self.vars)
        b = self
        while n:
            if n & 1:
                out = out * b
            n >>= 1
            if n:
                b = b * b
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        c = self.compact()
        return hash((c.vars, frozenset(c.terms.items())))

    # calculus and substitution -----------------------------------------
    def diff(self, name):
        if name not in self.vars:
            return MultiPoly._raw(self.vars, {})
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                k = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[k] = c * e[i]
        return MultiPoly._raw(self.vars, out)

    def coeffs_in(self, name):
        """List ``[p0, p1, ...]`` with ``self = sum p_k * name**k``."""
        if name not in self.vars:
            return [self]
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        d = self.degree(name)
        parts = [dict() for _ in range(max(d + 1, 1))]
        for e, c in self.terms.items():
            parts[e[i]][e[:i] + e[i + 1:]] = c
        return [MultiPoly._raw(rest, p) for p in parts]

    @classmethod
    def from_coeffs_in(cls, name, coeffs):
        x = cls.var(name)
        out = cls.const(0)
        xp = cls.const(1)
        for c in coeffs:
            out = out + c * xp
            xp = xp * x
        return out

    def subs(self, mapping):
        """Substitute polynomials (or rationals) for variables."""
        names = [v for v in self.vars if v in mapping]
        if not names:
            return self
        keep = [v for v in self.vars if v not in mapping]
        kidx = [self.vars.index(v) for v in keep]
        sidx = [self.vars.index(v) for v in names]
        vals = []
        for v in names:
            m = mapping[v]
            if not isinstance(m, MultiPoly):
                m = MultiPoly.const(m)
            vals.append(m)
        cache = [{0: MultiPoly.const(1)} for _ in names]

        def power(j, k):
            c = cache[j]
            if k not in c:
                c[k] = power(j, k - 1) * vals[j]
            return c[k]

        groups = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in sidx)
            groups.setdefault(key, {})[tuple(e[i] for i in kidx)] = c
        out = MultiPoly.const(0, keep)
        for key, sub in groups.items():
            term = MultiPoly._raw(tuple(keep), sub)
            for j, k in enumerate(key):
                if k:
                    term = term * power(j, k)
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at rationals; returns a rational when nothing is left."""
        res = self.subs(point)
        res = res.compact()
        return res.constant_value() if res.is_constant() else res

    def to_poly(self, name=None):
        """Convert a univariate polynomial to :class:`Poly`."""
        c = self.compact()
        if len(c.vars) > 1:
            raise ValueError("not univariate")
        var = c.vars[0] if c.vars else (name or "t")
        d = c.degree()
        coeffs = [_ZERO] * (max(d, 0) + 1)
        for e, v in c.terms.items():
            coeffs[e[0] if e else 0] = v
        return Poly(coeffs, var)

    # normalization ------------------------------------------------------
    def content(self):
        """Positive rational content."""
        num, den = 0, 1
        for c in self.terms.values():
            num = igcd(num, int(c.numerator))
            d = int(c.denominator)
            den = den * d // igcd(den, d)
        return mpq(num, den) if num else mpq(1)

    def primitive(self):
        """Integral primitive part with a positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def exact_div(self, other):
        """Quotient when ``other`` divides ``self`` exactly."""
        a, b = self._align(other)
        if not b.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if len(b.terms) == 1:
            (eb, cb), = b.terms.items()
            out = {}
            for e, c in a.terms.items():
                k = tuple(x - y for x, y in zip(e, eb))
                if min(k, default=0) < 0:
                    raise ArithmeticError("inexact multivariate division")
                out[k] = c / cb
            return MultiPoly._raw(a.vars, out)
        lt_b = max(b.terms)
        inv = 1 / b.terms[lt_b]
        rem = dict(a.terms)
        quo = {}
        bt = [(e, c) for e, c in b.terms.items() if e != lt_b]
        while rem:
            lt = max(rem)
            k = tuple(x - y for x, y in zip(lt, lt_b))
            if min(k) < 0:
                raise ArithmeticError("inexact multivariate division")
            coef = rem.pop(lt) * inv
            quo[k] = coef
            for e, c in bt:
                m = tuple(x + y for x, y in zip(e, k))
                s = rem.get(m, _ZERO) - coef * c
                if s == 0:
                    rem.pop(m, None)
                else:
                    rem[m] = s
        return MultiPoly._raw(a.vars, quo)

    # conversion ---------------------------------------------------------
    def to_sympy(self, gens=None):
        import sympy
        gens = gens or sympy.symbols(self.vars) if self.vars else ()
        if not self.vars:
            return sympy.Rational(int(self.constant_value().numerator),
                                  int(self.constant_value().denominator))
        return sympy.Poly.from_dict(
            {e: sympy.Rational(int(c.numerator), int(c.denominator))
             for e, c in self.terms.items()}, *gens, domain="QQ")

    @classmethod
    def from_sympy(cls, expr, variables=None):
        import sympy
        if not isinstance(expr, sympy.Poly):
            gens = sympy.symbols(variables) if variables else None
            expr = sympy.Poly(expr, *gens) if gens else sympy.Poly(expr)
        names = [str(g) for g in expr.gens]
        return cls(names, {e: as_rational(c) for e, c in expr.as_dict().items()})

    def to_dict(self):
        return {"variables": list(self.vars),
                "terms": [{"exponents": list(e), "coefficient": format_rational(c)}
                          for e, c in self.ordered_terms()]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["variables"], {tuple(t["exponents"]): parse_rational(t["coefficient"])
                                    for t in d["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.ordered_terms():
            mon = "*".join(v if k == 1 else f"{v}^{k}"
                           for v, k in zip(self.vars, e) if k)
            parts.append(format_rational(c) + ("*" + mon if mon else ""))
        return " + ".join(parts)


def sylvester_matrix(p, q, name):
    """Sylvester matrix of ``p`` and ``q`` viewed as polynomials in ``name``."""
    a = p.coeffs_in(name)[::-1]
    b = q.coeffs_in(name)[::-1]
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MultiPoly.const(0)
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def _bareiss_det(rows):
    n = len(rows)
    if n == 0:
        return MultiPoly.const(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.const(0)
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = num if k == 0 else num.exact_div(prev)
            m[i][k] = MultiPoly.const(0)
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant_eliminate(p, q, name):
    """Sylvester resultant of ``p`` and ``q`` with respect to ``name``."""
    if p.degree(name) < 1 or q.degree(name) < 1:
        raise EliminationError(f"nothing to eliminate: {name} does not occur "
                               "in both polynomials")
    dp, dq = p.degree(name), q.degree(name)
    if dp == 1 or dq == 1:
        # Res(l1*x + l0, Q) = sum_k q_k (-l0)^k l1^(n-k), up to the usual sign
        if dp == 1:
            lin, other, sign = p, q, 1
        else:
            lin, other, sign = q, p, (-1) ** (dp * dq)
        l0, l1 = lin.coeffs_in(name)
        cs = other.coeffs_in(name)
        n = len(cs) - 1
        out = MultiPoly.const(0)
        for k, c in enumerate(cs):
            if c.is_zero():
                continue
            out = out + c * (-l0) ** k * l1 ** (n - k)
        return out if sign > 0 else -out
    return _bareiss_det(sylvester_matrix(p, q, name))
