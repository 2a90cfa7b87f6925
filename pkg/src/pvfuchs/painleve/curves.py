"""Generalized Riccati relations, elimination to curves in (sigma, sigma'), and
rational parametrizations of those curves."""
from dataclasses import dataclass, field
from functools import reduce

import sympy

from ..correlations import correlation_diag
from ..exactcore import (MultiPoly, Poly, TruncatedSeries, as_rational, poly_gcd,
                         poly_lcm, resultant_eliminate)
from .sigma import HIGH, jm_polynomial, sigma_bundle


class CurveError(ArithmeticError):
    pass


def S(k):
    return MultiPoly.var(f"S{k}")


def _t():
    return MultiPoly.var("t")


def total_derivative(P):
    """d/dt of a polynomial in S0, S1, ..., t with S_k' = S_{k+1}."""
    out = P.diff("t")
    for v in P.vars:
        if v.startswith("S") and v[1:].isdigit():
            out = out + P.diff(v) * S(int(v[1:]) + 1)
    return out


def t_primitive(P, var="t"):
    """Divide out the content over Q[t] and normalize the rational content."""
    if P.is_zero():
        return P
    if var not in P.vars:
        return P.primitive()
    i = P.vars.index(var)
    groups = {}
    for e, c in P.terms.items():
        key = e[:i] + e[i + 1:]
        cs = groups.setdefault(key, {})
        cs[e[i]] = c
    polys = []
    for cs in groups.values():
        dense = [0] * (max(cs) + 1)
        for k, c in cs.items():
            dense[k] = c
        polys.append(Poly(dense, var))
    g = reduce(poly_gcd, polys)
    if g.degree > 0:
        P = P.exact_div(MultiPoly.from_poly(g.monic()))
    return P.primitive()


def riccatize(L, N=None):
    """Polynomial relation in S0..S_n, t for C annihilated by L of order n.

    Uses C' = (S0 + 1/4) C / (t(t-1)) and C^(k) = P_k C / (t(t-1))^k.
    """
    n = L.order
    if N is not None and n != N + 1:
        raise ValueError(f"operator of order {n} does not match N = {N}")
    t = _t()
    w = t * (t - 1)
    dw = t * 2 - 1
    quarter = as_rational("1/4")
    P = [MultiPoly.const(1)]
    for k in range(n):
        Pk = P[-1]
        P.append(w * total_derivative(Pk) - dw * Pk * k + (S(0) + quarter) * Pk)
    coeffs = L.cleared()
    rel = MultiPoly.const(0)
    for k, a in enumerate(coeffs):
        if a:
            rel = rel + MultiPoly.from_poly(a.rename("t")) * P[k] * w ** (n - k)
    return t_primitive(rel)


def series_substitute(P, values):
    """Evaluate a polynomial at series values, ``{name: TruncatedSeries}``."""
    cache = {}

    def power(name, k):
        key = (name, k)
        if key not in cache:
            cache[key] = values[name] if k == 1 else power(name, k - 1) * values[name]
        return cache[key]

    out = None
    for e, c in P.terms.items():
        term = None
        for name, k in zip(P.vars, e):
            if k:
                f = power(name, k)
                term = f if term is None else term * f
        if term is None:
            term = TruncatedSeries.constant(c)
        else:
            term = term.scale(c)
        out = term if out is None else out + term
    return out if out is not None else TruncatedSeries.constant(0)


def bundle_values(S_bundle, count=4):
    var = S_bundle.S0.var
    vals = {f"S{k}": S_bundle[k] for k in range(count)}
    vals["t"] = TruncatedSeries.monomial(1, var=var)
    return vals


@dataclass
class CurveRelation:
    polynomial: MultiPoly
    N: object = None
    flagged: bool = False          # several factors survived the membership test
    discarded: list = field(default_factory=list)

    def to_dict(self):
        return {"N": None if self.N is None else str(self.N),
                "polynomial": self.polynomial.to_dict(),
                "flagged": self.flagged, "discarded_factors": len(self.discarded)}


def _poly_of(curve):
    return curve.polynomial if isinstance(curve, CurveRelation) else curve


def curve_residual(curve, S_bundle):
    """The curve polynomial evaluated on the (S0, S1) series of a bundle."""
    P = _poly_of(curve)
    return series_substitute(P, bundle_values(S_bundle))


def _default_bundle(N, order=40):
    C = correlation_diag(N, order=order + N // 2 + 6)
    return sigma_bundle(C, HIGH, N)


def _factors(P):
    expr = P.to_sympy()
    _, facs = sympy.factor_list(expr)
    return [MultiPoly.from_sympy(f) for f, _ in facs]


def eliminate_curve(riccati_rel, N, bundle=None):
    """Eliminate S_N, ..., S2 against the sigma form and its derivatives.

    The resultant picks up spurious factors; each irreducible factor is
    tested on the (S0, S1) series of C(N,N) and only vanishing ones are kept.
    """
    top = max((int(v[1:]) for v in riccati_rel.vars
               if v.startswith("S") and riccati_rel.degree(v) > 0), default=-1)
    if top < 0:
        raise CurveError("relation does not involve sigma")
    jm = jm_polynomial(N)
    derivs = [jm]
    for _ in range(max(top - 2, 0)):
        derivs.append(total_derivative(derivs[-1]))
    cur = riccati_rel
    for m in range(top, 1, -1):
        res = resultant_eliminate(cur, derivs[m - 2], f"S{m}")
        if res.is_zero():
            raise CurveError("elimination collapsed to zero (relation is a "
                             "consequence of the sigma form)")
        cur = t_primitive(res)
    if bundle is None:
        bundle = _default_bundle(N)
    vals = bundle_values(bundle)
    keep, drop = [], []
    for f in _factors(cur):
        if not any(f.degree(v) > 0 for v in ("S0", "S1")):
            drop.append(f)
            continue
        r = series_substitute(f, vals)
        (keep if r.is_zero() else drop).append(f)
    if not keep:
        raise CurveError("no surviving factor")
    poly = reduce(lambda a, b: a * b, keep)
    return CurveRelation(t_primitive(poly), N, len(keep) > 1, drop)


def same_up_to_content(P, Q):
    """Equality up to a nonzero rational factor."""
    P, Q = _poly_of(P), _poly_of(Q)
    if P.is_zero() or Q.is_zero():
        return P.is_zero() and Q.is_zero()
    return P.primitive() == Q.primitive()


# parametrizations ---------------------------------------------------------

def _lift(p):
    if isinstance(p, MultiPoly):
        return p
    if isinstance(p, Poly):
        return MultiPoly.from_poly(p.rename("t"))
    return MultiPoly.const(p)


@dataclass
class Parametrization:
    """S0 = n0/d0 and S1 = n1/d1 with polynomials in (u, t)."""
    n0: MultiPoly
    d0: MultiPoly
    n1: MultiPoly
    d1: MultiPoly

    @classmethod
    def from_components(cls, comp):
        """Build from A0..A2, B0..B2, C0..C3, alpha0, alpha1 (polynomials in t).

        S0 = (3/4) A/B and S1 = (3/t)(alpha1 u + alpha0) C / B^2.
        """
        u = MultiPoly.var("u")

        def upoly(prefix, deg):
            return sum((_lift(comp[f"{prefix}{k}"]) * u ** k for k in range(deg + 1)),
                       MultiPoly.const(0))

        A, B, C = upoly("A", 2), upoly("B", 2), upoly("C", 3)
        al = _lift(comp["alpha1"]) * u + _lift(comp["alpha0"])
        three = as_rational(3)
        return cls(A * three, B * 4, al * C * three, _t() * B * B)


def param_verify(curve, param):
    """Exact check that the parametrization lies on the curve."""
    P = _poly_of(curve)
    d0 = P.degree("S0")
    d1 = P.degree("S1")
    pw0 = [MultiPoly.const(1)]
    pw1 = [MultiPoly.const(1)]
    for _ in range(max(d0, d1)):
        pw0.append(pw0[-1] * param.n0)
        pw1.append(pw1[-1] * param.n1)
    dd0 = [MultiPoly.const(1)]
    dd1 = [MultiPoly.const(1)]
    for _ in range(max(d0, d1)):
        dd0.append(dd0[-1] * param.d0)
        dd1.append(dd1[-1] * param.d1)
    total = MultiPoly.const(0)
    i0 = P.vars.index("S0") if "S0" in P.vars else None
    i1 = P.vars.index("S1") if "S1" in P.vars else None
    rest = [k for k, v in enumerate(P.vars) if k not in (i0, i1)]
    rest_vars = [P.vars[k] for k in rest]
    groups = {}
    for e, c in P.terms.items():
        a = e[i0] if i0 is not None else 0
        b = e[i1] if i1 is not None else 0
        groups.setdefault((a, b), {})[tuple(e[k] for k in rest)] = c
    for (a, b), sub in groups.items():
        coeff = MultiPoly(rest_vars, sub)
        total = total + coeff * pw0[a] * dd0[d0 - a] * pw1[b] * dd1[d1 - b]
    return total.is_zero()


def riccati_residual(param, riccati):
    """Numerator of dS0/du * (b2 u^2 + b1 u + b0) + dS0/dt - S1."""
    u = MultiPoly.var("u")
    b2, b1, b0 = (riccati[k] for k in ("beta2", "beta1", "beta0"))
    D = reduce(poly_lcm, [b.den for b in (b2, b1, b0)])
    m = [b.num * D.exact_div(b.den) for b in (b0, b1, b2)]
    rhs = sum((_lift(mk) * u ** k for k, mk in enumerate(m)), MultiPoly.const(0))
    Dm = _lift(D)
    n0, d0, n1, d1 = param.n0, param.d0, param.n1, param.d1
    # S0_u * beta + S0_t = [(n0_u d0 - n0 d0_u) rhs + Dm (n0_t d0 - n0 d0_t)] / (Dm d0^2)
    top = (n0.diff("u") * d0 - n0 * d0.diff("u")) * rhs + \
        Dm * (n0.diff("t") * d0 - n0 * d0.diff("t"))
    bottom = Dm * d0 * d0
    return top * d1 - n1 * bottom


def riccati_consistency(param, riccati):
    """Exact identity S1 = dS0/du * du/dt + dS0/dt with du/dt from the Riccati."""
    return riccati_residual(param, riccati).is_zero()
