"""First coefficients of the local expansion of tau at t = 1, as functions of alpha."""
from dataclasses import dataclass

from ..exactcore import MultiPoly, Poly, RationalFunction, as_rational, format_rational
from .sigma import PVIParams

VAR = "alpha"
# alpha values where the printed coefficients have poles
DEGENERATE = (0, 1, -1, 2)


def _a():
    return Poly.x(VAR)


def _rf(p):
    return RationalFunction(p)


def _reflect(f):
    return f(RationalFunction(-_a()))


@dataclass
class JimboData:
    params: PVIParams
    p0: Poly
    p1: Poly
    pinf: Poly
    a1_0_m1: RationalFunction
    a1_0_p1: RationalFunction
    a1_1_0: RationalFunction
    a1_0_m2: RationalFunction
    a1_0_p2: RationalFunction

    COEFFICIENTS = ("a1_0_m1", "a1_0_p1", "a1_1_0", "a1_0_m2", "a1_0_p2")

    def symmetry_defects(self):
        """a1(0,-k; alpha) - a1(0,k; -alpha) for k = 1, 2."""
        return {1: self.a1_0_m1 - _reflect(self.a1_0_p1),
                2: self.a1_0_m2 - _reflect(self.a1_0_p2)}

    def evaluate(self, name, alpha):
        """Value at a rational alpha; poles are reported as the formula itself."""
        f = getattr(self, name)
        alpha = as_rational(alpha)
        if alpha in DEGENERATE or (-alpha) in DEGENERATE or f.den(alpha) == 0:
            return f"{name}({VAR}) = {f}  [degenerate at {VAR} = {format_rational(alpha)}]"
        return f(alpha)

    def to_dict(self):
        out = {"v": [format_rational(x) for x in self.params.v],
               "p0": str(self.p0), "p1": str(self.p1), "pinf": str(self.pinf)}
        for k in self.COEFFICIENTS:
            out[k] = str(getattr(self, k))
        return out


def _shifted_products(v):
    v1, v2, v3, v4 = v
    return [v1 + v2 + v3 - v4, v1 + v2 - v3 + v4, v1 - v2 + v3 + v4, -v1 + v2 + v3 + v4]


def jimbo_coefficients(params):
    """p0, p1, p_inf and the printed a1 coefficients for numeric v."""
    if not isinstance(params, PVIParams):
        params = PVIParams.ising(params)
    v1, v2, v3, v4 = params.v
    a = _a()
    a2 = a * a
    quarter = as_rational("1/4")
    p0 = (a2 - (v1 + v2 - v3 - v4) ** 2) * quarter
    p1 = (a2 - (v1 + v2 - v3 + v4) ** 2) * quarter
    pinf = a2 * quarter + params.K1

    num = (a - v1 - v2 - v3 + v4) * (a - v1 - v2 + v3 - v4) * \
        (a - v1 + v2 - v3 - v4) * (a + v1 - v2 - v3 - v4)
    den = a2 * (1 - a) ** 2 * 16
    m1 = RationalFunction(num, den)

    w1, w2, w3, w4 = _shifted_products(params.v)
    c = as_rational(-v1 * v2 + v1 * v3 + v1 * v4 + v2 * v3 + v2 * v4 - v3 * v4) / 2
    prod = (v1 + v2 + v3 - v4) * (v1 + v2 - v3 + v4) * (v1 - v2 + v3 + v4) * (v1 - v2 - v3 - v4)
    a10 = _rf(a2 * as_rational("-1/8") + c) + RationalFunction(Poly.const(prod, VAR), a2 * 8)

    b = (a - 2) ** 2
    bracket = (b - w1 * w1) * (b - w2 * w2) * (b - w3 * w3) * (b - w4 * w4)
    m2 = m1 * m1 * RationalFunction(bracket, (a - 1) ** 2 * (a - 2) ** 4 * (a - 3) ** 2 * 256)
    return JimboData(params, p0, p1, pinf, m1, _reflect(m1), a10, m2, _reflect(m2))


def _ising_multipoly():
    """Ising v's as polynomials in N, for the symbolic reduction check."""
    N = MultiPoly.var("N")
    half = as_rational("1/2")
    return (N * half, (1 - N) * half, (1 + N) * half, N * half)


def ising_reduction(table):
    """Compare the general formulas at Ising v's with a table in (alpha, N).

    Works in Q[alpha, N] by cross-multiplication, so the identity is checked
    for symbolic N.  Returns ``{name: bool}``.
    """
    al = MultiPoly.var(VAR)
    v1, v2, v3, v4 = _ising_multipoly()
    one = MultiPoly.const(1)
    num01 = (al - v1 - v2 - v3 + v4) * (al - v1 - v2 + v3 - v4) * \
        (al - v1 + v2 - v3 - v4) * (al + v1 - v2 - v3 - v4)
    den01 = al * al * (one - al) * (one - al) * 16
    c = (-v1 * v2 + v1 * v3 + v1 * v4 + v2 * v3 + v2 * v4 - v3 * v4) * as_rational("1/2")
    prod = (v1 + v2 + v3 - v4) * (v1 + v2 - v3 + v4) * (v1 - v2 + v3 + v4) * (v1 - v2 - v3 - v4)
    num10 = (al * al * as_rational("-1/8") + c) * al * al * 8 + prod
    den10 = al * al * 8
    ws = [v1 + v2 + v3 - v4, v1 + v2 - v3 + v4, v1 - v2 + v3 + v4, -v1 + v2 + v3 + v4]
    b = (al - 2) * (al - 2)
    bracket = one
    for w in ws:
        bracket = bracket * (b - w * w)
    num02 = num01 * num01 * bracket
    den02 = den01 * den01 * (al - 1) ** 2 * (al - 2) ** 4 * (al - 3) ** 2 * 256
    p1 = (al * al - (v1 + v2 - v3 + v4) ** 2) * as_rational("1/4")
    general = {"p1": (p1, one), "a1_0_m1": (num01, den01), "a1_1_0": (num10, den10),
               "a1_0_m2": (num02, den02)}
    out = {}
    for name, (n, d) in general.items():
        tn, td = table[name]
        out[name] = (n * td - tn * d).is_zero()
    return out


@dataclass
class Degeneration:
    alpha: object          # root of a1(0,1; alpha)
    alpha_second: object   # root of a1(0,-2; alpha) through alpha - 2 = -v1+v2-v3-v4
    v2_minus_v3: object
    satisfied: bool

    def to_dict(self):
        return {"alpha": format_rational(self.alpha),
                "alpha_second": format_rational(self.alpha_second),
                "v2_minus_v3": format_rational(self.v2_minus_v3),
                "satisfied": self.satisfied}


def degeneration_condition(params):
    """Whether one alpha kills both a1(0,1) and a1(0,-2) (second-order case)."""
    v1, v2, v3, v4 = params.v
    first = -v1 - v2 + v3 - v4
    second = 2 - v1 + v2 - v3 - v4
    return Degeneration(first, second, v2 - v3, first == second)
