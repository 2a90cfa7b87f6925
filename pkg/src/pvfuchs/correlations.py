"""Diagonal Ising correlations from Toeplitz determinants, elliptic-integral
closed forms, and the hypergeometric solution h_N."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from .exactcore.rational import (as_rational, binomial, factorial,
                                 format_rational, parse_rational, pochhammer)
from .exactcore.series import (SeriesError, TruncatedSeries, change_variable,
                               pfq_series, pfq_terminating)

__all__ = [
    "TruncationDeficit", "ToeplitzSpec", "toeplitz_entry", "toeplitz_matrix",
    "correlation_diag", "determinant_laplace", "determinant_elimination",
    "elliptic_series", "elliptic_t_series", "CoefficientFunction",
    "EKPolynomial", "ek_evaluate", "leading_data", "HyperSolution",
    "hyper_solution", "hyper_coefficient", "boundary_gap",
    "boundary_coefficient", "low_temperature_gap_coefficient",
]


class TruncationDeficit(SeriesError):
    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


@dataclass(frozen=True)
class ToeplitzSpec:
    N: int
    dual: bool = False
    order: int = 40

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.order < 1:
            raise ValueError("order must be at least 1")


def toeplitz_entry(n, order, branch=None):
    """The entry a_n as a series in t, valid below ``t**order``.

    ``branch`` forces the ``"upper"`` (n >= -1) or ``"lower"`` (n <= -1)
    hypergeometric representation; both apply at n = -1.
    """
    if branch is None:
        branch = "upper" if n >= -1 else "lower"
    if branch == "upper":
        if n < -1:
            raise ValueError("upper branch needs n >= -1")
        pref = -pochhammer(mpq(-1, 2), n + 1) / factorial(n + 1)
        lead = Fraction(n + 1, 2)
        upper, lower = [mpq(1, 2), n + mpq(1, 2)], [n + 2]
    elif branch == "lower":
        if n > -1:
            raise ValueError("lower branch needs n <= -1")
        pref = -pochhammer(mpq(1, 2), -n - 1) / factorial(-n - 1)
        lead = Fraction(-n - 1, 2)
        upper, lower = [mpq(-1, 2), -n - mpq(1, 2)], [-n]
    else:
        raise ValueError(f"unknown branch {branch!r}")
    nterms = max(int(Fraction(order) - lead + 1), 0)
    f = pfq_series(upper, lower, "t", nterms).scale(pref).mul_power(lead)
    return f.truncate(order) if f.valid_order > order else f


def toeplitz_matrix(N, order, dual=False):
    shift = 1 if dual else 0
    cache = {}
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            n = i - j - shift
            if n not in cache:
                cache[n] = toeplitz_entry(n, order)
            row.append(cache[n])
        rows.append(row)
    return rows


def determinant_laplace(rows):
    """Cofactor expansion along the first row, with memoized minors."""
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(r, cols):
        if r == n:
            return None
        acc = None
        for k, c in enumerate(cols):
            sub = minor(r + 1, cols[:k] + cols[k + 1:])
            term = rows[r][c] if sub is None else rows[r][c] * sub
            if k % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc

    return minor(0, tuple(range(n)))


def determinant_elimination(rows):
    """Gaussian elimination over Laurent series (an independent route)."""
    m = [list(r) for r in rows]
    n = len(m)
    det = None
    sign = 1
    for k in range(n):
        # pivot on the lowest leading exponent for stability of precision
        cand = [i for i in range(k, n) if not m[i][k].is_zero()]
        if not cand:
            return m[0][0].scale(0)
        p = min(cand, key=lambda i: m[i][k].leading_exponent)
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        det = piv if det is None else det * piv
        inv = piv.reciprocal()
        for i in range(k + 1, n):
            if m[i][k].is_zero():
                continue
            f = m[i][k] * inv
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - f * m[k][j]
    return det if sign > 0 else -det


def correlation_diag(spec, order=None, dual=None):
    """C(N,N) (or the dual C*(N,N)) as an exact series in t.

    Accepts a :class:`ToeplitzSpec` or an integer N.  The result is valid at
    least below ``t**order``.
    """
    if not isinstance(spec, ToeplitzSpec):
        spec = ToeplitzSpec(int(spec), bool(dual), order if order is not None else 40)
    N, order = spec.N, spec.order
    rows = toeplitz_matrix(N, order + N, spec.dual)
    det = determinant_laplace(rows)
    if spec.dual and N % 2:
        det = -det
    if det.valid_order < order:
        raise TruncationDeficit(
            f"C({N},{N}) only valid to t^{det.valid_order}, wanted t^{order}",
            required=order)
    return det.truncate(order)


# ----------------------------------------------------------------------
# elliptic integrals
def elliptic_t_series(kind, order, var="t"):
    """E or K as 2F1(1/2, -+1/2; 1; t), valid below ``t**order``."""
    if kind not in ("E", "K"):
        raise ValueError("kind must be 'E' or 'K'")
    b = mpq(-1, 2) if kind == "E" else mpq(1, 2)
    return pfq_series([mpq(1, 2), b], [1], var, int(order))


def elliptic_series(kind, order):
    """E(s) or K(s) with t = s**4, valid below ``s**order``."""
    nt = -(-int(order) // 4)
    s = change_variable(elliptic_t_series(kind, nt), "power", 4, new_var="s")
    return s.truncate(order)


def sqrt_one_plus_s2(order):
    """(1 + s^2)^(1/2) expanded below ``s**order``."""
    coeffs = []
    for k in range(int(order)):
        coeffs.append(binomial(mpq(1, 2), k // 2) if k % 2 == 0 else mpq(0))
    return TruncatedSeries(coeffs, valid=int(order), var="s")


@dataclass(frozen=True)
class CoefficientFunction:
    """Laurent polynomial in s, optionally times (1 + s^2)^(1/2)."""
    laurent: tuple  # ((exponent, mpq), ...)
    sqrt: bool = False

    @classmethod
    def make(cls, mapping, sqrt=False):
        items = tuple(sorted((int(e), as_rational(c)) for e, c in mapping.items()
                             if as_rational(c) != 0))
        return cls(items, sqrt)

    def min_exponent(self):
        return min((e for e, _ in self.laurent), default=0)

    def series(self, order):
        lau = TruncatedSeries.from_terms(dict(self.laurent), valid_order=None, var="s")
        if not self.sqrt:
            return lau.truncate(order) if lau.coeffs else \
                TruncatedSeries([], valid=order, base=order, var="s")
        lo = self.min_exponent()
        return (lau * sqrt_one_plus_s2(order - lo)).truncate(order)


@dataclass(frozen=True)
class EKPolynomial:
    """``sum coeff(i, j) * E**i * K**j`` with coefficient functions of s."""
    monomials: dict = field(hash=False)
    label: str = ""

    def degrees(self):
        return sorted({i + j for (i, j) in self.monomials})

    def pole_order(self):
        return max((-cf.min_exponent() for cf in self.monomials.values()), default=0)

    def to_list(self):
        out = []
        for (i, j), cf in sorted(self.monomials.items()):
            out.append({"i": i, "j": j,
                        "laurent_coefficients": [[e, format_rational(c)]
                                                 for e, c in cf.laurent],
                        "sqrt_flag": cf.sqrt})
        return out

    @classmethod
    def from_list(cls, items, label=""):
        mons = {}
        for it in items:
            cf = CoefficientFunction.make(
                {e: parse_rational(c) for e, c in it["laurent_coefficients"]},
                it.get("sqrt_flag", False))
            mons[(it["i"], it["j"])] = cf
        return cls(mons, label)


def ek_evaluate(form, order):
    """Expand an E/K polynomial as an s-series valid below ``s**order``."""
    pole = form.pole_order()
    inner = order + pole
    E = elliptic_series("E", inner)
    K = elliptic_series("K", inner)
    acc = TruncatedSeries([], valid=order, base=order, var="s")
    for (i, j), cf in form.monomials.items():
        m = E ** i * K ** j
        if i == 0 and j == 0:
            m = TruncatedSeries.constant(1, var="s")
        acc = acc + (m * cf.series(inner)).truncate(order)
    return acc


# ----------------------------------------------------------------------
# leading data, h_N and the boundary gap
def leading_data(N):
    """First two coefficients d0, d1 of C(N,N) = d0 t^(N/2) + d1 t^(N/2+1) + ..."""
    if N < 1:
        raise ValueError("N must be at least 1")
    g2n1 = factorial(2 * N)
    d0 = g2n1 / (factorial(N) ** 2 * 4 ** N)
    d1 = g2n1 * N / (factorial(N) * factorial(N + 1) * 4 ** (N + 1))
    return {"d0": d0, "d1": d1}


def _central(N):
    """Gamma(2N+1) / (Gamma(N+1)^2 4^N) for rational N via Pochhammer ratios."""
    N = as_rational(N)
    if N.denominator == 1 and N >= 0:
        n = int(N)
        return factorial(2 * n) / (factorial(n) ** 2 * 4 ** n)
    raise ValueError("normalization only defined for nonnegative integer N")


def hyper_coefficient(N, k):
    """c_k(N) through the terminating 3F2 at 1."""
    N = as_rational(N)
    f = pfq_terminating([mpq(1, 2), mpq(1, 2) + N, -k], [1 + N, mpq(5, 4) - k], 1)
    return _central(N) * pochhammer(mpq(-1, 4), k) / factorial(k) * f


def _f_branch(N, sign, order):
    # t^(sign N/2) (1-t)^(1/4) 2F1(1/2, 1/2 + sign N; 1 + sign N; t)
    lead = Fraction(sign) * Fraction(N) / 2
    n = max(int(Fraction(order) - lead) + 1, 1)
    hyp = pfq_series([mpq(1, 2), mpq(1, 2) + sign * N], [1 + sign * N], "t", n)
    quarter = pfq_series([mpq(-1, 4)], [], "t", n)     # (1 - t)^(1/4)
    return (hyp * quarter).mul_power(lead)


@dataclass(frozen=True)
class HyperSolution:
    N: object
    lam: object
    f_plus: TruncatedSeries
    f_minus: TruncatedSeries = None

    @property
    def tau(self):
        if self.f_minus is None or self.lam == 0:
            return self.f_plus
        return self.f_plus + self.f_minus.scale(self.lam)


def hyper_solution(N, lam=0, order=40):
    """The solutions f+ and f- of L_h (f+ scaled to h_N for integer N)."""
    N = as_rational(N)
    lam = as_rational(lam)
    if N.denominator == 1:
        if lam != 0:
            raise ValueError("logarithmic second solution unsupported for integer N")
        fp = _f_branch(N, 1, order).scale(_central(N))
        return HyperSolution(N, lam, fp.truncate(order), None)
    fp = _f_branch(N, 1, order)
    fm = _f_branch(N, -1, order)
    return HyperSolution(N, lam, fp.truncate(order), fm.truncate(order))


def boundary_coefficient(N):
    """Closed form of the first nonzero coefficient of C(N,N) - h_N."""
    return mpq(1, 16) * pochhammer(mpq(1, 2), N) * pochhammer(mpq(3, 2), N) ** 2 / (
        factorial(N + 1) * factorial(N + 2) ** 2)


def low_temperature_gap_coefficient(N):
    """Coefficient of t^(N+1) in C*(N,N) - (1-t)^(1/4)."""
    return mpq(1, 4) * pochhammer(mpq(1, 2), N) * pochhammer(mpq(3, 2), N) / \
        factorial(N + 1) ** 2


def boundary_gap(N, order=None):
    """C(N,N) - h_N: leading exponent, its coefficient, and the gap series."""
    need = Fraction(3 * N, 2) + 2
    if order is None:
        order = int(need) + 3
    if order <= need:
        raise TruncationDeficit(f"order must exceed {need} to expose the gap",
                                required=int(need) + 1)
    C = correlation_diag(ToeplitzSpec(N, False, order))
    h = hyper_solution(N, 0, order).f_plus
    gap = C - h
    if gap.is_zero():
        raise TruncationDeficit("gap vanishes to the computed order",
                                required=order + 2)
    return {"leading_exponent": gap.leading_exponent,
            "leading_coefficient": gap.leading_coefficient,
            "gap_series": gap}
