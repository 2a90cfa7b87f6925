"""The sigma form of Painleve VI: bundles, parameters and residuals."""
from dataclasses import dataclass
from fractions import Fraction

from ..exactcore import MultiPoly, TruncatedSeries, as_rational, binomial, format_rational

HIGH = "high"
LOW = "low"


@dataclass
class Verdict:
    check: str
    status: str                 # "pass" or "fail"
    valid_order: object = None  # Fraction, or None for an exact identity
    witness: object = None      # first nonzero term when failing

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        vo = "exact" if self.valid_order is None else str(self.valid_order)
        w = self.witness
        if isinstance(w, tuple):
            w = {"exponent": str(w[0]), "coefficient": format_rational(w[1])}
        elif w is not None:
            w = str(w)
        return {"check": self.check, "status": self.status,
                "valid_order": vo, "witness": w}


def series_verdict(check, residual):
    """Pass iff ``residual`` vanishes on its whole range of validity."""
    if residual.is_zero():
        return Verdict(check, "pass", residual.valid_order)
    return Verdict(check, "fail", residual.valid_order, residual.terms()[0])


@dataclass
class SigmaBundle:
    """sigma (or zeta) with its first three derivatives."""
    S0: TruncatedSeries
    S1: TruncatedSeries
    S2: TruncatedSeries
    S3: TruncatedSeries
    regime: str = HIGH
    N: object = None
    kind: str = "sigma"

    @classmethod
    def from_series(cls, s, regime=HIGH, N=None, kind="sigma"):
        d1 = s.derivative()
        d2 = d1.derivative()
        return cls(s, d1, d2, d2.derivative(), regime, N, kind)

    @property
    def valid_order(self):
        return self.S2.valid_order

    def __getitem__(self, k):
        return (self.S0, self.S1, self.S2, self.S3)[k]

    def to_zeta(self):
        """Shift sigma to zeta = sigma - N^2 t/4 + 1/8 (Ising parameters only)."""
        if self.kind == "zeta":
            return self
        if self.N is None:
            raise ValueError("the sigma to zeta shift needs N")
        N = as_rational(self.N)
        shift = TruncatedSeries.exact([Fraction(1, 8), -N * N / 4], var=self.S0.var)
        return SigmaBundle.from_series(self.S0 + shift, self.regime, self.N, "zeta")


@dataclass(frozen=True)
class PVIParams:
    v1: object
    v2: object
    v3: object
    v4: object

    def __post_init__(self):
        for k in ("v1", "v2", "v3", "v4"):
            object.__setattr__(self, k, as_rational(getattr(self, k)))

    @property
    def v(self):
        return (self.v1, self.v2, self.v3, self.v4)

    @property
    def K1(self):
        v1, v2, v3, _ = self.v
        return v1 * v2 - v1 * v3 - v2 * v3

    @property
    def K2(self):
        v1, v2, v3, v4 = self.v
        return -(v1 * v2 - v1 * v3 - v1 * v4 - v2 * v3 - v2 * v4 + v3 * v4) / 2

    @classmethod
    def ising(cls, N):
        N = as_rational(N)
        return cls(N / 2, (1 - N) / 2, (1 + N) / 2, N / 2)


def log_derivative(tau):
    return tau.derivative() / tau


def _w(var):
    # t(t - 1)
    return TruncatedSeries.exact([0, -1, 1], var=var)


def sigma_bundle(C, regime=HIGH, N=None):
    """sigma = t(t-1) (log C)' - 1/4 (high-T) or - t/4 (low-T), plus derivatives."""
    if C.is_zero():
        raise ValueError("C needs a nonzero leading coefficient")
    if regime not in (HIGH, LOW):
        raise ValueError(f"unknown regime {regime!r}")
    s = _w(C.var) * log_derivative(C)
    if regime == HIGH:
        s = s - Fraction(1, 4)
    else:
        s = s - TruncatedSeries.monomial(1, Fraction(1, 4), var=C.var)
    return SigmaBundle.from_series(s, regime, N)


def zeta_bundle(tau, params):
    """zeta = t(t-1) (log tau)' + K1 t + K2 for general parameters."""
    lin = TruncatedSeries.exact([params.K2, params.K1], var=tau.var)
    return SigmaBundle.from_series(_w(tau.var) * log_derivative(tau) + lin, kind="zeta")


def jm_residual(S, N):
    """(t(t-1)S2)^2 - N^2((t-1)S1 - S0)^2 + 4 S1((t-1)S1 - S0 - 1/4)(t S1 - S0)."""
    N = as_rational(N)
    var = S.S0.var
    t = TruncatedSeries.monomial(1, var=var)
    a = _w(var) * S.S2
    b = (t - 1) * S.S1 - S.S0
    c = t * S.S1 - S.S0
    return a * a - b * b * (N * N) + S.S1 * (b - Fraction(1, 4)) * c * 4


def general_residual(Z, params):
    """Residual of the four-parameter sigma form in zeta."""
    var = Z.S0.var
    t = TruncatedSeries.monomial(1, var=var)
    z, z1, z2 = Z.S0, Z.S1, Z.S2
    v1, v2, v3, v4 = params.v
    a = _w(var) * z2
    b = z1 * (t * z1 - z) * 2 - z1 * z1 - v1 * v2 * v3 * v4
    rhs = (z1 + v1 * v1) * (z1 + v2 * v2) * (z1 + v3 * v3) * (z1 + v4 * v4)
    return z1 * a * a + b * b - rhs


def pvi_residual(S, params):
    """Residual series of the sigma form.

    ``params`` is either N (the Ising equation in sigma) or a
    :class:`PVIParams`; in the latter case ``S`` must carry zeta, except for a
    sigma bundle with Ising parameters, which is shifted first.
    """
    if isinstance(params, PVIParams):
        if S.kind == "sigma":
            if S.N is None or params != PVIParams.ising(S.N):
                raise ValueError("general parameters need a zeta bundle")
            S = S.to_zeta()
        return general_residual(S, params)
    return jm_residual(S, params)


def jm_polynomial(N):
    """The Ising sigma form as a polynomial in S2, S1, S0, t."""
    N = as_rational(N)
    S2, S1, S0, t = MultiPoly.symbols("S2", "S1", "S0", "t")
    a = t * (t - 1) * S2
    b = (t - 1) * S1 - S0
    return a * a - b * b * (N * N) + S1 * (b - Fraction(1, 4)) * (t * S1 - S0) * 4


def power_series(alpha, beta, order, var="t"):
    """t^alpha (1-t)^beta below t^(alpha + order)."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    cs = [binomial(beta, k) * (-1) ** k for k in range(order)]
    return TruncatedSeries(cs, valid=order, var=var).mul_power(Fraction(alpha))


@dataclass
class TauPowerReport:
    alpha: object
    beta: object
    N: object
    constraint_value: object
    residual: TruncatedSeries

    @property
    def verdict(self):
        return series_verdict("tau-power", self.residual)

    def to_dict(self):
        return {"alpha": format_rational(self.alpha), "beta": format_rational(self.beta),
                "N": format_rational(self.N),
                "constraint_value": format_rational(self.constraint_value),
                **self.verdict.to_dict()}


def tau_constraint(alpha, beta, N):
    a, b, N = as_rational(alpha), as_rational(beta), as_rational(N)
    return (4 * b - 1) ** 2 * N * N + 16 * b * (4 * a + 1) * (a + b)


def tau_power_check(alpha, beta, N, order=40):
    """Constraint value and sigma-form residual for tau = t^alpha (1-t)^beta."""
    tau = power_series(alpha, beta, order + 3)
    S = sigma_bundle(tau, HIGH, N)
    res = jm_residual(S, N)
    return TauPowerReport(as_rational(alpha), as_rational(beta), as_rational(N),
                          tau_constraint(alpha, beta, N), res)


def algebraic_tau_pairs(N):
    """The listed (alpha, beta) families, evaluated at N."""
    N = as_rational(N)
    out = [(-(4 * N * N + 1) / 8, N * N), (Fraction(-1, 4), Fraction(1, 4)),
           (N / 2, -N / (4 * (N + 1)))]
    if N != 1:
        out.insert(0, (-N / 2, -N / (4 * (N - 1))))
    return [(as_rational(a), as_rational(b)) for a, b in out]
