"""Guess linear ODEs with polynomial coefficients from truncated series."""
from dataclasses import dataclass, field
from fractions import Fraction


from .diffops.operator import DiffOperator, op_apply
from .exactcore.linalg import rational_nullspace
from .exactcore.poly import Poly
from .exactcore.series import TruncatedSeries

__all__ = ["GuessSpec", "GuessError", "InsufficientSeries", "AmbiguousGuess",
           "guess_ode", "minimal_ode", "gform_profile", "free_profile"]


class GuessError(ValueError):
    pass


class InsufficientSeries(GuessError):
    def __init__(self, required, available):
        super().__init__(f"insufficient series length: need {required} equations, "
                         f"have {available}")
        self.required = required
        self.available = available


class AmbiguousGuess(GuessError):
    def __init__(self, dim):
        super().__init__(f"ambiguous: enlarge margin (nullspace dimension {dim})")
        self.dimension = dim


def gform_profile(order, var="t"):
    """Per-D^i (fixed factor, free degree) pairs for the C(N,N) shape, N = order - 1."""
    N = order - 1
    t = Poly.x(var)
    one = Poly.const(1, var)
    prof = [(one, N - 1), (t * (t - 1), N - 1)]
    for i in range(2, order + 1):
        prof.append((t ** i * (t - 1) ** (i - 1), N + 1 - i))
    return prof


def free_profile(order, degree, var="t"):
    one = Poly.const(1, var)
    return [(one, degree) for _ in range(order + 1)]


@dataclass
class GuessSpec:
    order: int
    profile: list = None          # [(fixed Poly, free degree)] per D^i
    safety_margin: int = 10
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.profile is not None:
            if len(self.profile) != self.order + 1:
                raise ValueError("profile needs one entry per D^i")
            if any(d < 0 for _, d in self.profile):
                raise ValueError("degree bounds must be nonnegative")

    @classmethod
    def gform(cls, order, var="t", margin=10):
        return cls(order, gform_profile(order, var), margin, {"profile": "gform"})

    @classmethod
    def free(cls, order, degree, var="t", margin=10):
        return cls(order, free_profile(order, degree, var), margin, {"profile": "free"})

    def resolved(self, var):
        if self.profile is None:
            return gform_profile(self.order, var)
        return self.profile

    @property
    def unknowns(self):
        return sum(d + 1 for _, d in self.resolved("t"))


def _columns(y, profile):
    """Series for every unknown, plus the common valid order."""
    cols = []
    deriv = y
    for i, (fixed, deg) in enumerate(profile):
        if i:
            deriv = deriv.derivative()
        base = deriv * _exact(fixed.rename(y.var))
        for j in range(deg + 1):
            cols.append(base.mul_power(j))
    valid = min(c.valid_order for c in cols)
    return cols, valid


def _exact(p):
    return TruncatedSeries.exact(p.c, var=p.var)


def _equations(cols, valid, step):
    """One row per exponent on the series' grid below ``valid``.

    Rows that vanish identically still count: they are genuine (empty)
    constraints of the truncated data.
    """
    leads = [c.leading_exponent for c in cols if c.coeffs]
    if not leads:
        return []
    e = min(leads)
    rows = []
    while e < valid:
        rows.append([c.coefficient(e) for c in cols])
        e += step
    return rows


def _build(vec, profile, var):
    coeffs = []
    k = 0
    for fixed, deg in profile:
        p = Poly(vec[k:k + deg + 1], var)
        k += deg + 1
        coeffs.append(fixed.rename(var) * p)
    return DiffOperator(coeffs, var)


def guess_ode(y, spec, *, check=True, extra=0):
    """Fit a single operator in the ansatz of ``spec``.

    Uses ``unknowns + safety_margin`` equations; with ``extra > 0`` that many
    further equations must be available and are used only to verify.
    Returns the canonical operator, or ``None`` if the ansatz has no solution.
    """
    profile = spec.resolved(y.var)
    n = sum(d + 1 for _, d in profile)
    cols, valid = _columns(y, profile)
    rows = _equations(cols, valid, Fraction(1, y.ram))
    need = n + spec.safety_margin
    if len(rows) < need + extra:
        raise InsufficientSeries(need + extra, len(rows))
    ker = rational_nullspace(rows[:need], n)
    if not ker:
        return None
    if len(ker) > 1:
        raise AmbiguousGuess(len(ker))
    vec = ker[0]
    for row in rows[need:]:
        if sum(a * b for a, b in zip(row, vec)) != 0:
            return None
    L = _build(vec, profile, y.var).canonical()
    if check and not op_apply(L, y, cleared=True).is_zero():
        return None
    return L


def minimal_ode(y, max_order, max_degree, *, margin=10, extra=20, profile="free"):
    """Iterative deepening over (order, degree), smallest total first.

    Every hit is checked against ``extra`` series terms left out of the fit.
    """
    if max_order < 1 or max_degree < 0:
        raise ValueError("bounds must be positive")
    if profile == "gform":
        for order in range(1, max_order + 1):
            spec = GuessSpec.gform(order, y.var, margin)
            try:
                L = guess_ode(y, spec, extra=extra)
            except AmbiguousGuess:
                continue
            if L is not None:
                return L
        raise GuessError("no operator within bounds")
    for total in range(1, max_order + max_degree + 1):
        for order in range(1, max_order + 1):
            degree = total - order
            if degree < 0 or degree > max_degree:
                continue
            spec = GuessSpec.free(order, degree, y.var, margin)
            try:
                L = guess_ode(y, spec, extra=extra)
            except AmbiguousGuess:
                continue
            if L is not None:
                return L
    raise GuessError("no operator within bounds")
