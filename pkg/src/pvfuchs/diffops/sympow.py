"""Symmetric powers of second-order operators."""
from ..exactcore.linalg import field_nullspace
from .operator import DiffOperator, _rf

__all__ = ["symmetric_power"]


def symmetric_power(L, N):
    """Monic operator annihilating every product of N solutions of ``L``.

    Works in the basis ``m_k = y**(N-k) * y'**k`` and uses
    ``y'' = a*y' + b*y`` to keep derivatives inside that basis.
    """
    if L.order != 2:
        raise ValueError("symmetric_power needs an order-2 operator")
    if N < 1:
        raise ValueError("N must be positive")
    var = L.var
    c0, c1, c2 = L.coeffs
    a = -c1 / c2
    b = -c0 / c2
    zero = _rf(0, var)
    one = _rf(1, var)

    def step(v):
        out = [c.derivative() for c in v]
        for k, c in enumerate(v):
            if c.is_zero():
                continue
            if k < N:
                out[k + 1] = out[k + 1] + c * (N - k)
            if k:
                out[k] = out[k] + c * a * k
                out[k - 1] = out[k - 1] + c * b * k
        return out

    vs = [[one] + [zero] * N]
    while True:
        vs.append(step(vs[-1]))
        m = len(vs)
        rows = [[vs[j][k] for j in range(m)] for k in range(N + 1)]
        ker = field_nullspace(rows, m, one=one)
        if ker:
            vec = ker[0]
            lead = vec[-1]
            return DiffOperator([c / lead for c in vec], var)
