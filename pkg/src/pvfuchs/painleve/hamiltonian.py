"""Malmquist Hamiltonian for the sigma form and checks of Hamilton's equations."""
from dataclasses import dataclass

from ..correlations import elliptic_t_series
from ..exactcore import MultiPoly, TruncatedSeries, as_rational, format_rational
from .curves import series_substitute


@dataclass
class HamiltonianData:
    n: tuple                 # (n1, n2, n3, n4)
    p: tuple                 # (numerator, denominator) in E, K, t
    q: tuple

    @classmethod
    def ising(cls, N, p, q):
        N = as_rational(N)
        return cls((N / 2, (1 - N) / 2, (1 + N) / 2, N / 2), p, q)

    @classmethod
    def from_fixture(cls, value):
        return cls(tuple(value["n"]), value["p"], value["q"])

    def H(self):
        """t(t-1) H as a polynomial in p, q, t."""
        n1, n2, n3, n4 = self.n
        p, q, t = MultiPoly.symbols("p", "q", "t")
        Q = (q - 1) * (q - t) * (n3 + n4) + q * (q - t) * (n3 - n4) \
            - (q - 1) * q * (n1 + n2)
        return q * (q - 1) * (q - t) * p * p - Q * p + (q - t) * ((n3 - n1) * (n3 - n2))

    def negated_p(self):
        num, den = self.p
        return HamiltonianData(self.n, (-num, den), self.q)

    def to_dict(self):
        return {"n": [format_rational(x) for x in self.n], "tH": str(self.H())}


def _ratio(frac, values):
    num, den = frac
    return series_substitute(num, values) / series_substitute(den, values)


def hamiltonian_residual(data, order=30):
    """Series of p' + dH/dq and q' - dH/dp, with E, K as 2F1 in t."""
    extra = 12
    values = {"E": elliptic_t_series("E", order + extra),
              "K": elliptic_t_series("K", order + extra),
              "t": TruncatedSeries.monomial(1)}
    p = _ratio(data.p, values)
    q = _ratio(data.q, values)
    tH = data.H()
    w = TruncatedSeries.exact([0, -1, 1])
    pv = {"p": p, "q": q, "t": values["t"]}
    dHdq = series_substitute(tH.diff("q"), pv) / w
    dHdp = series_substitute(tH.diff("p"), pv) / w
    return p.derivative() + dHdq, q.derivative() - dHdp
