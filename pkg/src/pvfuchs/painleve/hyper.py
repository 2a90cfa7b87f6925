"""The second-order operator whose solutions give sigma-form solutions for any N."""
from ..diffops import DiffOperator
from ..exactcore import Poly, RationalFunction, as_rational


def hyper_operator(N):
    """D^2 + (1/t + 1/(2(t-1))) D - N^2/(4t^2) + 1/(16(t-1)^2)."""
    N = as_rational(N)
    t = Poly.x("t")
    one = Poly.const(1, "t")
    c1 = RationalFunction(one, t) + RationalFunction(one, (t - 1) * 2)
    c0 = RationalFunction(Poly.const(-N * N / 4, "t"), t * t) + \
        RationalFunction(one, (t - 1) ** 2 * 16)
    return DiffOperator([c0, c1, 1], "t")


def instantiate_template(template, N):
    """Specialize an operator template (coefficients in t and a parameter)."""
    par = template["parameter"]
    var = template["variable"]
    coeffs = []
    for num, den in template["coefficients"]:
        n = num.evaluate({par: as_rational(N)})
        d = den.evaluate({par: as_rational(N)})
        n = n.to_poly(var) if hasattr(n, "to_poly") else Poly.const(n, var)
        d = d.to_poly(var) if hasattr(d, "to_poly") else Poly.const(d, var)
        coeffs.append(RationalFunction(n, d))
    return DiffOperator(coeffs, var)
