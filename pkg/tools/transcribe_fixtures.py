"""Regenerate the JSON fixtures under src/pvfuchs/catalog/data.

Every object below is typed in as printed (sympy syntax) and serialized
without any simplification beyond putting rational functions over a common
denominator.  Run from the repository root:

    python tools/transcribe_fixtures.py
"""
import hashlib
import json
import sys
from pathlib import Path

import sympy

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from pvfuchs.correlations import CoefficientFunction, EKPolynomial  # noqa: E402
from pvfuchs.diffops import DiffOperator  # noqa: E402
from pvfuchs.exactcore import MultiPoly, Poly, RationalFunction, as_rational  # noqa: E402

DATA = ROOT / "src" / "pvfuchs" / "catalog" / "data"

t, s, u, E, K, W, N, alpha = sympy.symbols("t s u E K W N alpha")
S0, S1, S2, S3 = sympy.symbols("S0 S1 S2 S3")
NS = {"t": t, "s": s, "u": u, "E": E, "K": K, "W": W, "N": N, "alpha": alpha,
      "S0": S0, "S1": S1, "S2": S2, "S3": S3}


def X(text):
    return sympy.sympify(text, locals=NS, rational=True)


def _poly(expr, var):
    p = sympy.Poly(sympy.expand(expr), sympy.Symbol(var))
    return Poly([as_rational(c) for c in reversed(p.all_coeffs())], var)


def rf(expr, var):
    num, den = sympy.fraction(sympy.together(X(expr) if isinstance(expr, str) else expr))
    return RationalFunction(_poly(num, var), _poly(den, var))


def operator(coeffs, var):
    """``coeffs`` lists the D^0..D^n coefficients as strings."""
    op = DiffOperator([rf(c, var) for c in coeffs], var)
    d = op.to_dict()
    d["cleared"] = op.to_cleared_dict()["polynomials"]
    return d


def mpoly(expr, variables):
    return MultiPoly.from_sympy(sympy.expand(X(expr) if isinstance(expr, str) else expr),
                                variables).to_dict()


def fraction_payload(expr, variables):
    num, den = sympy.fraction(sympy.together(X(expr)))
    return {"numerator": mpoly(sympy.expand(num), variables),
            "denominator": mpoly(sympy.expand(den), variables)}


def ek_form(expr, label):
    """Collect ``expr`` (in s, E, K, W = sqrt(1+s^2)) into E^i K^j monomials."""
    e = sympy.expand(X(expr))
    mons = {}
    for term in sympy.Add.make_args(e):
        powers = term.as_powers_dict()
        i, j, w = int(powers.get(E, 0)), int(powers.get(K, 0)), int(powers.get(W, 0))
        if w > 1:
            raise ValueError("only a single square-root factor is supported")
        coeff = term / (E ** i * K ** j * W ** w)
        shift = 64
        lifted = sympy.Poly(sympy.expand(sympy.cancel(coeff * s ** shift)), s)
        lau = {}
        for (k,), c in lifted.as_dict().items():
            lau[k - shift] = c
        key = (i, j)
        prev = mons.get(key)
        cf = CoefficientFunction.make({k: as_rational(v) for k, v in lau.items()}, bool(w))
        if prev is not None:
            if prev.sqrt != cf.sqrt:
                raise ValueError("mixed square-root flags in one monomial")
            merged = dict(prev.laurent)
            for k, v in cf.laurent:
                merged[k] = merged.get(k, 0) + v
            cf = CoefficientFunction.make(merged, cf.sqrt)
        mons[key] = cf
    form = EKPolynomial(mons, label)
    return {"variable": "s", "label": label, "terms": form.to_list()}


# ---------------------------------------------------------------------------
FIXTURES = {}


def add(name, kind, provenance, payload):
    FIXTURES[name] = {"name": name, "kind": kind, "provenance": provenance,
                      "payload": payload}


# diagonal operators, monic in D_t
add("L11", "operator", "operator annihilating C(1,1)", operator([
    "1/(4*(t-1)*t**2)", "1/t", "1"], "t"))
add("L22", "operator", "operator annihilating C(2,2)", operator([
    "-(t+2)/(2*t**3*(t-1)**2)", "-1/((t-1)*t**2)", "2*(t-2)/((t-1)*t)", "1"], "t"))
add("L33", "operator", "operator annihilating C(3,3)", operator([
    "9*(15+13*t+4*t**2)/(16*(t-1)**3*t**4)",
    "(2*t**2+2*t-5)/(2*t**3*(t-1)**2)",
    "(41-11*t-2*t**2)/(2*t**2*(t-1)**2)",
    "2*(t-5)/((t-1)*t)", "1"], "t"))
add("L44", "operator", "operator annihilating C(4,4)", operator([
    "-4*(32+33*t+20*t**2+5*t**3)/((t-1)**4*t**5)",
    "(97+40*t-10*t**2-12*t**3)/((t-1)**3*t**4)",
    "-(322+95*t-9*t**2-16*t**3)/(2*(t-1)**3*t**3)",
    "(113+7*t-2*t**2)/((t-1)**2*t**2)",
    "-20/(t*(t-1))", "1"], "t"))
add("L55", "operator", "operator annihilating C(5,5)", operator([
    "25*(784*t**4+3428*t**3+6921*t**2+8650*t+7865)/(64*(t-1)**5*t**6)",
    "5*(720*t**4+640*t**3-2175*t**2-6912*t-8801)/(16*(t-1)**4*t**5)",
    "-(1552*t**4-1016*t**3-13191*t**2-29618*t-29855)/(16*t**4*(t-1)**4)",
    "-(4*t**3+370*t**2+1707*t+3503)/(2*(t-1)**3*t**3)",
    "(52*t**2+483*t+1617)/(4*(t-1)**2*t**2)",
    "-5*(t+7)/(t*(t-1))", "1"], "t"))
_N66 = {
    "N4": "10162+7059*t+2411*t**2+376*t**3",
    "N3": "37973+35162*t+17893*t**2+5116*t**3+500*t**4",
    "N2": "-28706-55327*t-46180*t**2-21437*t**3-3358*t**4+1736*t**5",
    "N1": "-390548-402496*t-240997*t**2-63239*t**3+24152*t**4+25088*t**5",
    "N0": "23814+26839*t+24583*t**2+16599*t**3+7345*t**4+1620*t**5",
}
add("L66", "operator", "operator annihilating C(6,6)", operator([
    f"-9*({_N66['N0']})/(2*(t-1)**6*t**7)",
    f"-({_N66['N1']})/(4*t**6*(t-1)**5)",
    f"({_N66['N2']})/((t-1)**5*t**5)",
    f"({_N66['N3']})/(t**4*(t-1)**4)",
    f"-({_N66['N4']})/((t-1)**3*t**3)",
    "14*(81+39*t+7*t**2)/(t**2*(t-1)**2)",
    "-14*(4+t)/((t-1)*t)", "1"], "t"))

# intertwiners with Sym^2(L11)
add("A2", "operator", "left intertwiner, N = 2", operator([
    "3*(15*t-7)/(4*(t-1))", "(31*t-23)*t/(4*(t-1))", "t**2"], "t"))
add("R2", "operator", "right intertwiner, N = 2", operator([
    "-(3*t-5)/(4*(t-1))", "3*t/4", "t**2"], "t"))

# elliptic integral operator and the s-variable equivalence with L11
add("LE", "operator", "operator annihilating E(s)", operator([
    "-4*s**2/(s**4-1)", "1/s", "1"], "s"))
add("LE_left", "operator", "left factor of the L11 ~ LE equivalence", operator([
    "6*s**2", "(s**4-1)/s"], "s"))
add("LE_right", "operator", "right factor of the L11 ~ LE equivalence", operator([
    "-2/s**2", "(s**4-1)/s"], "s"))

# hypergeometric operator, family in N
add("Lh", "operator_template", "second-order operator with f+- solutions", {
    "variable": "t", "parameter": "N",
    "coefficients": [fraction_payload("-N**2/(4*t**2)+1/(16*(t-1)**2)", ["t", "N"]),
                     fraction_payload("1/t+1/(2*(t-1))", ["t", "N"]),
                     fraction_payload("1", ["t", "N"])]})

# C(1,2)
_q = {
    "q3": "13*s**8+30*s**6-78*s**4-50*s**2+53",
    "q2": "5*s**12-7*s**10+34*s**8-128*s**6-65*s**4-97*s**2+2",
    "q1": "-5*s**14+2*s**12-67*s**10-118*s**8-816*s**6+157*s**4-76*s**2-101",
    "q0": "-192*s**10+1840*s**8-453*s**6+127*s**4-15*s**2-27",
}
add("L12", "operator", "operator annihilating C(1,2)", operator([
    f"({_q['q0']})/(s**5*(1+s)**3*(1-s)**3*(1+s**2)**5)",
    f"({_q['q1']})/(s**4*(1+s)**3*(1-s)**3*(1+s**2)**4)",
    f"({_q['q2']})/(s**3*(1+s)**3*(1-s)**3*(1+s**2)**3)",
    f"({_q['q3']})/(s**2*(1+s)**2*(1-s)**2*(1+s**2)**2)",
    "5*(2*s**2+3)/(s*(1+s**2))", "1"], "s"))

# C(1,3) pieces
add("L1", "operator", "operator for the linear part of C(1,3)", operator([
    "4*(11*s**4-9*s**2+4)/(s**2*(s**2+1)**2*(s**2-2)*(s**2-1))",
    "-(3*s**4-7*s**2+14)/(s*(s**2+1)*(s**2-2))", "1"], "s"))
_L3 = {
    "N": "s**12+5*s**10+14*s**8+54*s**6+49*s**4+13*s**2-1",
    "A3": "3*s**14+15*s**12+44*s**10+98*s**8+383*s**6+415*s**4+133*s**2-11",
    "A2": "19*s**20+121*s**18+248*s**16-408*s**14-974*s**12+2546*s**10"
          "+9597*s**8+11440*s**6+6521*s**4+1277*s**2-147",
    "A1": "-27*s**20-161*s**18+240*s**16+5576*s**14+17854*s**12+28590*s**10"
          "+30491*s**8+19360*s**6+8799*s**4+1931*s**2-333",
    "A0": "-1792*s**20-13136*s**18-37568*s**16-52256*s**14-48848*s**12"
          "-32576*s**10-20720*s**8-1568*s**6+1600*s**4-688*s**2+192",
}
add("L3", "operator", "operator for the cubic part of C(1,3)", operator([
    f"({_L3['A0']})/(s**4*(s**4-1)**3*({_L3['N']}))",
    f"({_L3['A1']})/(s**3*(s**4-1)**2*({_L3['N']}))",
    f"({_L3['A2']})/(s**2*(s**4-1)**2*({_L3['N']}))",
    f"-2*({_L3['A3']})/((s**2-1)*s*({_L3['N']}))", "1"], "s"))

# C(0,1) pieces
add("l0", "operator", "order-one operator for the algebraic part of C(0,1)",
    operator(["1/(s*(1+s**2))", "1"], "s"))
add("l1", "operator", "order-two operator for the K part of C(0,1)", operator([
    "(2*s**6+9*s**4+4*s**2+1)/((1+s**2)**2*s**2*(s**2-1)**2)",
    "(s**2-3)/(s*(s**2-1))", "1"], "s"))
add("l1_conjugated", "operator", "l1 conjugated by (1+s^2)^(1/2)", operator([
    "(s**6-s**4+7*s**2+1)/((s**2-1)**2*(1+s**2)*s**2)",
    "(-4*s**2+3*s**4-3)/((1+s**2)*s*(s**2-1))", "1"], "s"))

# E/K closed forms (W stands for (1+s^2)^(1/2))
add("C22", "ek_form", "C(2,2) as a quadratic form in E, K", ek_form(
    "(3*(s**4-1)**2*K**2+8*(s**4-1)*E*K-(s**4-5)*E**2)/(3*s**4)", "C(2,2)"))
add("C33", "ek_form", "C(3,3) as a cubic form in E, K", ek_form(
    "4/(135*s**10)*((33*s**4-1)*(s**4-1)**3*K**3"
    "+3*(s**8+48*s**4-1)*(s**4-1)**2*E*K**2"
    "-3*(s**4-1)*(s**12+3*s**8-69*s**4+1)*E**2*K"
    "-(1+21*s**8-96*s**4+10*s**12)*E**3)", "C(3,3)"))
_P1 = "(2*(s**4-1)*(s**2+1)*s**2*K-s**2*(s**2+1)*(s**4+3*s**2-2)*E)"
_P3 = ("((6*s**2-1+11*s**4)*E**3+(s**4-1)*(7*s**4+12*s**2-3)*K*E**2"
       "+(s**4-1)*(s**2+3)*(s**4+2*s**2-1)*(s**2-1)*E*K**2"
       "+(s**4-1)**2*(s**2-1)**2*K**3)")
add("C13", "ek_form", "C(1,3) as a sum of linear and cubic forms",
    ek_form(f"({_P1}+{_P3})/(3*s**6)", "C(1,3)"))
add("C13_P1", "ek_form", "linear part of C(1,3)", ek_form(f"{_P1}/(3*s**6)", "P1/(3 s^6)"))
add("C13_P3", "ek_form", "cubic part of C(1,3)", ek_form(f"{_P3}/(3*s**6)", "P3/(3 s^6)"))
add("C01", "ek_form", "C(0,1) with the square root factor", ek_form(
    "W/(2*s)+(s-1)*(s+1)*W/(2*s)*K", "C(0,1)"))
add("C01_l0", "ek_form", "degree-zero part of C(0,1)", ek_form("W/(2*s)", "C(0,1) algebraic part"))
add("C01_l1", "ek_form", "K part of C(0,1)", ek_form("(s-1)*(s+1)*W/(2*s)*K", "C(0,1) K part"))

# curves and Riccati data
add("C22S", "curve", "generalized Riccati form of L22", mpoly(
    "64*t**2*(t-1)**2*S2-16*t*(8*t+5)*(t-1)*S1+192*t*(t-1)*S0*S1+64*S0**3"
    "-16*(16*t+1)*S0**2+4*(32*t**2+16*t-21)*S0+45", ["S2", "S1", "S0", "t"]))
add("nappe22", "curve", "rational curve in (S0, S1) for N = 2", mpoly(
    "(4*S0-3)*(64*S0**3-16*(16*t+1)*S0**2+4*(64*t**2-16*t-21)*S0+45)"
    "-32*t*(4*S0-3)*(t-1)*(8*t-1-4*S0)*S1+256*t**2*(t-1)**2*S1**2",
    ["S1", "S0", "t"]))
_Q = {
    "Q2": "48*S0**2-8*(22*t+13)*S0+55+448*t+64*t**2",
    "Q1": "-768*S0**4+256*(22*t+13)*S0**3-32*(376*t**2+584*t+125)*S0**2"
          "+16*(384*t**3+1984*t**2+766*t+25)*S0+1125+2880*t-25920*t**2",
    "Q0": "1575+16*(576*t**3-110*t-145-96*t**2)*S0-32*(56*t-9+264*t**2)*S0**2"
          "+256*(10*t+3)*S0**3-256*S0**4",
}
add("ratioN3", "curve", "rational curve in (S0, S1) for N = 3", mpoly(
    f"4096*t**3*(t-1)**3*S1**3+256*t**2*(t-1)**2*({_Q['Q2']})*S1**2"
    f"-16*t*(t-1)*({_Q['Q1']})*S1-(45-8*(2*t+7)*S0+16*S0**2)*({_Q['Q0']})",
    ["S1", "S0", "t"]))

_param = {
    "alpha1": "-6*t-3+8*t**2", "alpha0": "4*(1-2*t)",
    "A0": "-176+48*t-320*t**2+256*t**3",
    "A1": "120+184*t-144*t**2+768*t**3-512*t**4",
    "A2": "9-57*t+24*t**2+76*t**3-448*t**4+256*t**5",
    "B0": "192*t**2-272*t-112", "B1": "-8*(3*t+1)*(16*t**2-26*t-3)",
    "B2": "45+51*t-168*t**2-260*t**3+192*t**4",
    "C0": "1088+384*t+2624*t**2+1280*t**3-1536*t**4",
    "C1": "-1296-2816*t+688*t**2-7776*t**3-3840*t**4+4608*t**5",
    "C2": "108+1848*t+636*t**2-3328*t**3+8304*t**4+4416*t**5-4608*t**6",
    "C3": "189+36*t-1323*t**2+210*t**3+2460*t**4-2792*t**5-1856*t**6+1536*t**7",
}
add("param", "parametrization", "rational parametrization of the N = 2 curve", {
    "variable": "t",
    "components": {k: _poly(X(v), "t").to_list() for k, v in _param.items()}})
_ric_den = "16*t*(t-1)*(6*t**2-5*t-9)"
add("Ricatti", "riccati", "Riccati equation for the uniformizing parameter u", {
    "variable": "t",
    "beta2": rf(f"(63-135*t-120*t**2-140*t**3+192*t**4)/({_ric_den})", "t").to_dict(),
    "beta1": rf(f"8*(15+51*t+46*t**2-60*t**3)/({_ric_den})", "t").to_dict(),
    "beta0": rf(f"(-272-112*t+192*t**2)/({_ric_den})", "t").to_dict()})

# Hamiltonian p, q for N = 2
_H = {
    "Np1": "-(9*t-1)*(t-1)**2*K**2-2*(17*t-1)*(t-1)*E*K+(1+t**2-34*t)*E**2",
    "Np2": "-(t-1)*K**2-2*E*K+E**2",
    "Dp1": "-3*K**2*(t-1)**2-8*(t-1)*E*K+(-5+t)*E**2",
    "Dp2": "-K**2*(t-1)**2+2*(t-1)**2*E*K+(5*t-1)*E**2",
    "Nq": "-(3*t-11)*(t-1)**2*K**2+2*(t-1)*(3*t**2-t+14)*E*K+(17*t**2-2*t+17)*E**2",
}
_hv = ["E", "K", "t"]
add("hamiltonian_N2", "hamiltonian_pq", "Malmquist p, q for C(2,2)", {
    "n": ["1", "-1/2", "3/2", "1"],
    "p": {"numerator": mpoly(f"-((t+1)*E+(t-1)*K)*({_H['Np1']})*({_H['Np2']})", _hv),
          "denominator": mpoly(f"2*t*(2*E+(t-1)*K)*({_H['Dp1']})*({_H['Dp2']})", _hv)},
    "q": {"numerator": mpoly(f"-t*(2*E+(t-1)*K)*({_H['Nq']})", _hv),
          "denominator": mpoly(f"((t+1)*E+(t-1)*K)*({_H['Np1']})", _hv)}})

# Ising specialization of the local expansion coefficients at t = 1
_jv = ["alpha", "N"]
add("jimbo_ising", "jimbo_table", "Ising reduction of the first coefficients", {
    "p1": fraction_payload("alpha**2/4", _jv),
    "a1_0_m1": fraction_payload("(alpha-2*N)/(16*alpha)", _jv),
    "a1_1_0": fraction_payload("(1-alpha**2)/8", _jv),
    "a1_0_m2": fraction_payload(
        "((alpha-2*N)/(16*alpha))**2*((alpha-2)**2-(2*N)**2)/(256*(alpha-2)**2)", _jv)})


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, fx in sorted(FIXTURES.items()):
        text = json.dumps(fx, indent=1, sort_keys=True) + "\n"
        path = DATA / f"{name}.json"
        path.write_text(text)
        manifest[name] = {"file": path.name, "kind": fx["kind"],
                          "provenance": fx["provenance"],
                          "sha256": hashlib.sha256(text.encode()).hexdigest()}
    (DATA / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(FIXTURES)} fixtures to {DATA}")


if __name__ == "__main__":
    main()
