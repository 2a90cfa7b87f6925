"""Command-line entry point: ``pvfuchs <command> [options]``.

Every command prints a report, as text or as canonical JSON.  The exit
status is 0 when all requested checks pass (or the command only computes a
value), 1 when a check fails and 2 on usage errors.
"""
import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import catalog, correlations, diffops, odeguess, painleve
from .exactcore import (TruncatedSeries, as_rational, change_variable, format_rational,
                        parse_rational)

PASS, FAIL, VALUE = "pass", "fail", "value"


class Report:
    def __init__(self, command, inputs):
        self.command = command
        self.inputs = inputs
        self.status = VALUE
        self.checks = []
        self.artifacts = {}
        self.lines = []

    def check(self, verdict):
        d = verdict.to_dict()
        self.checks.append(d)
        w = d["witness"]
        if isinstance(w, dict):
            w = f"{w['coefficient']}*t^{w['exponent']}"
        self.lines.append(f"{verdict.check}: {verdict.status}"
                          + ("" if w is None else f" (witness {w})"))
        if verdict.status == FAIL:
            self.status = FAIL
        elif self.status != FAIL:
            self.status = PASS

    def boolean(self, name, ok, witness=None):
        self.check(painleve.Verdict(name, PASS if ok else FAIL, None,
                                    None if ok else witness or "nonzero"))

    def add(self, name, obj, text=None):
        self.artifacts[name] = obj
        self.lines.append(f"{name}: {text if text is not None else obj}")

    def to_dict(self):
        return {"command": self.command, "inputs": self.inputs, "status": self.status,
                "checks": self.checks, "artifacts": self.artifacts}


def _q(x):
    return format_rational(as_rational(x))


def _series_obj(s):
    return s.to_dict()


def _load_series(path):
    data = json.loads(Path(path).read_text())
    if "artifacts" in data:
        data = data["artifacts"]["series"]
    return TruncatedSeries.from_dict(data)


def _operator(name):
    L = catalog.fixture(name).value
    if not isinstance(L, diffops.DiffOperator):
        raise ValueError(f"fixture {name!r} is not an operator")
    return L


def _op_obj(L):
    return {"operator": L.to_dict(), "cleared": L.to_cleared_dict()}


# commands -----------------------------------------------------------------

def cmd_series(a, rep):
    obj = a.object
    if obj in ("C", "Cstar"):
        s = correlations.correlation_diag(int(a.N), order=a.order, dual=obj == "Cstar")
    elif obj in ("E", "K"):
        s = correlations.elliptic_t_series(obj, a.order)
    elif obj == "hyper":
        s = correlations.hyper_solution(a.N, a.lam, a.order).tau
    else:
        raise SystemExit(f"unknown object {obj!r}")
    rep.add("series", _series_obj(s), repr(s))


def cmd_guess(a, rep):
    y = _load_series(a.input)
    if a.profile == "gform":
        spec = odeguess.GuessSpec.gform(a.order, y.var, a.margin)
    else:
        spec = odeguess.GuessSpec.free(a.order, a.degree, y.var, a.margin)
    L = odeguess.guess_ode(y, spec)
    if L is None:
        rep.boolean("guess", False, "no operator in the ansatz")
        return
    rep.add("operator", _op_obj(L), repr(L))
    rep.inputs["route"] = "ramified" if y.ram > 1 else "integer"
    if a.expect:
        rep.boolean(f"equals {a.expect}", L.canonical() == _operator(a.expect).canonical())


def cmd_sympow(a, rep):
    L = _operator(a.fixture)
    M = diffops.symmetric_power(L, a.power)
    rep.add("operator", _op_obj(M.canonical()), repr(M.canonical()))


def cmd_intertwine(a, rep):
    L1 = _operator(a.source)
    L2 = _operator(a.target)
    if a.target_power > 1:
        L2 = diffops.symmetric_power(L2, a.target_power)
    found = diffops.intertwiner_search(L1, L2, a.order_bound, a.degree_bound)
    if found is None:
        rep.boolean("intertwiner", False, "none within bounds")
        return
    A, R = found
    rep.add("A", A.to_dict(), repr(A))
    rep.add("R", R.to_dict(), repr(R))
    rep.boolean("A*L1 = L2*R", (A * L1 - L2 * R).is_zero())


def cmd_verify_pvi(a, rep):
    N = as_rational(a.N)
    if a.tau_power:
        al, be = (parse_rational(x) for x in a.tau_power.split(","))
        r = painleve.tau_power_check(al, be, N, a.order)
        rep.add("constraint_value", _q(r.constraint_value))
        rep.check(r.verdict)
        return
    if N.denominator != 1 or a.lam:
        tau = correlations.hyper_solution(N, a.lam, a.order + 4).tau
        S = painleve.sigma_bundle(tau, painleve.HIGH, N)
    else:
        dual = a.regime == painleve.LOW
        C = correlations.correlation_diag(int(N), order=a.order + int(N) // 2 + 4, dual=dual)
        S = painleve.sigma_bundle(C, a.regime, N)
    res = painleve.pvi_residual(S, N)
    rep.check(painleve.series_verdict("sigma-form residual", res))


def cmd_verify_curve(a, rep):
    N = int(a.N)
    curve = catalog.fixture(a.curve).value
    C = correlations.correlation_diag(N, order=a.order + N // 2 + 4)
    S = painleve.sigma_bundle(C, painleve.HIGH, N)
    rep.check(painleve.series_verdict("curve residual", painleve.curve_residual(curve, S)))
    if a.param:
        par = painleve.Parametrization.from_components(catalog.fixture(a.param).value)
        rep.boolean("parametrization on curve", painleve.param_verify(curve, par))
        if a.riccati:
            ric = catalog.fixture(a.riccati).value
            rep.boolean("riccati consistency", painleve.riccati_consistency(par, ric))


def cmd_riccatize(a, rep):
    L = _operator(a.fixture)
    P = painleve.riccatize(L, a.N)
    rep.add("relation", P.to_dict(), repr(P))
    if a.expect:
        rep.boolean(f"equals {a.expect}",
                    painleve.same_up_to_content(P, catalog.fixture(a.expect).value))


def cmd_eliminate(a, rep):
    N = int(a.N)
    L = _operator(a.fixture or f"L{N}{N}")
    curve = painleve.eliminate_curve(painleve.riccatize(L, N), N)
    rep.add("curve", curve.to_dict(), repr(curve.polynomial))
    if a.expect:
        rep.boolean(f"equals {a.expect}",
                    painleve.same_up_to_content(curve, catalog.fixture(a.expect).value))


def cmd_ek_form(a, rep):
    form = catalog.fixture(a.fixture).value
    s = correlations.ek_evaluate(form, a.order)
    rep.add("series", _series_obj(s), repr(s))
    if a.diagonal:
        N = int(a.diagonal)
        nt = -(-a.order // 4) + N
        C = correlations.correlation_diag(N, order=nt)
        Cs = change_variable(C, "power", 4, new_var="s").truncate(a.order)
        rep.check(painleve.series_verdict("matches Toeplitz", s - Cs))


def cmd_boundary_gap(a, rep):
    N = int(a.N)
    g = correlations.boundary_gap(N, a.order)
    rep.add("leading_exponent", str(g["leading_exponent"]))
    rep.add("leading_coefficient", _q(g["leading_coefficient"]))
    closed = correlations.boundary_coefficient(N)
    rep.boolean("closed form", g["leading_coefficient"] == closed
                and g["leading_exponent"] == Fraction(3 * N, 2) + 2)


def cmd_jimbo(a, rep):
    if a.v:
        params = painleve.PVIParams(*(parse_rational(x) for x in a.v.split(",")))
    else:
        params = painleve.PVIParams.ising(a.N)
    J = painleve.jimbo_coefficients(params)
    rep.add("coefficients", J.to_dict(), json.dumps(J.to_dict(), sort_keys=True))
    rep.add("degeneration", painleve.degeneration_condition(params).to_dict())
    for k, d in J.symmetry_defects().items():
        rep.boolean(f"symmetry k={k}", d.is_zero(), str(d))
    if not a.v:
        table = catalog.fixture("jimbo_ising").value
        for name, ok in painleve.ising_reduction(table).items():
            rep.boolean(f"ising reduction {name}", ok)


def cmd_hamiltonian(a, rep):
    data = painleve.HamiltonianData.from_fixture(catalog.fixture(a.fixture).value)
    rp, rq = painleve.hamiltonian_residual(data, a.order)
    rep.add("n", [_q(x) for x in data.n])
    rep.check(painleve.series_verdict("p' + dH/dq", rp))
    rep.check(painleve.series_verdict("q' - dH/dp", rq))


def cmd_fixture(a, rep):
    if a.name is None:
        rep.add("names", catalog.fixture_names(), ", ".join(catalog.fixture_names()))
        return
    fx = catalog.fixture(a.name)
    rep.add("kind", fx.kind)
    rep.add("provenance", fx.provenance)
    rep.add("payload", fx.payload, repr(fx.value))


def cmd_order(a, rep):
    q = catalog.order_formula(a.N, a.M)
    rep.add("order", q)
    if a.fixture:
        rep.boolean(f"order of {a.fixture}", _operator(a.fixture).order == q)


COMMANDS = {
    "series": cmd_series, "guess": cmd_guess, "sympow": cmd_sympow,
    "intertwine": cmd_intertwine, "verify-pvi": cmd_verify_pvi,
    "verify-curve": cmd_verify_curve, "riccatize": cmd_riccatize,
    "eliminate": cmd_eliminate, "ek-form": cmd_ek_form,
    "boundary-gap": cmd_boundary_gap, "jimbo": cmd_jimbo,
    "hamiltonian": cmd_hamiltonian, "fixture": cmd_fixture, "order": cmd_order,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    p = argparse.ArgumentParser(prog="pvfuchs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    s = add("series", "series of C(N,N), C*(N,N), E, K or a hypergeometric tau")
    s.add_argument("--object", choices=("C", "Cstar", "E", "K", "hyper"), default="C")
    s.add_argument("--N", default="1")
    s.add_argument("--lam", default="0")
    s.add_argument("--order", type=int, default=40)

    s = add("guess", "guess an annihilating operator for a stored series")
    s.add_argument("--input", required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--profile", choices=("gform", "free"), default="gform")
    s.add_argument("--degree", type=int, default=4)
    s.add_argument("--margin", type=int, default=10)
    s.add_argument("--expect")

    s = add("sympow", "symmetric power of an operator fixture")
    s.add_argument("--fixture", required=True)
    s.add_argument("--power", type=int, required=True)

    s = add("intertwine", "search A, R with A*L1 = L2*R")
    s.add_argument("--source", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--target-power", type=int, default=1)
    s.add_argument("--order-bound", type=int, default=2)
    s.add_argument("--degree-bound", type=int, default=6)

    s = add("verify-pvi", "sigma-form residual for C(N,N) or other tau functions")
    s.add_argument("--N", required=True)
    s.add_argument("--order", type=int, default=40)
    s.add_argument("--regime", choices=(painleve.HIGH, painleve.LOW), default=painleve.HIGH)
    s.add_argument("--lam", default="0")
    s.add_argument("--tau-power", help="alpha,beta for tau = t^alpha (1-t)^beta")

    s = add("verify-curve", "curve residual, parametrization and Riccati checks")
    s.add_argument("--curve", required=True)
    s.add_argument("--N", required=True)
    s.add_argument("--order", type=int, default=40)
    s.add_argument("--param")
    s.add_argument("--riccati")

    s = add("riccatize", "generalized Riccati relation from an operator")
    s.add_argument("--fixture", required=True)
    s.add_argument("--N", type=int)
    s.add_argument("--expect")

    s = add("eliminate", "curve in (S0, S1) for C(N,N)")
    s.add_argument("--N", required=True)
    s.add_argument("--fixture")
    s.add_argument("--expect")

    s = add("ek-form", "expand an E/K closed form")
    s.add_argument("--fixture", required=True)
    s.add_argument("--order", type=int, default=50)
    s.add_argument("--diagonal", help="compare with the Toeplitz C(N,N)")

    s = add("boundary-gap", "C(N,N) - h_N and its closed-form leading term")
    s.add_argument("--N", required=True)
    s.add_argument("--order", type=int)

    s = add("jimbo", "first local-expansion coefficients at t = 1")
    s.add_argument("--N", default="1")
    s.add_argument("--v", help="v1,v2,v3,v4 (general parameters)")

    s = add("hamiltonian", "Hamilton-equation residuals for printed p, q")
    s.add_argument("--fixture", default="hamiltonian_N2")
    s.add_argument("--order", type=int, default=30)

    s = add("fixture", "show a catalog fixture (or list them)")
    s.add_argument("name", nargs="?")

    s = add("order", "operator order predicted for C(N,M)")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--fixture")
    return p


def _inputs(ns):
    skip = {"command", "format", "out"}
    return {k: v for k, v in sorted(vars(ns).items()) if k not in skip and v is not None}


def render(rep, fmt):
    if fmt == "json":
        return json.dumps(rep.to_dict(), indent=1, sort_keys=True, default=str) + "\n"
    head = f"{rep.command}: {rep.status}"
    return "\n".join([head] + rep.lines) + "\n"


def run(argv=None):
    """Execute one command; returns (report, exit status)."""
    ns = build_parser().parse_args(argv)
    rep = Report(ns.command, _inputs(ns))
    t0 = time.perf_counter()
    try:
        COMMANDS[ns.command](ns, rep)
    except (catalog.FixtureError, ValueError, ArithmeticError) as exc:
        rep.status = FAIL
        rep.checks.append({"check": "error", "status": FAIL, "valid_order": None,
                           "witness": str(exc)})
        rep.lines.append(f"error: {exc}")
    elapsed = time.perf_counter() - t0
    text = render(rep, ns.format)
    if ns.format == "text":
        text += f"elapsed: {elapsed:.2f}s\n"
    if ns.out:
        Path(ns.out).write_text(text)
    else:
        sys.stdout.write(text)
    return rep, (1 if rep.status == FAIL else 0)


def main(argv=None):
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
