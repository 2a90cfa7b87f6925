"""Golden fixtures stored as JSON, plus the operator-order formula."""
import hashlib
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from ..correlations import EKPolynomial
from ..diffops import DiffOperator
from ..exactcore import MultiPoly, Poly, RationalFunction, parse_rational

__all__ = ["Fixture", "FixtureError", "fixture", "fixture_names", "order_formula",
           "fixture_dir", "FIXTURE_ENV"]

FIXTURE_ENV = "PVFUCHS_FIXTURES"
KINDS = {"operator", "operator_template", "ek_form", "curve", "parametrization",
         "riccati", "hamiltonian_pq", "jimbo_table"}


class FixtureError(LookupError):
    pass


def fixture_dir():
    override = os.environ.get(FIXTURE_ENV)
    return Path(override) if override else Path(__file__).with_name("data")


@lru_cache(maxsize=None)
def _manifest(directory):
    path = Path(directory) / "manifest.json"
    return json.loads(path.read_text())


def fixture_names():
    return sorted(_manifest(str(fixture_dir())))


def _fraction(d):
    return MultiPoly.from_dict(d["numerator"]), MultiPoly.from_dict(d["denominator"])


def _decode(kind, payload):
    if kind == "operator":
        return DiffOperator.from_dict(payload)
    if kind == "ek_form":
        return EKPolynomial.from_list(payload["terms"], payload.get("label", ""))
    if kind == "curve":
        return MultiPoly.from_dict(payload)
    if kind == "parametrization":
        var = payload["variable"]
        return {k: Poly.from_list(v, var) for k, v in payload["components"].items()}
    if kind == "riccati":
        var = payload["variable"]
        return {k: RationalFunction.from_dict(payload[k], var)
                for k in ("beta2", "beta1", "beta0")}
    if kind == "hamiltonian_pq":
        return {"n": [parse_rational(x) for x in payload["n"]],
                "p": _fraction(payload["p"]), "q": _fraction(payload["q"])}
    if kind == "jimbo_table":
        return {k: _fraction(v) for k, v in payload.items()}
    if kind == "operator_template":
        return {"variable": payload["variable"], "parameter": payload["parameter"],
                "coefficients": [_fraction(c) for c in payload["coefficients"]]}
    raise FixtureError(f"unknown fixture kind {kind!r}")


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    provenance: str
    payload: dict = field(repr=False, hash=False, compare=False)

    @property
    def value(self):
        """The payload decoded into library objects."""
        return _decode(self.kind, self.payload)


@lru_cache(maxsize=None)
def _load(directory, name):
    man = _manifest(directory)
    if name not in man:
        close = [n for n in man if n.lower().startswith(name[:2].lower())] or sorted(man)
        raise FixtureError(f"no such fixture {name!r}; candidates: {', '.join(close)}")
    entry = man[name]
    raw = (Path(directory) / entry["file"]).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != entry["sha256"]:
        raise FixtureError(f"checksum mismatch for fixture {name!r}")
    data = json.loads(raw)
    if data["kind"] not in KINDS or not data.get("provenance"):
        raise FixtureError(f"malformed fixture {name!r}")
    return Fixture(data["name"], data["kind"], data["provenance"], data["payload"])


def fixture(name):
    """Look up a registered fixture by name."""
    return _load(str(fixture_dir()), name)


def order_formula(N, M):
    """Order of the operator for C(N, M) predicted by the parity formula."""
    if N < 0 or M < 0:
        raise ValueError("N and M must be nonnegative")
    d = abs(M - N)
    num = (M + N + 2) * (4 + (3 - (-1) ** d) * d)
    if num % 8:
        raise ValueError(f"formula inapplicable: {num}/8 is not an integer")
    return num // 8
