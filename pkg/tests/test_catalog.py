import json
import shutil

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from pvfuchs.catalog import FIXTURE_ENV, FixtureError, fixture, fixture_names, order_formula
from pvfuchs.correlations import correlation_diag
from pvfuchs.diffops import DiffOperator, fuchsian_analysis, indicial_exponents, op_apply
from pvfuchs.exactcore import Poly, RationalFunction

OPERATORS = [n for n in fixture_names() if fixture(n).kind == "operator"]


def test_every_fixture_loads():
    for name in fixture_names():
        f = fixture(name)
        assert f.name == name and f.provenance
        assert f.value is not None


def test_unknown_fixture_lists_candidates():
    with pytest.raises(FixtureError, match="no such fixture") as info:
        fixture("bogus")
    assert "L11" in str(info.value)


def test_a2_matches_printed_form():
    t = Poly.x()
    rf = RationalFunction
    A2 = DiffOperator([rf((t * 15 - 7) * mpq(3, 4), t - 1),
                       rf((t * 31 - 23) * t * mpq(1, 4), t - 1),
                       rf(t * t)])
    assert fixture("A2").value == A2


def test_checksum_is_enforced(tmp_path, monkeypatch):
    src = fixture("L11")
    from pvfuchs.catalog import fixture_dir
    dst = tmp_path / "data"
    shutil.copytree(fixture_dir(), dst)
    path = dst / "L11.json"
    data = json.loads(path.read_text())
    data["provenance"] = data["provenance"] + " (edited)"
    path.write_text(json.dumps(data))
    monkeypatch.setenv(FIXTURE_ENV, str(dst))
    with pytest.raises(FixtureError, match="checksum"):
        fixture("L11")
    assert fixture("L22").value == fixture("L22").value
    monkeypatch.delenv(FIXTURE_ENV)
    assert fixture("L11").value == src.value


@pytest.mark.parametrize("name", OPERATORS)
def test_operator_fixtures_are_fuchsian(name):
    L = fixture(name).value
    rep = fuchsian_analysis(L)
    assert rep.all_regular
    allowed = {"0", "1", "infinity"} if L.var == "t" else \
        {"0", "1", "-1", "s**2 + 1", "infinity"}
    # intertwiner factors may carry extra poles; for the others any point
    # outside the allowed set has to be apparent
    if name not in ("A2", "R2", "LE_left", "LE_right"):
        extra = {str(p) for p in rep.singular_points} - allowed
        assert extra <= {str(p) for p in rep.apparent_points}


@pytest.mark.parametrize("N", range(1, 7))
def test_lnn_exponents_at_one(N):
    L = fixture(f"L{N}{N}").value
    assert sorted(indicial_exponents(L, 1).exponents) == [(n - 1) ** 2 for n in range(1, N + 2)]


@pytest.mark.parametrize("N", [5, 6])
def test_large_fixtures_annihilate_toeplitz(N):
    y = correlation_diag(N, order=48)
    r = op_apply(fixture(f"L{N}{N}").value, y)
    assert r.is_zero() and r.valid_order >= 40


def test_order_formula_examples():
    assert order_formula(1, 2) == 5 == fixture("L12").value.order
    assert order_formula(0, 1) == 3
    for N in range(1, 7):
        assert order_formula(N, N) == N + 1 == fixture(f"L{N}{N}").value.order
    with pytest.raises(ValueError):
        order_formula(-1, 0)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40))
def test_order_formula_symmetric_and_integral(N, M):
    q = order_formula(N, M)
    assert q == order_formula(M, N)
    assert q >= N + 1 if N == M else q > 0
