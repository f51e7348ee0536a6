from math import comb

import pytest

from ksp.errors import GuardExceeded, NotQuadratic, PreconditionError
from ksp.identities import carlitz_pairs, hook_length_dimension
from ksp.koszul import (
    bar_complex,
    check_character_identity,
    dual_dimensions,
    dual_series_identities,
    factorizations,
    hook_dimension,
    koszul_check,
    require_quadratic,
    schur_prefilter,
)
from ksp.species import builtin


def test_bar_complex_E():
    b = bar_complex(builtin("E"), 3, 3)
    assert b.alpha_bijective
    assert b.chains == {1: 1, 2: 6, 3: 6}
    assert b.factorizations == b.chains
    assert b.homology[-1] == 1 and not any(b.homology[:-1])


def test_bar_complex_cosh():
    b = bar_complex(builtin("Cosh"), 4, 2)
    assert b.alpha_bijective
    assert b.chains == {1: 1, 2: 6}
    assert b.homology == [0, 0, 5]


def test_bar_complex_degree_zero():
    b = bar_complex(builtin("E"), 0, 0)
    assert b.homology == [1]
    assert factorizations(builtin("E"), 0, 0) == [()]


def test_bar_complex_needs_monoid():
    with pytest.raises(PreconditionError):
        bar_complex(builtin("E+"), 3, 2)


@pytest.mark.parametrize("name", ["E", "Cosh", "EsegreE", "Lib_(1,2)", "Lib_(2,2)", "L"])
def test_monoid_duals_agree(name):
    T = dual_dimensions(builtin(name), 6 if name != "L" else 4)
    assert T.agree and T.concentrated, T.rows()


def test_E_dual_is_exterior():
    T = dual_dimensions(builtin("E"), 5)
    assert {(r["n"], r["k"]): r["series"] for r in T.rows()} == {(n, n): 1 for n in range(6)}


def test_segre_dual_dims():
    T = dual_dimensions(builtin("EsegreE"), 6)
    for k in range(4):
        assert T.series[(2 * k, k)] == comb(2 * k, k) * carlitz_pairs(k)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_hook_modules(j):
    T = dual_dimensions(builtin("E_{%d+}" % j), 6)
    assert T.agree and T.concentrated
    for r in T.rows():
        k = r["k"]
        assert r["n"] == j + k
        assert r["series"] == hook_dimension(j, k) == hook_length_dimension((j,) + (1,) * k)


def test_sinh_module_dual():
    T = dual_dimensions(builtin("Sinh"), 7)
    assert T.agree and T.concentrated
    tan = [1, 2, 16, 272]
    assert [T.series[(2 * k + 1, k)] for k in range(4)] == tan


def test_operad_duals():
    for name, n in (("E+", 5), ("pointed", 4), ("A", 4)):
        T = dual_dimensions(builtin(name), n)
        assert T.agree and T.concentrated, (name, T.rows())
    T = dual_dimensions(builtin("pointed"), 4)
    assert [T.mobius[(n, n - 1)] for n in range(1, 5)] == [n ** (n - 1) for n in range(1, 5)]


@pytest.mark.parametrize(
    "name,n",
    [("E", 5), ("Cosh", 6), ("EsegreE", 4), ("Sinh", 5), ("E+", 5), ("pointed", 4), ("A", 4), ("A_Cosh", 4), ("A_L", 4)],
)
def test_koszul_verdicts(name, n):
    v = koszul_check(builtin(name), n)
    assert v.passed, v.witnesses
    assert v.scale == "Koszul at scale n <= %d" % n
    assert not v.schur_negatives
    obj = v.to_json()
    assert obj["dual"]["agree"]


def test_not_quadratic():
    with pytest.raises(NotQuadratic):
        require_quadratic(builtin("L(E+)"))
    with pytest.raises(NotQuadratic):
        koszul_check(builtin("L(E+)"), 3)


def test_guard():
    with pytest.raises(GuardExceeded):
        koszul_check(builtin("E"), 50)


def test_schur_prefilter_clean():
    for name in ("E", "Cosh", "Sinh", "E+", "pointed"):
        assert schur_prefilter(builtin(name), 4) == []


def test_series_identities():
    for name, n in (("E", 6), ("Cosh", 6), ("Sinh", 7), ("E+", 6), ("pointed", 5), ("EsegreE", 6)):
        rep = dual_series_identities(builtin(name), n)
        assert rep.passed, rep.to_json()


def test_character_identity():
    for name in ("E", "Cosh", "E+"):
        ok, got, want = check_character_identity(builtin(name), 4)
        assert ok, (got, want)
