from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ksp.errors import InversionDomainError, PreconditionError, TruncationMismatch
from ksp.identities import partition_fixed_points
from ksp.series import egf_comp_inverse, egf_compose, egf_hadamard, egf_mul, egf_pointing, exp_series
from ksp.symfun import (
    SymFn,
    mn_character,
    partitions,
    sf_e,
    sf_h,
    sf_hilbert,
    sf_internal,
    sf_mul,
    sf_mul_inverse,
    sf_one,
    sf_p,
    sf_plethysm,
    sf_plethystic_inverse,
    sf_schur,
    sf_sign_twist,
    sf_sum,
    sf_to_egf,
    sf_to_schur,
    z,
)

T = 4


def H(trunc=T, start=0):
    return sf_sum([sf_h(i, trunc) for i in range(start, trunc + 1)], trunc)


def test_h_e_examples():
    assert sf_h(2, T) == SymFn({(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}, T)
    assert sf_e(2, T) == SymFn({(2,): Fraction(-1, 2), (1, 1): Fraction(1, 2)}, T)
    assert sf_h(0, T) == sf_e(0, T) == sf_one(T)
    with pytest.raises(PreconditionError):
        sf_h(T + 1, T)


def test_partitions_and_z():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert z((2, 1, 1)) == 2 * 2
    assert z((1, 1, 1)) == 6


def test_mul_examples():
    p1 = sf_p((1,), T)
    assert sf_mul(p1, p1) == sf_p((1, 1), T)
    E_alt = sf_sum([sf_e(k, T) * (-1) ** k for k in range(T + 1)], T)
    assert sf_mul(H(), E_alt) == sf_one(T)
    assert sf_mul(sf_h(1, T), sf_h(1, T)) == sf_h(2, T) + sf_e(2, T)
    with pytest.raises(TruncationMismatch):
        sf_mul(sf_one(3), sf_one(4))


def test_plethysm_examples():
    assert sf_plethysm(sf_p((2,), 6), sf_p((3,), 6)) == sf_p((6,), 6)
    got = sf_plethysm(H(), H(start=1))
    want = SymFn({lam: c for n in range(T + 1) for lam, c in partition_fixed_points(n).items()}, T)
    assert got == want
    f = H() + sf_e(3, T)
    assert sf_plethysm(f, sf_p((1,), T)) == f
    with pytest.raises(PreconditionError):
        sf_plethysm(H(), H())


def test_internal_examples():
    for lam in partitions(3):
        q = sf_p(lam, T) * Fraction(1, z(lam))
        assert sf_internal(q, q) == q
    f = sf_mul(H(), H()) + sf_e(2, T)
    for n in range(T + 1):
        assert sf_internal(sf_h(n, T), f) == f.degree_part(n)
    assert sf_internal(sf_p((2,), T), sf_p((1, 1), T)) == SymFn({}, T)


def test_plethystic_inverse_examples():
    p1 = sf_p((1,), T)
    assert sf_plethystic_inverse(p1) == p1
    g = sf_plethystic_inverse(H(start=1))
    assert g[(1, 1, 1)] == Fraction(1, 3) and g[(3,)] == Fraction(-1, 3)
    # inverse of Ch E^pointed = p_1 H solves g = p_1 H[-g]
    pointed = sf_mul(p1, H())
    g = sf_plethystic_inverse(pointed)
    assert g == sf_mul(p1, sf_plethysm(H(), -g))
    with pytest.raises(InversionDomainError):
        sf_plethystic_inverse(sf_p((1,), T) * 2)


def test_sign_twist_examples():
    E_alt = sf_sum([sf_e(k, T) * (-1) ** k for k in range(T + 1)], T)
    assert sf_sign_twist(H()) == E_alt
    assert sf_sign_twist(sf_p((1,), T)) == -sf_p((1,), T)
    f = H() + sf_e(3, T)
    assert sf_sign_twist(sf_sign_twist(f)) == f


def test_specializations():
    assert sf_to_egf(H()) == exp_series(T)
    # E graded by degree at one variable: sum t^k
    assert sf_hilbert([sf_h(k, T) for k in range(T + 1)], 1) == [1] * (T + 1)
    # exterior algebra on two variables
    assert sf_hilbert([sf_e(k, T) for k in range(3)], 2) == [1, 2, 1]


def test_murnaghan_nakayama():
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (2, 1)) == 0
    # column orthogonality: sum chi(mu)^2 = z_mu
    for n in range(1, 6):
        for mu in partitions(n):
            assert sum(mn_character(lam, mu) ** 2 for lam in partitions(n)) == z(mu)
    assert sf_to_schur(sf_schur((3, 1), T)) == {(3, 1): 1}
    assert sf_to_schur(sf_h(3, T)) == {(3,): 1}
    assert sf_to_schur(sf_e(3, T)) == {(1, 1, 1): 1}


def test_json_roundtrip():
    f = sf_plethystic_inverse(H(start=1))
    obj = f.to_json()
    assert obj["terms"][0][0] == [1]
    assert SymFn.from_json(obj) == f


# -- homomorphism properties ---------------------------------------------

rational = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def symfns(draw, constant=True, linear=None):
    coeffs = {}
    for n in range(T + 1):
        for lam in partitions(n):
            coeffs[lam] = draw(rational)
    if not constant:
        coeffs[()] = 0
    if linear is not None:
        coeffs[(1,)] = linear
    return SymFn(coeffs, T)


@settings(max_examples=40, deadline=None)
@given(symfns(), symfns())
def test_to_egf_is_multiplicative(f, g):
    assert sf_to_egf(sf_mul(f, g)) == egf_mul(sf_to_egf(f), sf_to_egf(g))


@settings(max_examples=40, deadline=None)
@given(symfns(), symfns())
def test_to_egf_intertwines_internal_and_hadamard(f, g):
    assert sf_to_egf(sf_internal(f, g)) == egf_hadamard(sf_to_egf(f), sf_to_egf(g))


@settings(max_examples=25, deadline=None)
@given(symfns(), symfns(constant=False))
def test_to_egf_intertwines_plethysm(f, g):
    assert sf_to_egf(sf_plethysm(f, g)) == egf_compose(sf_to_egf(f), sf_to_egf(g))


@settings(max_examples=25, deadline=None)
@given(symfns(constant=False, linear=1))
def test_plethystic_inverse_roundtrip(g):
    h = sf_plethystic_inverse(g)
    p1 = sf_p((1,), T)
    assert sf_plethysm(g, h) == p1
    assert sf_plethysm(h, g) == p1
    assert sf_to_egf(h) == egf_comp_inverse(sf_to_egf(g))


@settings(max_examples=25, deadline=None)
@given(symfns())
def test_mul_inverse_roundtrip(f):
    f = f - f.constant_term() + 1
    assert sf_mul(f, sf_mul_inverse(f)) == sf_one(T)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, T), st.integers(0, T))
def test_degree_homogeneity(a, b):
    if a + b <= T:
        assert sf_mul(sf_h(a, T), sf_e(b, T)).is_homogeneous(a + b)
    if a >= 1 and b >= 1 and a * b <= T:
        assert sf_plethysm(sf_h(a, T), sf_h(b, T)).is_homogeneous(a * b)
    assert sf_internal(sf_h(a, T), sf_e(a, T)).is_homogeneous(a)


def test_pointed_series_matches():
    # exponential specialization of the pointed-set character is x e^x
    pointed = sf_mul(sf_p((1,), T), H())
    assert sf_to_egf(pointed) == egf_pointing(exp_series(T))
