from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ksp.errors import CompositionDomainError, InversionDomainError, NotInvertibleError, PreconditionError, TruncationMismatch
from ksp.identities import alternating_permutations, binary_trees, carlitz_pairs, rooted_trees, set_partition_count
from ksp.series import (
    Egf,
    GradedEgf,
    bessel_j0,
    constant,
    cos_series,
    cosh_series,
    egf_add,
    egf_comp_inverse,
    egf_compose,
    egf_derivative,
    egf_div,
    egf_hadamard,
    egf_mul,
    egf_mul_inverse,
    egf_pointing,
    egf_solve_tree_fixed_point,
    exp_series,
    graded_euler,
    graded_mul,
    graded_mul_inverse,
    linear_orders,
    one,
    sin_series,
    sinh_series,
    x_series,
    zero,
)

N = 8


def test_add_examples():
    assert egf_add(exp_series(N), exp_series(N)).coeffs == tuple([Fraction(2)] * (N + 1))
    assert egf_add(cosh_series(N), sinh_series(N)) == exp_series(N)
    f = linear_orders(N)
    assert egf_add(f, zero(N)) == f


def test_truncation_mismatch():
    with pytest.raises(TruncationMismatch):
        egf_add(exp_series(3), exp_series(4))
    with pytest.raises(TruncationMismatch):
        egf_mul(exp_series(3), exp_series(4))


def test_mul_examples():
    assert list(egf_mul(exp_series(N), exp_series(N)).coeffs) == [2 ** n for n in range(N + 1)]
    assert egf_mul(cos_series(N), egf_mul_inverse(cos_series(N))) == one(N)
    got = egf_mul(x_series(N), linear_orders(N))
    # x / (1 - x) has ordinary coefficients 1, so egf coefficient n!
    assert list(got.ordinary()) == [0] + [1] * N
    # by hand: c_n = n * c_{n-1}(L) = n * (n-1)!
    assert list(got.coeffs) == [0] + [n * factorial(n - 1) for n in range(1, N + 1)]


def test_hadamard_examples():
    f = sin_series(N)
    assert egf_hadamard(exp_series(N), f) == f
    assert list(egf_hadamard(linear_orders(N), linear_orders(N)).coeffs) == [factorial(n) ** 2 for n in range(N + 1)]
    assert egf_hadamard(zero(N), f) == zero(N)


def test_compose_examples():
    E = exp_series(N)
    bell = egf_compose(E, E - 1)
    assert list(bell.coeffs) == [set_partition_count(n) for n in range(N + 1)]
    f = cos_series(N)
    assert egf_compose(f, x_series(N)) == f
    geo = egf_compose(linear_orders(N), -x_series(N))
    assert list(geo.coeffs) == [(-1) ** n * factorial(n) for n in range(N + 1)]
    with pytest.raises(CompositionDomainError):
        egf_compose(E, E)


def test_mul_inverse_examples():
    sec = egf_mul_inverse(cos_series(N))
    assert [sec[n] for n in range(0, N + 1, 2)] == [alternating_permutations(n) for n in range(0, N + 1, 2)]
    assert egf_mul_inverse(exp_series(N)) == egf_compose(exp_series(N), -x_series(N))
    inv = egf_mul_inverse(bessel_j0(N))
    assert [inv[2 * k] * factorial(k) ** 2 / factorial(2 * k) for k in range(5)] == [carlitz_pairs(k) for k in range(5)]
    with pytest.raises(NotInvertibleError):
        egf_mul_inverse(x_series(N))
    # any nonzero constant term is allowed
    assert egf_mul(constant(3, N), egf_mul_inverse(constant(3, N))) == one(N)


def test_comp_inverse_examples():
    inv = egf_comp_inverse(egf_pointing(exp_series(N)))
    assert list(inv.coeffs) == [0] + [(-1) ** (n - 1) * n ** (n - 1) for n in range(1, N + 1)]
    assert egf_comp_inverse(x_series(N)) == x_series(N)
    x = x_series(N)
    g = egf_comp_inverse(x - Egf([0, 0, 2] + [0] * (N - 2), N))
    assert list(g.coeffs)[1:] == [factorial(n) * binary_trees(n) for n in range(1, N + 1)]
    with pytest.raises(InversionDomainError):
        egf_comp_inverse(exp_series(N))
    with pytest.raises(InversionDomainError):
        egf_comp_inverse(Egf([0, 0, 1] + [0] * (N - 2), N))


def test_fixed_points():
    A = egf_solve_tree_fixed_point(exp_series(6), "rooted")
    assert list(A.coeffs) == [rooted_trees(n) for n in range(7)]
    L2 = Egf([0, 0] + [factorial(n) for n in range(2, 11)], 10)
    F = egf_solve_tree_fixed_point(L2, "schroeder")
    assert F[10] / factorial(10) == 103049
    assert egf_solve_tree_fixed_point(one(N), "rooted") == x_series(N)
    with pytest.raises(PreconditionError):
        egf_solve_tree_fixed_point(x_series(N), "rooted")
    with pytest.raises(PreconditionError):
        egf_solve_tree_fixed_point(exp_series(N), "schroeder")


def test_derivative_and_pointing():
    d = egf_derivative(exp_series(N))
    assert d == exp_series(N - 1)
    assert d.trunc == N - 1
    assert list(egf_pointing(exp_series(N)).coeffs) == list(range(N + 1))
    assert egf_pointing(one(N)) == zero(N)


def test_graded_euler_examples():
    E = GradedEgf({(n, n): 1 for n in range(N + 1)}, N)
    assert graded_euler(E) == egf_mul_inverse(exp_series(N))
    Cosh = GradedEgf({(2 * k, k): 1 for k in range(N // 2 + 1)}, N)
    assert graded_euler(Cosh) == cos_series(N)
    flat = GradedEgf({(n, 0): n + 1 for n in range(N + 1)}, N)
    assert list(graded_euler(flat).coeffs) == [n + 1 for n in range(N + 1)]


def test_graded_inverse_gives_dual_dimensions():
    # 1 / M(x, -t) for M = E: exterior dual, one dimension in weight n
    E = GradedEgf({(n, n): 1 for n in range(N + 1)}, N)
    inv = graded_mul_inverse(E.sign_twist())
    assert inv.coeffs == {(n, n): 1 for n in range(N + 1)}
    assert graded_mul(E.sign_twist(), inv) == GradedEgf({(0, 0): 1}, N)


def test_json_roundtrip():
    f = egf_div(sin_series(N), cos_series(N))
    obj = f.to_json()
    assert all("/" in c for c in obj["coeffs"])
    assert Egf.from_json(obj) == f


def test_immutable():
    f = exp_series(3)
    with pytest.raises(AttributeError):
        f.trunc = 4


# -- properties -----------------------------------------------------------

rational = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, trunc=6, c0=None, c1=None):
    cs = draw(st.lists(rational, min_size=trunc + 1, max_size=trunc + 1))
    if c0 is not None:
        cs[0] = c0
    if c1 is not None:
        cs[1] = c1
    return Egf(cs, trunc)


nonzero = rational.filter(lambda q: q != 0)


@settings(max_examples=60, deadline=None)
@given(series(), nonzero)
def test_mul_inverse_roundtrip(f, c0):
    f = Egf((c0,) + f.coeffs[1:], f.trunc)
    assert egf_mul(f, egf_mul_inverse(f)) == one(f.trunc)


@settings(max_examples=60, deadline=None)
@given(series(c0=0), nonzero)
def test_comp_inverse_roundtrip(f, c1):
    f = Egf((0, c1) + f.coeffs[2:], f.trunc)
    g = egf_comp_inverse(f)
    x = x_series(f.trunc)
    assert egf_compose(f, g) == x
    assert egf_compose(g, f) == x


@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_mul_hadamard_laws(f, g, h):
    assert egf_mul(f, g) == egf_mul(g, f)
    assert egf_mul(egf_mul(f, g), h) == egf_mul(f, egf_mul(g, h))
    assert egf_hadamard(f, g) == egf_hadamard(g, f)
    assert egf_hadamard(egf_hadamard(f, g), h) == egf_hadamard(f, egf_hadamard(g, h))


@settings(max_examples=30, deadline=None)
@given(series(), series(c0=0), series(c0=0))
def test_composition_associative(f, g, h):
    assert egf_compose(egf_compose(f, g), h) == egf_compose(f, egf_compose(g, h))


@settings(max_examples=30, deadline=None)
@given(series(c0=1))
def test_rooted_fixed_point_equation(m):
    A = egf_solve_tree_fixed_point(m, "rooted")
    assert A == egf_mul(x_series(m.trunc), egf_compose(m, A))


def test_binomial_convolution_definition():
    f = Egf([1, 2, 3, 4], 3)
    g = Egf([5, 6, 7, 8], 3)
    want = [sum(comb(n, i) * f[i] * g[n - i] for i in range(n + 1)) for n in range(4)]
    assert list(egf_mul(f, g).coeffs) == want
