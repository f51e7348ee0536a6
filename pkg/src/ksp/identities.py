"""
Brute-force oracles and the named identity suite.

Each oracle counts objects directly (pruned searches, parent maps, explicit
recursions) and never touches the generating-function code it is compared
against.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ksp.errors import UnknownName
from ksp.koszul import (
    bar_complex,
    check_character_identity,
    counting_series,
    dual_dimensions,
    dual_series_identities,
)
from ksp.poset import build_monoid_poset, mobius_inverse_series, mobius_row
from ksp.series import (
    Egf,
    bessel_i0,
    bessel_j0,
    cos_series,
    egf_comp_inverse,
    egf_compose,
    egf_div,
    egf_mul,
    egf_mul_inverse,
    egf_pointing,
    egf_solve_tree_fixed_point,
    exp_series,
    one,
    sin_series,
    x_series,
)
from ksp.species import builtin, set_partitions
from ksp.symfun import SymFn, partitions, sf_h, sf_plethysm, sf_plethystic_inverse, sf_sum, sf_zero, z

# -- oracles --------------------------------------------------------------


def alternating_permutations(n):
    """Permutations with ``s_1 > s_2 < s_3 > ...`` counted by depth-first search."""
    if n <= 1:
        return 1
    count = 0

    def walk(last, used, pos):
        nonlocal count
        if pos == n:
            count += 1
            return
        down = pos % 2 == 1  # position pos must be below its predecessor
        for v in range(n):
            if used >> v & 1:
                continue
            if (v < last) == down:
                walk(v, used | 1 << v, pos + 1)

    for v in range(n):
        walk(v, 1 << v, 1)
    return count


def carlitz_pairs(k):
    """Pairs of permutations of length ``k`` with no common ascent position."""
    perms = list(itertools.permutations(range(k)))
    asc = [frozenset(i for i in range(k - 1) if p[i] < p[i + 1]) for p in perms]
    return sum(1 for a in asc for b in asc if not a & b)


def rooted_trees(n):
    """Labeled rooted trees on ``n`` vertices as parent maps with one root and no cycles."""
    if n == 0:
        return 0
    count = 0
    for parent in itertools.product(range(-1, n), repeat=n):
        if sum(1 for p in parent if p == -1) != 1:
            continue
        ok = True
        for v in range(n):
            seen = 0
            u = v
            while u != -1 and seen <= n:
                u = parent[u]
                seen += 1
            if seen > n:
                ok = False
                break
        count += ok
    return count


def set_partition_count(n):
    return sum(1 for _ in set_partitions(range(n)))


@lru_cache(maxsize=None)
def schroeder_trees(n):
    """Plane trees with ``n`` leaves whose internal vertices have at least two children."""
    if n == 1:
        return 1
    total = 0
    # first child gets i leaves, the rest form a forest of >= 1 trees
    for i in range(1, n):
        total += schroeder_trees(i) * _forests(n - i)
    return total


@lru_cache(maxsize=None)
def _forests(n):
    """Nonempty ordered forests of Schröder trees with ``n`` leaves in total."""
    if n == 0:
        return 0
    return sum(schroeder_trees(i) * (1 if i == n else _forests(n - i)) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def binary_trees(n):
    """Plane binary trees with ``n`` leaves."""
    if n == 1:
        return 1
    return sum(binary_trees(i) * binary_trees(n - i) for i in range(1, n))


def hook_length_dimension(lam):
    """Number of standard Young tableaux of shape ``lam``."""
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def partition_fixed_points(n):
    """Cycle index of set partitions (``E o E_+``) by counting fixed partitions."""
    out = {}
    parts = [frozenset(frozenset(b) for b in p) for p in set_partitions(range(n))]
    for lam in partitions(n):
        sigma = {}
        start = 0
        for c in lam:
            for i in range(c):
                sigma[start + i] = start + (i + 1) % c
            start += c
        fixed = sum(1 for p in parts if frozenset(frozenset(sigma[x] for x in b) for b in p) == p)
        out[lam] = Fraction(fixed, z(lam))
    return out


def hanlon_character(trunc):
    """``sum_n mu(n)/n log(1 + p_n)``: the plethystic inverse of ``sum_{n>=1} h_n``."""
    def number_mobius(n):
        out, m, p = 1, n, 2
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                out = -out
            p += 1
        return -out if m > 1 else out

    out = sf_zero(trunc)
    for n in range(1, trunc + 1):
        mu = number_mobius(n)
        if not mu:
            continue
        # log(1 + p_n) = sum_j (-1)^{j-1} p_n^j / j
        for j in range(1, trunc // n + 1):
            out = out + SymFn({(n,) * j: Fraction(mu * (-1) ** (j - 1), n * j)}, trunc)
    return out


def mobius_recursion_partition_lattice(n):
    """``mu(0, 1)`` of the partition lattice by the defining recursion on a coarsening order."""
    parts = [frozenset(frozenset(b) for b in p) for p in set_partitions(range(n))]

    def leq(a, b):
        return all(any(x <= y for y in b) for x in a)

    parts.sort(key=lambda p: -len(p))
    mu = {parts[0]: 1}
    for p in parts[1:]:
        mu[p] = -sum(mu[q] for q in mu if leq(q, p))
    return mu[parts[-1]] if n else 1


# -- suite ----------------------------------------------------------------

@dataclass
class IdentityResult:
    name: str
    passed: bool
    lhs: object
    rhs: object
    note: str = ""

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "lhs": _plain(self.lhs),
                "rhs": _plain(self.rhs), "note": self.note}


def _plain(v):
    if isinstance(v, Fraction):
        return "%d/%d" % (v.numerator, v.denominator)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return v


def _result(name, lhs, rhs, note=""):
    return IdentityResult(name, lhs == rhs, lhs, rhs, note)


def euler_sec(trunc=10, n_max=6):
    sec = egf_mul_inverse(cos_series(trunc))
    lhs = [sec[n] for n in range(0, trunc + 1, 2)]
    rhs = [alternating_permutations(n) for n in range(0, trunc + 1, 2)]
    return _result("euler-sec", lhs, rhs, "inv(cos) at even degrees vs alternating permutations")


def euler_tan(trunc=10, n_max=6):
    tan = egf_div(sin_series(trunc), cos_series(trunc))
    lhs = [tan[n] for n in range(1, trunc + 1, 2)]
    rhs = [alternating_permutations(n) for n in range(1, trunc + 1, 2)]
    return _result("euler-tan", lhs, rhs, "sin * inv(cos) at odd degrees vs alternating permutations")


def bessel_carlitz(trunc=10, n_max=6):
    inv = egf_mul_inverse(bessel_j0(8))
    lhs = [inv[2 * k] * factorial(k) ** 2 / factorial(2 * k) for k in range(5)]
    rhs = [carlitz_pairs(k) for k in range(5)]
    return _result("bessel-carlitz", lhs, rhs, "1/J0 in x^2k/k!^2 normalization vs permutation pairs")


def bessel_scale(trunc=10, n_max=6):
    M = builtin("EsegreE")
    lhs, rhs = [], []
    for k in range(4):
        P = build_monoid_poset(M, 2 * k)
        row = mobius_row(P, P.bottom)
        lhs.append(sorted(set(row[t] for t in P.tops)))
        rhs.append([(-1) ** k * carlitz_pairs(k)])
    return _result("bessel-scale", lhs, rhs, "scale-poset interval Möbius values vs (-1)^k f_2k")


def bessel_i0_mobius(trunc=10, n_max=6):
    mob = mobius_inverse_series(builtin("EsegreE"), 6).egf
    inv = egf_mul_inverse(bessel_i0(6))
    return _result("bessel-i0", list(mob.coeffs), list(inv.coeffs), "Möbius series of E segre E vs 1/I0(2x)")


def hipparchus(trunc=10, n_max=6):
    N = max(trunc, 10)
    L2 = Egf([0, 0] + [factorial(n) for n in range(2, N + 1)], N)
    F = egf_solve_tree_fixed_point(L2, "schroeder")
    lhs = [F[n] / factorial(n) for n in range(1, N + 1)]
    rhs = [schroeder_trees(n) for n in range(1, N + 1)]
    return _result("hipparchus", lhs, rhs, "F = x + L_2+(F) vs Schröder tree recursion; degree 10 is 103049")


def cayley(trunc=10, n_max=6):
    A = egf_solve_tree_fixed_point(exp_series(n_max), "rooted")
    lhs = list(A.coeffs)
    enum = builtin("A").species.counts(n_max)
    rhs = [rooted_trees(n) for n in range(n_max + 1)]
    ok = lhs == rhs and enum == rhs
    return IdentityResult("cayley", ok, lhs, rhs, "A = x E(A), enumeration %s, parent maps" % enum)


def pointed_lagrange(trunc=10, n_max=6):
    inv = egf_comp_inverse(egf_pointing(exp_series(trunc)))
    rep = mobius_inverse_series(builtin("pointed"), n_max)
    lhs = [inv[n] for n in range(n_max + 1)]
    rhs = rep.cardinalities
    per = [sorted(set(v)) for v in rep.interval_values]
    exp_per = [[] if n == 0 else [(-1) ** (n - 1) * n ** (n - 2) if n >= 2 else 1] for n in range(n_max + 1)]
    ok = lhs == rhs and per == exp_per and all(inv[n] == (-1) ** (n - 1) * n ** (n - 1) for n in range(1, trunc + 1))
    return IdentityResult("pointed-lagrange", ok, lhs, rhs, "cinv(x e^x) vs pointed-partition Möbius sums")


def partition_lattice(trunc=10, n_max=6):
    rep = mobius_inverse_series(builtin("E+"), n_max)
    lhs = rep.cardinalities[1:]
    rhs = [mobius_recursion_partition_lattice(n) for n in range(1, n_max + 1)]
    closed = [(-1) ** (n - 1) * factorial(n - 1) for n in range(1, n_max + 1)]
    return IdentityResult("partition-lattice", lhs == rhs == closed, lhs, rhs, "mu(Pi_n) = (-1)^{n-1}(n-1)!")


def boolean(trunc=10, n_max=6):
    rep = mobius_inverse_series(builtin("E"), n_max)
    rhs = [(-1) ** n for n in range(n_max + 1)]
    return _result("boolean", rep.cardinalities, rhs, "mu(B_n) = (-1)^n")


def cosh_mobius(trunc=10, n_max=6):
    rep = mobius_inverse_series(builtin("Cosh"), n_max)
    lhs = [rep.cardinalities[2 * k] for k in range(n_max // 2 + 1)]
    rhs = [(-1) ** k * alternating_permutations(2 * k) for k in range(n_max // 2 + 1)]
    return _result("cosh-mobius", lhs, rhs, "mu(P_Cosh[2k]) = (-1)^k E_2k")


def hanlon(trunc=10, n_max=6):
    d = min(n_max, 4)
    rep = mobius_inverse_series(builtin("E+"), d, char_max=d)
    closed = hanlon_character(d)
    E_plus = SymFn({lam: Fraction(1, z(lam)) for n in range(1, d + 1) for lam in partitions(n)}, d)
    inv = sf_plethystic_inverse(E_plus)
    ok = rep.character == closed == inv
    return IdentityResult("hanlon", ok, rep.character.to_json(), closed.to_json(),
                          "fixed-subposet Möbius character of Pi_n vs closed form and plethystic inverse")


def set_partition_plethysm(trunc=10, n_max=6):
    d = 4
    E = sf_sum([sf_h(i, d) for i in range(d + 1)], d)
    Ep = E - 1
    lhs = sf_plethysm(E, Ep)
    rhs = SymFn({lam: c for n in range(d + 1) for lam, c in partition_fixed_points(n).items()}, d)
    return _result("set-partition-plethysm", lhs.to_json(), rhs.to_json(), "Ch E o Ch E_+ vs fixed set partitions")


def bell(trunc=10, n_max=6):
    B = egf_compose(exp_series(trunc), exp_series(trunc) - 1)
    lhs = list(B.coeffs[: n_max + 1])
    rhs = [set_partition_count(n) for n in range(n_max + 1)]
    return _result("bell", lhs, rhs, "exp(e^x - 1) vs set partition enumeration")


def catalan(trunc=10, n_max=6):
    x = x_series(trunc)
    g = egf_comp_inverse(x - Egf([0, 0, 2] + [0] * (trunc - 2), trunc))
    lhs = [g[n] for n in range(1, trunc + 1)]
    rhs = [factorial(n) * binary_trees(n) for n in range(1, trunc + 1)]
    return _result("catalan", lhs, rhs, "cinv(x - x^2) vs n! times plane binary trees")


def segre_binomial(trunc=10, n_max=6):
    M = builtin("EsegreE")
    lhs = [M.species.count(2 * k) for k in range(5)]
    rhs = [comb(2 * k, k) for k in range(5)]
    odd = [M.species.count(2 * k + 1) for k in range(3)]
    return IdentityResult("segre-binomial", lhs == rhs and not any(odd), lhs, rhs, "|E segre E[2k]| = C(2k,k)")


def theorem_main(trunc=8, n_max=5):
    N = 8
    lhs, rhs, enum = {}, {}, {}
    ok = True
    for name in ("E", "Cosh", "L"):
        M = counting_series(builtin(name), N)
        # F = x + x (M - 1)(F): Schröder trees for G = X M
        G2 = egf_mul(x_series(N), M - one(N))
        F = egf_solve_tree_fixed_point(G2, "schroeder")
        # A = x L(M_+)(A) with L(M_+) = 1 / (2 - M)
        LM = egf_mul_inverse(2 - M)
        A = egf_solve_tree_fixed_point(LM, "rooted")
        counts = builtin("A_L(%s+)" % name).species.counts(n_max)
        lhs[name] = list(F.coeffs)
        rhs[name] = list(A.coeffs)
        enum[name] = counts
        ok &= F == A and counts == list(A.coeffs[: n_max + 1])
    return IdentityResult("theorem-main", ok, lhs, rhs, "enumerated |A_L(M+)[n]|: %s" % enum)


def enriched_trees(trunc=10, n_max=5):
    lhs, rhs = {}, {}
    for name in ("E", "Cosh", "L", "EsegreE", "Lib_(1,2)"):
        M = builtin(name)
        A = egf_solve_tree_fixed_point(counting_series(M, n_max), "rooted")
        lhs[name] = builtin("A_" + name).species.counts(n_max)
        rhs[name] = list(A.coeffs)
    return _result("enriched-trees", lhs, rhs, "|A_M[n]| by enumeration vs A = x M(A)")


def sec_tan_posets(trunc=10, n_max=6):
    sec = dual_series_identities(builtin("Cosh"), n_max)
    tan = dual_series_identities(builtin("Sinh"), n_max + 1)
    ok = sec.passed and tan.passed
    return IdentityResult("sec-tan-posets", ok, [list(sec.poset_series.coeffs), list(tan.poset_series.coeffs)],
                          [list(sec.inverse_series.coeffs), list(tan.inverse_series.coeffs)],
                          "Möbius series of Cosh and Sinh posets vs 1/cosh and -sinh/cosh")


def hook_modules(trunc=10, n_max=6):
    lhs, rhs = {}, {}
    for j in (1, 2, 3):
        T = dual_dimensions(builtin("E_{%d+}" % j), n_max)
        lhs[j] = [(r["n"], r["k"], r["mobius"], r["homology"], r["series"]) for r in T.rows()]
        rhs[j] = [(j + k, k, d, d, d) for k in range(n_max - j + 1) for d in [hook_length_dimension((j,) + (1,) * k)]]
    return _result("hook-modules", lhs, rhs, "dual of E_{j+} vs hook-length dimension C(j+k-1,k)")


def bar_factorizations(trunc=10, n_max=6):
    ok = True
    seen = {}
    for name, n, k in (("E", 3, 3), ("E", 4, 4), ("Cosh", 4, 2), ("Cosh", 6, 3), ("EsegreE", 4, 2)):
        b = bar_complex(builtin(name), n, k)
        seen["%s[%d]^%d" % (name, n, k)] = b.factorizations
        ok &= b.alpha_bijective and b.factorizations == b.chains
    return IdentityResult("bar-factorizations", ok, seen, None, "factorizations biject with chains")


def mobius_characters(trunc=10, n_max=6):
    out = {}
    ok = True
    for name in ("E", "Cosh"):
        good, got, want = check_character_identity(builtin(name), 4)
        out[name] = good
        ok &= good
    return IdentityResult("mobius-characters", ok, out, None, "fixed-subposet characters vs (Ch M)^-1")


IDENTITIES = {
    f.__name__.replace("_", "-"): f
    for f in (
        euler_sec, euler_tan, bessel_carlitz, bessel_scale, bessel_i0_mobius, hipparchus, cayley,
        pointed_lagrange, partition_lattice, boolean, cosh_mobius, hanlon, set_partition_plethysm, bell,
        catalan, segre_binomial, theorem_main, enriched_trees, sec_tan_posets, hook_modules,
        bar_factorizations, mobius_characters,
    )
}
IDENTITIES["bessel-i0"] = IDENTITIES.pop("bessel-i0-mobius")


def run_identity(name, trunc=10, n_max=6):
    if name not in IDENTITIES:
        raise UnknownName("unknown identity %r" % (name,))
    return IDENTITIES[name](trunc=trunc, n_max=n_max)


def run_all(trunc=10, n_max=6):
    return [run_identity(name, trunc, n_max) for name in sorted(IDENTITIES)]

