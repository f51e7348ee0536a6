"""
Symmetric functions stored in the power-sum basis.

A partition is a weakly decreasing tuple of positive ints.  A :class:`SymFn`
maps partitions to rationals and is truncated at a total degree.  The
power-sum basis makes plethysm and the internal product one-liners; ``h``,
``e`` and Schur functions are only constructors into it.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ksp.errors import InversionDomainError, NotInvertibleError, PreconditionError, TruncationMismatch
from ksp.series import Egf, as_fraction, fraction_str


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of ``n`` in reverse-lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(lam):
    m = {}
    for p in lam:
        m[p] = m.get(p, 0) + 1
    return m


@lru_cache(maxsize=None)
def z(lam):
    """``z_lambda = prod i^{m_i} m_i!``: centralizer order of a cycle type."""
    out = 1
    for i, mi in multiplicities(lam).items():
        out *= i ** mi * factorial(mi)
    return out


def union(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


def _key(lam):
    return (sum(lam), lam)


class SymFn:
    """Truncated symmetric function, ``{partition: coefficient}`` in the p-basis."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs, trunc):
        clean = {}
        for lam, c in coeffs.items():
            lam = tuple(lam)
            if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(p < 1 for p in lam):
                raise ValueError("not a partition: %r" % (lam,))
            c = as_fraction(c)
            if c and sum(lam) <= trunc:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("SymFn is immutable")

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SymFn):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __repr__(self):
        terms = " + ".join("%s*p%s" % (c, list(lam)) for lam, c in self.items())
        return "SymFn(%s, trunc=%d)" % (terms or "0", self.trunc)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _key(kv[0]))

    def __add__(self, other):
        other = _lift(other, self.trunc)
        _check(self, other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFn(out, self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return SymFn({k: -v for k, v in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-_lift(other, self.trunc))

    def __rsub__(self, other):
        return _lift(other, self.trunc) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFn({k: v * other for k, v in self.coeffs.items()}, self.trunc)
        return sf_mul(self, other)

    __rmul__ = __mul__

    def degree_part(self, n):
        return SymFn({k: v for k, v in self.coeffs.items() if sum(k) == n}, self.trunc)

    def constant_term(self):
        return self.coeffs.get((), Fraction(0))

    def is_homogeneous(self, n):
        return all(sum(k) == n for k in self.coeffs)

    def with_trunc(self, trunc):
        return SymFn(self.coeffs, trunc)

    def to_json(self):
        return {
            "trunc": self.trunc,
            "terms": [[list(lam), fraction_str(c)] for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls({tuple(lam): Fraction(c) for lam, c in obj["terms"]}, obj["trunc"])


def _lift(v, trunc):
    if isinstance(v, SymFn):
        return v
    return SymFn({(): v}, trunc)


def _check(f, g):
    if f.trunc != g.trunc:
        raise TruncationMismatch("truncations differ: %d vs %d" % (f.trunc, g.trunc))


# -- constructors ---------------------------------------------------------

def sf_zero(trunc):
    return SymFn({}, trunc)


def sf_one(trunc):
    return SymFn({(): 1}, trunc)


def sf_p(lam, trunc):
    return SymFn({tuple(lam): 1}, trunc)


def _guard(n, trunc):
    if n > trunc:
        raise PreconditionError("degree %d exceeds truncation %d" % (n, trunc))


def sf_h(n, trunc):
    _guard(n, trunc)
    return SymFn({lam: Fraction(1, z(lam)) for lam in partitions(n)}, trunc)


def sf_e(n, trunc):
    _guard(n, trunc)
    return SymFn({lam: Fraction((-1) ** (n - len(lam)), z(lam)) for lam in partitions(n)}, trunc)


def sf_sum(parts, trunc):
    out = sf_zero(trunc)
    for f in parts:
        out = out + f
    return out


# -- products -------------------------------------------------------------

def sf_mul(f, g):
    _check(f, g)
    out = {}
    for lam, a in f.coeffs.items():
        d = sum(lam)
        for mu, b in g.coeffs.items():
            if d + sum(mu) > f.trunc:
                continue
            nu = union(lam, mu)
            out[nu] = out.get(nu, 0) + a * b
    return SymFn(out, f.trunc)


def sf_power(f, k):
    out = sf_one(f.trunc)
    for _ in range(k):
        out = sf_mul(out, f)
    return out


def adams(g, n):
    """``p_n * g``: every ``p_m`` in ``g`` becomes ``p_{nm}``."""
    return SymFn({tuple(n * p for p in lam): c for lam, c in g.coeffs.items()}, g.trunc)


def sf_plethysm(f, g):
    """``f * g`` (substitution); ``g`` must have no constant term."""
    _check(f, g)
    if g.constant_term():
        raise PreconditionError("plethysm needs an inner function without constant term")
    N = f.trunc
    adams_cache = {}

    def ad(n):
        if n not in adams_cache:
            adams_cache[n] = adams(g, n)
        return adams_cache[n]

    power_cache = {}

    def term(lam):
        if lam not in power_cache:
            out = sf_one(N)
            for p in lam:
                out = sf_mul(out, ad(p))
            power_cache[lam] = out
        return power_cache[lam]

    out = sf_zero(N)
    for lam, c in f.coeffs.items():
        if len(lam) > N:
            continue
        out = out + term(lam) * c
    return out


def sf_internal(f, g):
    """Kronecker product: ``p_lam . p_mu = delta z_lam p_lam``."""
    _check(f, g)
    return SymFn(
        {lam: a * g.coeffs[lam] * z(lam) for lam, a in f.coeffs.items() if lam in g.coeffs},
        f.trunc,
    )


def sf_mul_inverse(f):
    c0 = f.constant_term()
    if c0 == 0:
        raise NotInvertibleError("constant term is zero")
    N = f.trunc
    rest = (f - c0) * (1 / c0)
    out = sf_one(N)
    term = sf_one(N)
    for _ in range(N):
        term = -sf_mul(term, rest)
        out = out + term
    return out * (1 / c0)


def sf_plethystic_inverse(g):
    """``h`` with ``g * h = h * g = p_1``; ``g`` must be ``p_1 + (degree >= 2)``."""
    N = g.trunc
    p1 = sf_p((1,), N)
    low = {lam: c for lam, c in g.coeffs.items() if sum(lam) <= 1}
    if low != ({(1,): 1} if N >= 1 else {}):
        raise InversionDomainError("plethystic inverse needs leading term p_1")
    higher = g - p1
    h = p1
    # h = p_1 - higher * h; each pass fixes one more degree
    for _ in range(N):
        h = p1 - sf_plethysm(higher, h)
    return h


def sf_sign_twist(f):
    """``p_lam -> (-1)^{len(lam)} p_lam``."""
    return SymFn({lam: (-1) ** len(lam) * c for lam, c in f.coeffs.items()}, f.trunc)


# -- specializations ------------------------------------------------------

def sf_to_egf(f):
    """Exponential specialization ``p_1 -> x``, ``p_k -> 0`` for ``k >= 2``."""
    out = [Fraction(0)] * (f.trunc + 1)
    for lam, c in f.coeffs.items():
        if all(p == 1 for p in lam):
            out[len(lam)] = c * factorial(len(lam))
    return Egf(out, f.trunc)


def sf_hilbert(f_by_weight, n):
    """Principal specialization at ``n`` ones, weight ``k`` collected as ``t^k``.

    Returns the list of coefficients of ``1, t, t^2, ...``.
    """
    out = []
    for f in f_by_weight:
        out.append(sum((c * n ** len(lam) for lam, c in f.coeffs.items()), Fraction(0)))
    return out


# -- characters -----------------------------------------------------------

def _beta(lam, length):
    return tuple(lam[i] + length - 1 - i if i < len(lam) else length - 1 - i for i in range(length))


def _from_beta(beta):
    L = len(beta)
    lam = tuple(sorted((b - (L - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))), reverse=True))
    return tuple(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """Irreducible character ``chi^lam`` at cycle type ``mu`` (Murnaghan-Nakayama)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    L = len(lam)
    beta = _beta(lam, L)
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new = tuple(sorted((bset - {b}) | {nb}, reverse=True))
        total += (-1) ** height * mn_character(_from_beta(new), rest)
    return total


def sf_schur(lam, trunc):
    """``s_lam = sum_mu chi^lam(mu) p_mu / z_mu``."""
    n = sum(lam)
    _guard(n, trunc)
    return SymFn({mu: Fraction(mn_character(tuple(lam), mu), z(mu)) for mu in partitions(n)}, trunc)


def sf_to_schur(f):
    """Schur coefficients: ``<f, s_lam> = sum_mu c_mu chi^lam(mu)`` since ``p_mu = sum chi^lam(mu) s_lam``."""
    out = {}
    degrees = sorted({sum(k) for k in f.coeffs})
    for n in degrees:
        for lam in partitions(n):
            v = sum(
                (c * mn_character(lam, mu) for mu, c in f.coeffs.items() if sum(mu) == n),
                Fraction(0),
            )
            if v:
                out[lam] = v
    return out
