"""
Truncated exponential generating functions over the rationals.

An :class:`Egf` stores ``c_0..c_N`` with ``F(x) = sum c_n x^n / n!``, so for a
species the coefficient ``c_n`` is the number (or dimension) of structures on
an ``n``-set.  Everything is exact; there is no floating point anywhere.
"""

from fractions import Fraction
from math import comb, factorial

from ksp.errors import (
    CompositionDomainError,
    InversionDomainError,
    NotInvertibleError,
    PreconditionError,
    TruncationMismatch,
)


def as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v)
    return Fraction(v)


def fraction_str(q):
    """Serialize a rational as ``"p/q"`` (denominator always written)."""
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


class Egf:
    """Immutable truncated EGF with coefficients ``c_0..c_trunc``."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs, trunc=None):
        coeffs = [as_fraction(c) for c in coeffs]
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise ValueError("negative truncation")
        coeffs = coeffs[: trunc + 1]
        coeffs += [Fraction(0)] * (trunc + 1 - len(coeffs))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Egf is immutable")

    @classmethod
    def from_function(cls, fn, trunc):
        return cls([fn(n) for n in range(trunc + 1)], trunc)

    @classmethod
    def from_ordinary(cls, ordinary, trunc):
        """Build from ordinary coefficients ``a_n`` of ``sum a_n x^n``."""
        ordinary = list(ordinary)[: trunc + 1]
        ordinary += [0] * (trunc + 1 - len(ordinary))
        return cls([as_fraction(a) * factorial(n) for n, a in enumerate(ordinary)], trunc)

    def ordinary(self):
        return [c / factorial(n) for n, c in enumerate(self.coeffs)]

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Egf):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return "Egf([%s], trunc=%d)" % (body, self.trunc)

    def __add__(self, other):
        return egf_add(self, _lift(other, self.trunc))

    __radd__ = __add__

    def __neg__(self):
        return Egf([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        return egf_add(self, -_lift(other, self.trunc))

    def __rsub__(self, other):
        return egf_add(_lift(other, self.trunc), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Egf([c * other for c in self.coeffs], self.trunc)
        return egf_mul(self, other)

    __rmul__ = __mul__

    def scale(self, q):
        return Egf([c * q for c in self.coeffs], self.trunc)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise PreconditionError("cannot extend a truncated series")
        return Egf(self.coeffs[: trunc + 1], trunc)

    def valuation(self):
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def to_json(self):
        return {"trunc": self.trunc, "coeffs": [fraction_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls([Fraction(s) for s in obj["coeffs"]], obj["trunc"])


def _lift(v, trunc):
    if isinstance(v, Egf):
        return v
    return constant(v, trunc)


def _check(f, g):
    if f.trunc != g.trunc:
        raise TruncationMismatch("truncations differ: %d vs %d" % (f.trunc, g.trunc))


# -- named series ---------------------------------------------------------

def zero(trunc):
    return Egf([], trunc)


def constant(c, trunc):
    return Egf([c], trunc)


def one(trunc):
    return constant(1, trunc)


def x_series(trunc):
    return Egf([0, 1], trunc)


def exp_series(trunc):
    """``E``: one set structure on every finite set."""
    return Egf([1] * (trunc + 1), trunc)


def linear_orders(trunc):
    """``L = 1/(1-x)``: ``n!`` linear orders."""
    return Egf([factorial(n) for n in range(trunc + 1)], trunc)


def cosh_series(trunc):
    return Egf([1 - n % 2 for n in range(trunc + 1)], trunc)


def sinh_series(trunc):
    return Egf([n % 2 for n in range(trunc + 1)], trunc)


def cos_series(trunc):
    return Egf([0 if n % 2 else (-1) ** (n // 2) for n in range(trunc + 1)], trunc)


def sin_series(trunc):
    return Egf([(-1) ** (n // 2) if n % 2 else 0 for n in range(trunc + 1)], trunc)


def bessel_j0(trunc):
    """``J_0(2x) = sum (-1)^k x^{2k} / k!^2``."""
    return Egf([0 if n % 2 else (-1) ** (n // 2) * comb(n, n // 2) for n in range(trunc + 1)], trunc)


def bessel_i0(trunc):
    """``I_0(2x) = sum x^{2k} / k!^2``; egf coefficient is ``C(2k, k)``."""
    return Egf([0 if n % 2 else comb(n, n // 2) for n in range(trunc + 1)], trunc)


# -- arithmetic -----------------------------------------------------------

def egf_add(f, g):
    _check(f, g)
    return Egf([a + b for a, b in zip(f.coeffs, g.coeffs)], f.trunc)


def egf_mul(f, g):
    """Binomial convolution ``c_n = sum C(n,i) f_i g_{n-i}``."""
    _check(f, g)
    N = f.trunc
    fc, gc = f.coeffs, g.coeffs
    out = []
    for n in range(N + 1):
        s = Fraction(0)
        for i in range(n + 1):
            if fc[i] and gc[n - i]:
                s += comb(n, i) * fc[i] * gc[n - i]
        out.append(s)
    return Egf(out, N)


def egf_hadamard(f, g):
    """Coefficientwise product of dimensions: ``(F . G)[n] = F[n] x G[n]``."""
    _check(f, g)
    return Egf([a * b for a, b in zip(f.coeffs, g.coeffs)], f.trunc)


def _ordinary_mul(a, b, N):
    out = [Fraction(0)] * (N + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(N + 1 - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def egf_compose(f, g):
    """Truncated substitution ``F(G(x))``; requires ``G(0) = 0``."""
    _check(f, g)
    if g.coeffs[0] != 0:
        raise CompositionDomainError("inner series must have zero constant term")
    N = f.trunc
    fo = f.ordinary()
    go = g.ordinary()
    # Horner in ordinary coefficients
    acc = [Fraction(0)] * (N + 1)
    for k in range(N, -1, -1):
        acc = _ordinary_mul(acc, go, N)
        acc[0] += fo[k]
    return Egf.from_ordinary(acc, N)


def egf_mul_inverse(f):
    """``1/F``; any nonzero constant term is accepted."""
    c0 = f.coeffs[0]
    if c0 == 0:
        raise NotInvertibleError("constant term is zero")
    N = f.trunc
    fc = f.coeffs
    g = [Fraction(0)] * (N + 1)
    g[0] = 1 / c0
    for n in range(1, N + 1):
        s = Fraction(0)
        for i in range(1, n + 1):
            if fc[i]:
                s += comb(n, i) * fc[i] * g[n - i]
        g[n] = -s / c0
    return Egf(g, N)


def egf_div(f, g):
    return egf_mul(f, egf_mul_inverse(g))


def egf_comp_inverse(f):
    """Substitutional inverse ``G`` with ``F(G(x)) = G(F(x)) = x``."""
    N = f.trunc
    if f.coeffs[0] != 0 or N >= 1 and f.coeffs[1] == 0:
        raise InversionDomainError("need zero constant term and nonzero linear term")
    if N == 0:
        return zero(0)
    c1 = f.coeffs[1]
    x = x_series(N)
    g = x.scale(1 / c1)
    # each pass fixes one more coefficient
    for _ in range(N):
        err = egf_compose(f, g) - x
        g = g - err.scale(1 / c1)
    return g


def egf_derivative(f):
    """``F'``; the truncation drops by one (no coefficient is invented)."""
    if f.trunc == 0:
        raise PreconditionError("derivative of a degree-0 truncation is undefined")
    return Egf(f.coeffs[1:], f.trunc - 1)


def egf_pointing(f):
    """``x F'(x)``: multiplies ``c_n`` by ``n``."""
    return Egf([n * c for n, c in enumerate(f.coeffs)], f.trunc)


def egf_solve_tree_fixed_point(m, kind):
    """Solve ``A = x M(A)`` (``kind='rooted'``) or ``F = x + G(F)``
    (``kind='schroeder'``, with ``m`` the ``G_{2+}`` part).

    The iteration runs exactly ``trunc + 1`` times.  After ``d`` passes the
    coefficients below degree ``d`` are final, which is asserted.
    """
    N = m.trunc
    x = x_series(N)
    if kind == "rooted":
        if m.coeffs[0] != 1:
            raise PreconditionError("rooted fixed point needs M(0) = 1")
        step = lambda a: egf_mul(x, egf_compose(m, a))
    elif kind == "schroeder":
        if m.coeffs[0] != 0 or (N >= 1 and m.coeffs[1] != 0):
            raise PreconditionError("schroeder fixed point needs G_{2+} with c_0 = c_1 = 0")
        step = lambda a: x + egf_compose(m, a)
    else:
        raise PreconditionError("unknown fixed-point kind %r" % (kind,))
    a = zero(N)
    for d in range(1, N + 2):
        nxt = step(a)
        assert nxt.coeffs[:d] == a.coeffs[:d], "fixed point did not stabilize"
        a = nxt
    assert step(a) == a
    return a


# -- graded series --------------------------------------------------------

class GradedEgf:
    """Bigraded series ``sum c_{n,k} t^k x^n / n!`` (``k`` = weight)."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs, trunc):
        clean = {}
        for (n, k), c in coeffs.items():
            if n < 0 or k < 0:
                raise ValueError("negative degree or weight")
            c = as_fraction(c)
            if c and n <= trunc:
                clean[(n, k)] = c
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedEgf is immutable")

    def __getitem__(self, nk):
        return self.coeffs.get(nk, Fraction(0))

    def __eq__(self, other):
        return isinstance(other, GradedEgf) and self.trunc == other.trunc and self.coeffs == other.coeffs

    def __repr__(self):
        return "GradedEgf(%r, trunc=%d)" % (dict(sorted(self.coeffs.items())), self.trunc)

    def weights(self, n):
        return sorted(k for (m, k) in self.coeffs if m == n)

    @classmethod
    def from_counts(cls, counts, trunc):
        """``counts`` maps ``(n, k)`` to ``|F^k[n]|``."""
        return cls(dict(counts), trunc)

    def ungraded(self):
        out = [Fraction(0)] * (self.trunc + 1)
        for (n, k), c in self.coeffs.items():
            out[n] += c
        return Egf(out, self.trunc)

    def sign_twist(self):
        """``t -> -t``."""
        return GradedEgf({(n, k): (-1) ** k * c for (n, k), c in self.coeffs.items()}, self.trunc)


def graded_euler(g):
    """Euler projection ``c_n = sum_k (-1)^k c_{n,k}``."""
    out = [Fraction(0)] * (g.trunc + 1)
    for (n, k), c in g.coeffs.items():
        out[n] += (-1) ** k * c
    return Egf(out, g.trunc)


def graded_mul(f, g):
    _check(f, g)
    out = {}
    for (n1, k1), a in f.coeffs.items():
        for (n2, k2), b in g.coeffs.items():
            n = n1 + n2
            if n > f.trunc:
                continue
            key = (n, k1 + k2)
            out[key] = out.get(key, 0) + comb(n, n1) * a * b
    return GradedEgf(out, f.trunc)


def graded_mul_inverse(f):
    """Inverse in ``Q[t][[x]]``; needs ``c_{0,0} != 0`` and no other ``n = 0`` term."""
    c00 = f[(0, 0)]
    if c00 == 0 or any(n == 0 and k > 0 for (n, k) in f.coeffs):
        raise NotInvertibleError("degree-0 part must be a nonzero constant")
    N = f.trunc
    rows = {}  # n -> {k: coeff}
    for (n, k), c in f.coeffs.items():
        rows.setdefault(n, {})[k] = c
    g = {0: {0: 1 / c00}}
    for n in range(1, N + 1):
        acc = {}
        for i in range(1, n + 1):
            fi = rows.get(i)
            if not fi:
                continue
            for k1, a in fi.items():
                for k2, b in g.get(n - i, {}).items():
                    acc[k1 + k2] = acc.get(k1 + k2, 0) + comb(n, i) * a * b
        g[n] = {k: -v / c00 for k, v in acc.items() if v}
    return GradedEgf({(n, k): c for n, row in g.items() for k, c in row.items()}, N)


def graded_div(f, g):
    return graded_mul(f, graded_mul_inverse(g))
