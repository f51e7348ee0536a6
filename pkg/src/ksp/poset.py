"""
Posets induced by c-monoids, c-modules and c-operads, with Möbius functions,
order-complex homology over Q and Cohen-Macaulay certificates.

A :class:`Poset` keeps its elements in a list and the order as a dense numpy
boolean matrix ``leq[i, j] <=> elements[i] <= elements[j]``.  Elements are
stored in a linear extension, so index order is compatible with the order.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from ksp.errors import GuardExceeded, IncomparableError, PreconditionError
from ksp.linalg import sparse_rank
from ksp.series import Egf
from ksp.species import (
    ENUM_GUARD,
    CModule,
    CMonoid,
    COperad,
    cycle_type_permutation,
    struct_key,
    subsets,
    to_text,
)
from ksp.symfun import SymFn, partitions, z

BOTTOM = "0^"


def _guard(n, guard, force):
    if n > guard and not force:
        raise GuardExceeded("n = %d exceeds the enumeration guard %d (use force)" % (n, guard))


def _bool_product(a, b):
    # float matmul is BLAS-backed and exact for counts far below 2**53
    return (a.astype(np.float64) @ b.astype(np.float64)) > 0.5


class Poset:
    """Finite poset on an indexed element list."""

    def __init__(self, elements, leq, name="", relabel=None, bottom=None, tops=None, check=True):
        leq = np.asarray(leq, dtype=bool)
        n = len(elements)
        if leq.shape != (n, n):
            raise PreconditionError("order matrix has shape %r for %d elements" % (leq.shape, n))
        # put the elements in a linear extension: x < y implies fewer elements below x
        order = sorted(range(n), key=lambda i: (int(leq[:, i].sum()), i))
        perm = np.array(order, dtype=np.intp)
        self.elements = [elements[i] for i in order]
        self.leq = leq[np.ix_(perm, perm)] if n else leq
        pos = {old: new for new, old in enumerate(order)}
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.name = name
        self.relabel = relabel
        self.bottom = pos[bottom] if bottom is not None else None
        self.tops = sorted(pos[t] for t in tops) if tops is not None else None
        self.lt = self.leq & ~np.eye(n, dtype=bool)
        self._covers = None
        if check:
            self.validate()

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "<poset %s with %d elements>" % (self.name, len(self))

    # construction helpers
    @classmethod
    def from_relation(cls, elements, above, **kw):
        """``above[e]`` is the set of elements ``>= e``."""
        index = {e: i for i, e in enumerate(elements)}
        leq = np.zeros((len(elements), len(elements)), dtype=bool)
        for e, ups in above.items():
            i = index.get(e)
            if i is None:
                continue
            for u in ups:
                j = index.get(u)
                if j is not None:
                    leq[i, j] = True
        np.fill_diagonal(leq, True)
        kw.setdefault("tops", None)
        if kw.get("bottom") is not None:
            kw["bottom"] = index[kw["bottom"]]
        if kw["tops"] is not None:
            kw["tops"] = [index[t] for t in kw["tops"]]
        return cls(list(elements), leq, **kw)

    @classmethod
    def from_covers(cls, elements, covers, **kw):
        """Transitive closure of a list of ``(lower, upper)`` pairs."""
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        leq = np.eye(n, dtype=bool)
        for a, b in covers:
            leq[index[a], index[b]] = True
        while True:
            nxt = leq | _bool_product(leq, leq)
            if (nxt == leq).all():
                break
            leq = nxt
        return cls(list(elements), leq, **kw)

    def validate(self):
        L = self.leq
        n = len(self)
        if not L.diagonal().all():
            raise PreconditionError("order is not reflexive")
        if (L & L.T & ~np.eye(n, dtype=bool)).any():
            raise PreconditionError("order is not antisymmetric")
        if n and (_bool_product(L, L) & ~L).any():
            raise PreconditionError("order is not transitive")

    # basic queries
    def minimal(self):
        return [i for i in range(len(self)) if not self.lt[:, i].any()]

    def maximal(self):
        return [i for i in range(len(self)) if not self.lt[i, :].any()]

    def covers(self):
        if self._covers is None:
            lt = self.lt
            if not len(self):
                self._covers = []
            else:
                cov = lt & ~_bool_product(lt, lt)
                self._covers = [tuple(map(int, p)) for p in np.argwhere(cov)]
        return self._covers

    def up(self, i):
        return [int(j) for j in np.nonzero(self.leq[i])[0]]

    def restrict(self, indices, name=None):
        """Induced subposet; bottom and tops are kept when they survive."""
        idx = sorted(indices)
        keep = set(idx)
        sub = self.leq[np.ix_(idx, idx)]
        elems = [self.elements[i] for i in idx]
        pos = {old: new for new, old in enumerate(idx)}
        bottom = pos[self.bottom] if self.bottom in keep else None
        tops = [pos[t] for t in self.tops if t in keep] if self.tops is not None else None
        return Poset(elems, sub, name=name or self.name, relabel=self.relabel,
                     bottom=bottom, tops=tops, check=False)

    def interval(self, i, j):
        if not self.leq[i, j]:
            raise IncomparableError("%s is not below %s" % (to_text(self.elements[i]), to_text(self.elements[j])))
        idx = [int(k) for k in np.nonzero(self.leq[i] & self.leq[:, j])[0]]
        sub = self.restrict(idx, name="%s[%d,%d]" % (self.name, i, j))
        sub.bottom = 0
        sub.tops = [len(idx) - 1]
        return sub

    def coideal(self, i):
        idx = [int(k) for k in np.nonzero(self.leq[i])[0]]
        sub = self.restrict(idx)
        sub.bottom = 0
        return sub

    def cover_graph(self):
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self)))
        g.add_edges_from(self.covers())
        return g

    def chain_lengths(self, i):
        """Shortest and longest saturated chain length from ``i`` to each ``j >= i``."""
        n = len(self)
        lo = [None] * n
        hi = [None] * n
        lo[i] = hi[i] = 0
        cov = defaultdict(list)
        for a, b in self.covers():
            cov[a].append(b)
        for a in range(i, n):
            if lo[a] is None:
                continue
            for b in cov[a]:
                if lo[b] is None or lo[a] + 1 < lo[b]:
                    lo[b] = lo[a] + 1
                if hi[b] is None or hi[a] + 1 > hi[b]:
                    hi[b] = hi[a] + 1
        return lo, hi

    def is_graded(self):
        for i in range(len(self)):
            lo, hi = self.chain_lengths(i)
            if lo != hi:
                return False
        return True

    def to_json(self):
        return {
            "name": self.name,
            "elements": [to_text(e) for e in self.elements],
            "covers": [list(c) for c in self.covers()],
            "bottom": self.bottom,
            "tops": self.tops,
        }


# -- Möbius functions -----------------------------------------------------

def mobius_row(P, i):
    """``mu(i, j)`` for every ``j`` (zero off the up-set of ``i``), as Python ints."""
    n = len(P)
    mu = np.zeros(n, dtype=object)
    mu[i] = 1
    for j in range(i + 1, n):
        if P.leq[i, j]:
            mu[j] = -mu[P.lt[:, j]].sum()
    return [int(v) for v in mu]


def mobius(P, x, y):
    """``mu(x, y)`` for elements (or indices) ``x <= y``."""
    i = P.index[x] if x in P.index else x
    j = P.index[y] if y in P.index else y
    if not P.leq[i, j]:
        raise IncomparableError("mobius needs comparable elements")
    return mobius_row(P, i)[j]


def mobius_cardinality(P):
    """``sum over tops of mu(bottom, top)``; zero when there are no tops."""
    if not P.tops or P.bottom is None:
        return 0
    row = mobius_row(P, P.bottom)
    return sum(row[t] for t in P.tops)


# -- order complex --------------------------------------------------------

class ChainComplex:
    """Chains ``x_0 < ... < x_l`` from a minimal to a maximal element, graded by ``l``.

    The boundary deletes interior elements only:
    ``d(x_0 < ... < x_l) = sum_{i=1}^{l-1} (-1)^{i-1} (... x_{i-1} < x_{i+1} ...)``.
    """

    def __init__(self, chains):
        self.chains = {l: sorted(cs) for l, cs in chains.items() if cs}
        self.index = {l: {c: i for i, c in enumerate(cs)} for l, cs in self.chains.items()}
        self.top = max(self.chains) if self.chains else -1
        self._rank = {}

    def dim(self, l):
        return len(self.chains.get(l, ()))

    def dims(self):
        return [self.dim(l) for l in range(self.top + 1)]

    def boundary_rows(self, l):
        """One ``{face index: coefficient}`` row per chain of length ``l``."""
        if l < 2 or l not in self.chains:
            return []
        faces = self.index.get(l - 1, {})
        rows = []
        for c in self.chains[l]:
            row = {}
            for i in range(1, l):
                f = faces[c[:i] + c[i + 1:]]
                row[f] = row.get(f, 0) + (-1) ** (i - 1)
            rows.append({k: v for k, v in row.items() if v})
        return rows

    def boundary_triplets(self, l):
        """Sparse ``(row = face, column = chain, value)`` triplets of ``d_l``."""
        out = []
        for col, row in enumerate(self.boundary_rows(l)):
            for f, v in sorted(row.items()):
                out.append((f, col, v))
        return sorted(out)

    def rank(self, l):
        if l not in self._rank:
            self._rank[l] = sparse_rank(self.boundary_rows(l))
        return self._rank[l]

    def homology(self):
        return [self.dim(l) - self.rank(l) - self.rank(l + 1) for l in range(self.top + 1)]

    def check_d_squared(self):
        for l in range(3, self.top + 1):
            lower = self.boundary_rows(l - 1)
            for row in self.boundary_rows(l):
                acc = defaultdict(int)
                for f, v in row.items():
                    for g, w in lower[f].items():
                        acc[g] += v * w
                if any(acc.values()):
                    return False
        return True

    def euler_chains(self):
        return sum((-1) ** l * self.dim(l) for l in range(self.top + 1))

    def euler_homology(self):
        return sum((-1) ** l * h for l, h in enumerate(self.homology()))

    def to_json(self):
        return {
            "dims": self.dims(),
            "boundaries": {str(l): [list(t) for t in self.boundary_triplets(l)] for l in range(2, self.top + 1)},
        }


def order_complex(P):
    mins = P.minimal()
    maxs = set(P.maximal())
    succ = [[int(j) for j in np.nonzero(P.lt[i])[0]] for i in range(len(P))]
    chains = defaultdict(list)

    def walk(path):
        v = path[-1]
        if v in maxs:
            chains[len(path) - 1].append(tuple(path))
            return
        for w in succ[v]:
            path.append(w)
            walk(path)
            path.pop()

    for m in mins:
        walk([m])
    return ChainComplex(chains)


def homology_ranks(C):
    return C.homology()


# -- Cohen-Macaulay certificates ------------------------------------------

@dataclass
class CMCertificate:
    name: str
    passed: bool
    graded: bool = True
    intervals: int = 0
    classes: int = 0
    # rank -> sorted list of top homology dims seen on intervals of that rank
    profile: dict = field(default_factory=dict)
    witness: object = None
    table: list = None

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "graded": self.graded,
            "intervals": self.intervals,
            "classes": self.classes,
            "profile": {str(k): v for k, v in sorted(self.profile.items())},
            "witness": self.witness,
            **({"table": self.table} if self.table is not None else {}),
        }


def _invariant(Q):
    g = Q.cover_graph()
    return (len(Q), g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g)), g


def cohen_macaulay_check(P, dedup=True, table=False):
    """Graded check plus homology concentration on every interval ``[x, y]``.

    With ``table`` every interval is listed with its rank and homology.
    """
    cert = CMCertificate(P.name, True, table=[] if table else None)
    seen = defaultdict(list)  # invariant -> [(graph, homology)]
    profile = defaultdict(set)
    for i in range(len(P)):
        lo, hi = P.chain_lengths(i)
        for j in P.up(i):
            cert.intervals += 1
            if lo[j] != hi[j]:
                cert.passed = cert.graded = False
                cert.witness = {
                    "interval": [to_text(P.elements[i]), to_text(P.elements[j])],
                    "reason": "not-graded",
                    "chain_lengths": [lo[j], hi[j]],
                }
                return cert
            r = lo[j]
            if r <= 1:
                profile[r].add(1)
                if table:
                    cert.table.append([to_text(P.elements[i]), to_text(P.elements[j]), r, [0] * r + [1]])
                continue
            Q = P.interval(i, j)
            hom = None
            if dedup:
                key, g = _invariant(Q)
                for g2, h2 in seen[key]:
                    if nx.is_isomorphic(g, g2):
                        hom = h2
                        break
            if hom is None:
                hom = order_complex(Q).homology()
                cert.classes += 1
                if dedup:
                    seen[key].append((g, hom))
            profile[r].add(hom[r])
            if table:
                cert.table.append([to_text(P.elements[i]), to_text(P.elements[j]), r, hom])
            if any(h for l, h in enumerate(hom) if l != r):
                cert.passed = False
                cert.witness = {
                    "interval": [to_text(P.elements[i]), to_text(P.elements[j])],
                    "reason": "homology-not-concentrated",
                    "rank": r,
                    "homology": hom,
                }
                return cert
    cert.profile = {k: sorted(v) for k, v in profile.items()}
    return cert


# -- builders -------------------------------------------------------------

def _sort_key(weight_of):
    return lambda e: (weight_of(e), struct_key(e))


def build_monoid_poset(M, n, weight=None, guard=ENUM_GUARD, force=False):
    """``P_M[n]`` (or ``P_M^k[n]`` with ``weight=k``): structures on subsets below a top."""
    if not isinstance(M, CMonoid):
        raise PreconditionError("%r is not a c-monoid" % (M,))
    _guard(n, guard, force)
    U = tuple(range(n))
    subs = list(subsets(U))
    above = {}
    for S in subs:
        rest = tuple(x for x in U if x not in S)
        for m1 in M.structures(S):
            ups = set()
            for R in subsets(rest):
                for m2 in M.structures(R):
                    ups.add(M.nu(m1, m2))
            above[m1] = ups
    tops = [m for m in M.structures(U) if weight is None or M.weight(m) == weight]
    topset = set(tops)
    elements = sorted(
        (m for m, ups in above.items() if ups & topset or m == M.unit),
        key=_sort_key(lambda m: len(M.labels(m))),
    )
    name = "P_%s[%d]" % (M.name, n) if weight is None else "P_%s^%d[%d]" % (M.name, weight, n)
    return Poset.from_relation(elements, above, name=name, relabel=M.relabel, bottom=M.unit, tops=tops)


def build_module_poset(N, n, weight=None, guard=ENUM_GUARD, force=False):
    """``P_{M,N}[n]`` with an adjoined bottom ``0^`` below every ``N``-structure."""
    if not isinstance(N, CModule):
        raise PreconditionError("%r is not a c-module" % (N,))
    _guard(n, guard, force)
    M = N.monoid
    U = tuple(range(n))
    above = {BOTTOM: set()}
    for S in subsets(U):
        rest = tuple(x for x in U if x not in S)
        for x in N.structures(S):
            ups = set()
            for R in subsets(rest):
                for m in M.structures(R):
                    ups.add(N.tau(x, m))
            above[x] = ups
            above[BOTTOM].add(x)
    above[BOTTOM].add(BOTTOM)
    tops = [x for x in N.structures(U) if weight is None or N.weight(x) == weight]
    topset = set(tops)
    body = sorted(
        (x for x, ups in above.items() if x != BOTTOM and ups & topset),
        key=_sort_key(lambda x: len(N.labels(x))),
    )

    def relabel(x, f):
        return x if x == BOTTOM else N.relabel(x, f)

    name = "Q_%s[%d]" % (N.name, n) if weight is None else "Q_%s^%d[%d]" % (N.name, weight, n)
    return Poset.from_relation([BOTTOM] + body, above, name=name, relabel=relabel, bottom=BOTTOM, tops=tops)


def build_operad_poset(C, n, guard=ENUM_GUARD, force=False):
    """``P_C[n]``: assemblies ordered by ``a1 <= hat-eta(a1, a2)``, below a one-block assembly."""
    if not isinstance(C, COperad):
        raise PreconditionError("%r is not a c-operad" % (C,))
    _guard(n, guard, force)
    U = tuple(range(n))
    above = {}
    for a1 in C.assemblies.structures(U):
        pi = C.partition(a1)
        above[a1] = {C.compose_hat(a1, a2) for a2 in C.assemblies.structures(pi)}
    tops = [frozenset({c}) for c in C.structures(U)]
    topset = set(tops)
    bottom = frozenset(C.unit(u) for u in U)
    elements = sorted((a for a, ups in above.items() if ups & topset or a == bottom), key=_sort_key(lambda a: -len(a)))
    return Poset.from_relation(
        elements, above, name="P_%s[%d]" % (C.name, n), relabel=C.assemblies.relabel, bottom=bottom, tops=tops,
    )


def build_poset(x, n, weight=None, **kw):
    if isinstance(x, CMonoid):
        return build_monoid_poset(x, n, weight=weight, **kw)
    if isinstance(x, CModule):
        return build_module_poset(x, n, weight=weight, **kw)
    if isinstance(x, COperad):
        return build_operad_poset(x, n, **kw)
    raise PreconditionError("no poset for %r" % (x,))


def fixed_subposet(P, sigma):
    """Elements fixed by the relabeling ``sigma`` (a dict on labels)."""
    idx = [i for i, e in enumerate(P.elements) if P.relabel(e, sigma) == e]
    return P.restrict(idx, name="%s^sigma" % P.name)


# -- Möbius species -------------------------------------------------------

@dataclass
class MobiusSpeciesReport:
    name: str
    n_max: int
    cardinalities: list
    interval_values: list
    egf: Egf
    character: SymFn = None

    def to_json(self):
        out = {
            "name": self.name,
            "n_max": self.n_max,
            "cardinalities": self.cardinalities,
            "interval_values": self.interval_values,
            "egf": self.egf.to_json(),
        }
        if self.character is not None:
            out["character"] = self.character.to_json()
        return out


def mobius_inverse_series(x, n_max, char_max=None, guard=ENUM_GUARD, force=False):
    """Möbius cardinalities ``|P[n]|_mu`` for ``n <= n_max`` assembled into an egf.

    With ``char_max`` the fixed subposets under one permutation of each cycle
    type give the character ``sum |P[n]^sigma|_mu p_alpha / z_alpha``.
    """
    _guard(n_max, guard, force)
    cards, values = [], []
    char = {}
    for n in range(n_max + 1):
        P = build_poset(x, n, guard=guard, force=force)
        if P.tops and P.bottom is not None:
            row = mobius_row(P, P.bottom)
            vals = sorted(row[t] for t in P.tops)
        else:
            vals = []
        cards.append(sum(vals))
        values.append(vals)
        if char_max is not None and n <= char_max:
            for lam in partitions(n):
                Q = fixed_subposet(P, cycle_type_permutation(lam))
                c = mobius_cardinality(Q)
                if c:
                    char[lam] = Fraction(c, z(lam))
    egf = Egf([Fraction(c) for c in cards], n_max)
    sf = SymFn(char, char_max) if char_max is not None else None
    return MobiusSpeciesReport(getattr(x, "name", str(x)), n_max, cards, values, egf, sf)


# -- structural self-similarity -------------------------------------------

def check_coideal_self_similarity(M, n):
    """Every coideal above ``m1`` in ``P_M[U]`` is isomorphic to ``P_M[U - U1]``."""
    P = build_monoid_poset(M, n)
    smaller = {}
    checked = 0
    for i, m in enumerate(P.elements):
        k = n - len(M.labels(m))
        if k not in smaller:
            smaller[k] = build_monoid_poset(M, k).cover_graph()
        checked += 1
        if not nx.is_isomorphic(P.coideal(i).cover_graph(), smaller[k]):
            return False, checked, to_text(m)
    return True, checked, None


def product_poset(factors):
    """Componentwise order on tuples."""
    elems = list(itertools.product(*(range(len(F)) for F in factors)))
    size = len(elems)
    leq = np.ones((size, size), dtype=bool)
    for pos, F in enumerate(factors):
        col = np.array([e[pos] for e in elems], dtype=np.intp)
        leq &= F.leq[np.ix_(col, col)]
    return Poset(elems, leq, check=False)


def check_operad_product_intervals(C, n):
    """``[0^, a]`` is isomorphic to the product of ``[0^, {c_B}]`` over the blocks of ``a``."""
    P = build_operad_poset(C, n)
    local = {}
    checked = 0
    for j, a in enumerate(P.elements):
        factors = []
        for c in sorted(a, key=struct_key):
            B = sorted(C.labels(c), key=struct_key)
            k = len(B)
            if k not in local:
                local[k] = build_operad_poset(C, k)
            Pk = local[k]
            rel = C.relabel(c, {b: i for i, b in enumerate(B)})
            top = Pk.index[frozenset({rel})]
            factors.append(Pk.interval(Pk.bottom, top))
        prod = product_poset(factors)
        checked += 1
        if not nx.is_isomorphic(P.interval(P.bottom, j).cover_graph(), prod.cover_graph()):
            return False, checked, to_text(a)
    return True, checked, None
