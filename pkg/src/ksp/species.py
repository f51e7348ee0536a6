"""
Set species as explicit enumerators, plus c-monoids, c-modules and c-operads.

Structures are plain hashable values built from labels, ``frozenset`` and
``tuple``, so structural equality is Python equality.  Each species knows how
to enumerate its structures on a label set, relabel them along a bijection
(a dict) and recover the label set of a structure.  Labels are usually small
ints, but operad compositions use blocks (frozensets of labels) as labels.
"""

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ksp.errors import GuardExceeded, PreconditionError, UnknownName
from ksp.symfun import SymFn, partitions, z

ENUM_GUARD = 7


# -- canonical forms ------------------------------------------------------

def struct_key(s):
    """Total order on structures (and labels) used for canonical output."""
    if isinstance(s, frozenset):
        return (1, tuple(sorted(struct_key(y) for y in s)))
    if isinstance(s, tuple):
        return (2, tuple(struct_key(y) for y in s))
    return (0, s)


def canonical_labels(labels):
    return tuple(sorted(labels, key=struct_key))


def to_text(s):
    """Canonical nested-list text: sets in braces (sorted), sequences in brackets."""
    if isinstance(s, frozenset):
        return "{" + ",".join(to_text(y) for y in sorted(s, key=struct_key)) + "}"
    if isinstance(s, tuple):
        return "[" + ",".join(to_text(y) for y in s) + "]"
    return str(s)


def set_partitions(labels):
    """Set partitions of a tuple of labels, as lists of tuples."""
    labels = tuple(labels)
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for k in range(len(rest) + 1):
        for mates in itertools.combinations(rest, k):
            remaining = tuple(x for x in rest if x not in mates)
            for p in set_partitions(remaining):
                yield [(first,) + mates] + p


def ordered_splits(labels, parts):
    """Assignments of labels to ``parts`` ordered (possibly empty) blocks."""
    labels = tuple(labels)
    for assign in itertools.product(range(parts), repeat=len(labels)):
        blocks = [[] for _ in range(parts)]
        for x, i in zip(labels, assign):
            blocks[i].append(x)
        yield [tuple(b) for b in blocks]


def subsets(labels):
    labels = tuple(labels)
    for k in range(len(labels) + 1):
        yield from itertools.combinations(labels, k)


def cycle_type_permutation(lam):
    """A permutation of ``range(|lam|)`` with cycle type ``lam`` (as a dict)."""
    f = {}
    start = 0
    for part in lam:
        for i in range(part):
            f[start + i] = start + (i + 1) % part
        start += part
    return f


# -- species --------------------------------------------------------------

class Species:
    """Base class; subclasses implement ``generate``, ``relabel``, ``labels``."""

    def __init__(self, name):
        self.name = name
        self._cache = {}

    def __repr__(self):
        return "<species %s>" % self.name

    def generate(self, labels):
        raise NotImplementedError

    def relabel(self, s, f):
        raise NotImplementedError

    def labels(self, s):
        raise NotImplementedError

    def weight(self, s):
        return len(self.labels(s))

    def structures(self, labels):
        key = canonical_labels(labels)
        out = self._cache.get(key)
        if out is None:
            out = tuple(self.generate(key))
            self._cache[key] = out
        return out

    def count(self, n):
        return len(self.structures(range(n)))

    def counts(self, n_max):
        return [self.count(n) for n in range(n_max + 1)]


class SetSpecies(Species):
    """Sets whose cardinality satisfies a predicate (``E``, ``E_k``, ``Cosh``...)."""

    def __init__(self, name, sizes=lambda n: True, weight=len):
        super().__init__(name)
        self.sizes = sizes
        self._weight = weight

    def generate(self, labels):
        if self.sizes(len(labels)):
            yield frozenset(labels)

    def relabel(self, s, f):
        return frozenset(f[x] for x in s)

    def labels(self, s):
        return s

    def weight(self, s):
        return self._weight(s)


class LinearOrderSpecies(Species):

    def generate(self, labels):
        yield from itertools.permutations(labels)

    def relabel(self, s, f):
        return tuple(f[x] for x in s)

    def labels(self, s):
        return frozenset(s)


class PointedSetSpecies(Species):
    """``E^\\bullet = X D E``: a nonempty set with a distinguished element."""

    def generate(self, labels):
        for p in labels:
            yield (frozenset(labels), p)

    def relabel(self, s, f):
        return (frozenset(f[x] for x in s[0]), f[s[1]])

    def labels(self, s):
        return s[0]


class FilteredSpecies(Species):
    """Sub-species selected by a predicate on structures, with its own weight."""

    def __init__(self, name, base, keep, weight):
        super().__init__(name)
        self.base = base
        self.keep = keep
        self._weight = weight

    def generate(self, labels):
        return (s for s in self.base.structures(labels) if self.keep(s))

    def relabel(self, s, f):
        return self.base.relabel(s, f)

    def labels(self, s):
        return self.base.labels(s)

    def weight(self, s):
        return self._weight(s)


class SegreSpecies(Species):
    """Tuples ``(m_1..m_r)`` on a decomposition of the labels, all of equal weight."""

    def __init__(self, name, factors):
        super().__init__(name)
        self.factors = tuple(factors)

    def generate(self, labels):
        r = len(self.factors)
        for blocks in ordered_splits(labels, r):
            pools = [M.structures(b) for M, b in zip(self.factors, blocks)]
            for combo in itertools.product(*pools):
                ws = {M.weight(m) for M, m in zip(self.factors, combo)}
                if len(ws) == 1:
                    yield combo

    def relabel(self, s, f):
        return tuple(M.species.relabel(m, f) for M, m in zip(self.factors, s))

    def labels(self, s):
        return frozenset().union(*(M.species.labels(m) for M, m in zip(self.factors, s)))

    def weight(self, s):
        return self.factors[0].weight(s[0])


class SequenceSpecies(Species):
    """``L(M_+)``: sequences of structures on nonempty blocks."""

    def __init__(self, name, base):
        super().__init__(name)
        self.base = base

    def generate(self, labels):
        for part in set_partitions(labels):
            for order in itertools.permutations(part):
                for combo in itertools.product(*(self.base.structures(b) for b in order)):
                    yield combo

    def relabel(self, s, f):
        return tuple(self.base.relabel(m, f) for m in s)

    def labels(self, s):
        return frozenset().union(*(self.base.labels(m) for m in s)) if s else frozenset()

    def weight(self, s):
        return len(s)


class AssemblySpecies(Species):
    """``E(C)``: sets of ``C``-structures on the blocks of a set partition."""

    def __init__(self, name, base):
        super().__init__(name)
        self.base = base

    def generate(self, labels):
        for part in set_partitions(labels):
            for combo in itertools.product(*(self.base.structures(b) for b in part)):
                yield frozenset(combo)

    def relabel(self, a, f):
        return frozenset(self.base.relabel(c, f) for c in a)

    def labels(self, a):
        return frozenset().union(*(self.base.labels(c) for c in a)) if a else frozenset()

    def blocks(self, a):
        return {self.base.labels(c): c for c in a}


class EnrichedTreeSpecies(Species):
    """``A_M``: rooted trees with an ``M``-structure on the set of sons of each vertex.

    A tree is ``(root, m, frozenset(subtrees))`` with ``m`` an ``M``-structure
    on the roots of the subtrees.
    """

    def __init__(self, name, monoid):
        super().__init__(name)
        self.M = monoid
        self._forests = {}

    def forests(self, labels):
        key = canonical_labels(labels)
        out = self._forests.get(key)
        if out is None:
            out = []
            for part in set_partitions(key):
                for combo in itertools.product(*(self.structures(b) for b in part)):
                    out.append(frozenset(combo))
            self._forests[key] = out
        return out

    def generate(self, labels):
        for r in labels:
            rest = tuple(x for x in labels if x != r)
            for forest in self.forests(rest):
                roots = frozenset(t[0] for t in forest)
                for m in self.M.structures(roots):
                    yield (r, m, forest)

    def relabel(self, t, f):
        r, m, kids = t
        return (f[r], self.M.species.relabel(m, f), frozenset(self.relabel(k, f) for k in kids))

    def labels(self, t):
        out = {t[0]}
        for k in t[2]:
            out |= self.labels(k)
        return frozenset(out)

    def weight(self, t):
        return len(self.labels(t)) - 1

    def to_maps(self, t, children=None, enrich=None):
        """Flatten into ``children[v]`` (set of sons) and ``enrich[v]``."""
        if children is None:
            children, enrich = {}, {}
        r, m, kids = t
        children[r] = {k[0] for k in kids}
        enrich[r] = m
        for k in kids:
            self.to_maps(k, children, enrich)
        return children, enrich

    def from_maps(self, root, children, enrich):
        return (
            root,
            enrich[root],
            frozenset(self.from_maps(c, children, enrich) for c in children[root]),
        )


class SmallTreeSpecies(Species):
    """``T_M = X M``: a root with an ``M``-structure on the remaining labels (all leaves)."""

    def __init__(self, name, monoid):
        super().__init__(name)
        self.M = monoid

    def generate(self, labels):
        for p in labels:
            rest = tuple(x for x in labels if x != p)
            for m in self.M.structures(rest):
                yield (p, m)

    def relabel(self, s, f):
        return (f[s[0]], self.M.species.relabel(s[1], f))

    def labels(self, s):
        return frozenset({s[0]}) | self.M.species.labels(s[1])


# -- algebraic structures -------------------------------------------------

class CMonoid:
    """A monoid ``(M, nu)`` in set species, graded, with declared generator cardinality."""

    kind = "monoid"

    def __init__(self, name, species, nu, generator_card=None, weight=None):
        self.name = name
        self.species = species
        self.nu = nu
        self.generator_card = generator_card
        self._weight = weight

    def __repr__(self):
        return "<c-monoid %s>" % self.name

    def structures(self, labels):
        return self.species.structures(labels)

    def weight(self, m):
        if self._weight is not None:
            return self._weight(m)
        return self.species.weight(m)

    def labels(self, m):
        return self.species.labels(m)

    def relabel(self, m, f):
        return self.species.relabel(m, f)

    @property
    def unit(self):
        (e,) = self.species.structures(())
        return e


class CModule:
    """A right ``M``-module ``(N, tau)`` with ``N[empty] = empty``."""

    kind = "module"

    def __init__(self, name, monoid, species, tau, weight=None, generator_card=None):
        self.name = name
        self.monoid = monoid
        self.species = species
        self.tau = tau
        self._weight = weight
        self.generator_card = generator_card

    def __repr__(self):
        return "<c-module %s over %s>" % (self.name, self.monoid.name)

    def structures(self, labels):
        return self.species.structures(labels)

    def weight(self, n):
        if self._weight is not None:
            return self._weight(n)
        return self.species.weight(n)

    def labels(self, n):
        return self.species.labels(n)

    def relabel(self, n, f):
        return self.species.relabel(n, f)


class COperad:
    """A set operad ``(C, eta)`` with ``C[empty] = empty``.

    ``compose(a, c)`` takes an assembly ``a`` (frozenset of ``C``-structures
    on the blocks of a partition) and ``c`` a ``C``-structure whose labels are
    those blocks.
    """

    kind = "operad"

    def __init__(self, name, species, compose, unit, weight=None, generator_card=1):
        self.name = name
        self.species = species
        self.compose = compose
        self.unit = unit
        self._weight = weight
        self.generator_card = generator_card
        self.assemblies = AssemblySpecies("E(%s)" % name, species)

    def __repr__(self):
        return "<c-operad %s>" % self.name

    def structures(self, labels):
        return self.species.structures(labels)

    def labels(self, c):
        return self.species.labels(c)

    def relabel(self, c, f):
        return self.species.relabel(c, f)

    def weight(self, c):
        if self._weight is not None:
            return self._weight(c)
        return len(self.labels(c)) - 1

    def assembly_weight(self, a):
        return sum(self.weight(c) for c in a)

    def partition(self, a):
        return frozenset(self.labels(c) for c in a)

    def compose_hat(self, a1, a2):
        """``hat-eta(a1, a2)``: ``a2`` is an assembly on the blocks of ``a1``."""
        by_block = self.assemblies.blocks(a1)
        out = []
        for c in a2:
            sub = frozenset(by_block[B] for B in self.labels(c))
            out.append(self.compose(sub, c))
        return frozenset(out)


# -- concrete structures --------------------------------------------------

def _union(a, b):
    return a | b


def _set_monoid(name, sizes, weight, card):
    sp = SetSpecies(name, sizes, weight)
    return CMonoid(name, sp, _union, card)


def make_E():
    return _set_monoid("E", lambda n: True, len, 1)


def make_cosh():
    return _set_monoid("Cosh", lambda n: n % 2 == 0, lambda s: len(s) // 2, 2)


def make_L():
    sp = LinearOrderSpecies("L")
    return CMonoid("L", sp, lambda a, b: a + b, 1)


def veronese(M, k, name=None):
    """Weights divisible by ``k``, regraded by ``1/k``."""
    if k < 1:
        raise PreconditionError("Veronese power needs k >= 1")
    name = name or "%s_(%d)" % (M.name, k)
    if k == 1:
        return M
    sp = FilteredSpecies(name, M.species, lambda m: M.weight(m) % k == 0, lambda m: M.weight(m) // k)
    card = M.generator_card * k if M.generator_card else None
    return CMonoid(name, sp, M.nu, card)


def segre(*monoids, name=None):
    """Weight-diagonal product of graded monoids, componentwise multiplication."""
    name = name or "segre".join(M.name for M in monoids)
    sp = SegreSpecies(name, monoids)

    def nu(a, b):
        return tuple(M.nu(x, y) for M, x, y in zip(monoids, a, b))

    cards = [M.generator_card for M in monoids]
    card = sum(cards) if all(cards) else None
    return CMonoid(name, sp, nu, card)


def sequence_monoid(M, name=None):
    """``L(M_+)`` with concatenation."""
    name = name or "L(%s+)" % M.name
    plus = FilteredSpecies(M.name + "+", M.species, lambda m: len(M.labels(m)) > 0, M.weight)
    sp = SequenceSpecies(name, plus)
    return CMonoid(name, sp, lambda a, b: a + b, None)


def make_sinh(cosh):
    sp = SetSpecies("Sinh", lambda n: n % 2 == 1, lambda s: (len(s) - 1) // 2)
    return CModule("Sinh", cosh, sp, _union, generator_card=1)


def truncate_module(M, l, name=None):
    """``M^{[l]}``: structures of weight ``>= l`` as an ``M``-module, regraded by ``-l``."""
    if l < 1:
        raise PreconditionError("truncation needs l >= 1")
    name = name or "%s^[%d]" % (M.name, l)
    sp = FilteredSpecies(name, M.species, lambda m: M.weight(m) >= l, lambda m: M.weight(m) - l)
    card = M.generator_card * l if M.generator_card else None
    return CModule(name, M, sp, M.nu, generator_card=card)


def make_com():
    sp = SetSpecies("E+", lambda n: n >= 1, lambda s: len(s) - 1)

    def compose(a, c):
        return frozenset().union(*a)

    return COperad("Com", sp, compose, lambda x: frozenset({x}))


def make_pointed():
    sp = PointedSetSpecies("E.")

    def compose(a, c):
        by_block = {s[0]: s for s in a}
        whole = frozenset().union(*(s[0] for s in a))
        return (whole, by_block[c[1]][1])

    return COperad("pointed", sp, compose, lambda x: (frozenset({x}), x))


def make_enriched_trees(M, name=None):
    """The c-operad ``A_M``: graft roots along the edges of a tree of blocks."""
    name = name or "A_%s" % M.name
    sp = EnrichedTreeSpecies(name, M)

    def compose(a, c):
        children, enrich = {}, {}
        root_of = {}
        for t in a:
            sp.to_maps(t, children, enrich)
            root_of[sp.labels(t)] = t[0]
        outer_children, outer_enrich = sp.to_maps(c)
        for B, kids in outer_children.items():
            r = root_of[B]
            moved = M.relabel(outer_enrich[B], root_of)
            enrich[r] = M.nu(enrich[r], moved)
            children[r] = children[r] | {root_of[K] for K in kids}
        return sp.from_maps(root_of[c[0]], children, enrich)

    def weight(t):
        return M.weight(t[1]) + sum(weight(k) for k in t[2])

    return COperad(name, sp, compose, lambda x: (x, M.unit, frozenset()), weight=weight,
                   generator_card=M.generator_card)


class SmallTrees:
    """``T_M = XM`` with its partial composition.

    Grafting at the root merges fibers through ``nu``; grafting at a leaf gives
    no structure (``None``), so ``eta`` is partial and no poset is built.
    """

    kind = "species"

    def __init__(self, M, name=None):
        self.name = name or "T_%s" % M.name
        self.M = M
        self.species = SmallTreeSpecies(self.name, M)

    def structures(self, labels):
        return self.species.structures(labels)

    def partial_compose(self, s1, s2, ghost):
        """Graft ``s1`` at the ghost label of ``s2``."""
        p2, m2 = s2
        if p2 != ghost:
            return None
        p1, m1 = s1
        return (p1, self.M.nu(m1, m2))


# -- registry -------------------------------------------------------------

_REGISTRY = {}


def _named(name, factory):
    if name not in _REGISTRY:
        _REGISTRY[name] = factory()
    return _REGISTRY[name]


ALIASES = {
    "Com": "E+",
    "E₊": "E+",
    "E•": "pointed",
    "E.": "pointed",
    "Ep": "pointed",
    "E∘E": "EsegreE",
    "E°E": "EsegreE",
}


def builtin(name):
    """Look up a registered species, monoid, module or operad by name."""
    name = ALIASES.get(name, name)
    if name == "X":
        return _named(name, lambda: SetSpecies("X", lambda n: n == 1))
    if name == "E":
        return _named(name, make_E)
    if name == "Cosh":
        return _named(name, make_cosh)
    if name == "Sinh":
        return _named(name, lambda: make_sinh(builtin("Cosh")))
    if name == "L":
        return _named(name, make_L)
    if name == "E+":
        return _named(name, make_com)
    if name == "pointed":
        return _named(name, make_pointed)
    if name == "A":
        return builtin("A_E")
    if name == "EsegreE":
        return _named(name, lambda: segre(builtin("E"), builtin("E"), name="EsegreE"))
    m = re.fullmatch(r"E_(\d+)", name)
    if m:
        k = int(m.group(1))
        return _named(name, lambda: SetSpecies(name, lambda n: n == k))
    m = re.fullmatch(r"E_\((\d+)\)", name)
    if m:
        k = int(m.group(1))
        return _named(name, lambda: veronese(builtin("E"), k, name=name))
    m = re.fullmatch(r"E_\{(\d+)\+\}", name)
    if m:
        j = int(m.group(1))
        return _named(name, lambda: truncate_module(builtin("E"), j, name=name))
    m = re.fullmatch(r"Lib_\((\d+),(\d+)\)", name)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if k < 1 or n < 1:
            raise UnknownName(name)
        base = builtin("E_(%d)" % k)
        return _named(name, lambda: segre(*([base] * n), name=name))
    m = re.fullmatch(r"L\((.+)\+\)", name)
    if m:
        inner = builtin(m.group(1))
        _require_monoid(inner, name)
        return _named(name, lambda: sequence_monoid(inner, name=name))
    m = re.fullmatch(r"A_(.+)", name)
    if m:
        inner = builtin(_unwrap(m.group(1)))
        _require_monoid(inner, name)
        return _named(name, lambda: make_enriched_trees(inner, name=name))
    m = re.fullmatch(r"T_(.+)", name)
    if m:
        inner = builtin(_unwrap(m.group(1)))
        _require_monoid(inner, name)
        return _named(name, lambda: SmallTrees(inner, name=name))
    raise UnknownName("unknown species %r" % (name,))


def _unwrap(s):
    if s.startswith("(") and s.endswith(")"):
        return s[1:-1]
    return s


def _require_monoid(x, name):
    if not isinstance(x, CMonoid):
        raise UnknownName("%r needs a registered c-monoid" % (name,))


REGISTERED_MONOIDS = ("E", "Cosh", "L", "EsegreE", "E_(3)", "Lib_(1,3)", "Lib_(2,2)")
REGISTERED_MODULES = ("Sinh", "E_{1+}", "E_{2+}", "E_{3+}")
REGISTERED_OPERADS = ("E+", "pointed", "A", "A_Cosh", "A_L")


def species_of(x):
    return x if isinstance(x, Species) else x.species


# -- cycle index ----------------------------------------------------------

def cycle_index(s, n_max, select=None):
    """``Z_F = sum |Fix F[sigma_alpha]| p_alpha / z_alpha`` by enumeration.

    ``select`` restricts to structures satisfying a predicate (used for the
    weight-graded pieces of a monoid).
    """
    if n_max > ENUM_GUARD:
        raise GuardExceeded("cycle index beyond n = %d" % ENUM_GUARD)
    sp = species_of(s)
    out = {}
    for n in range(n_max + 1):
        structs = [t for t in sp.structures(range(n)) if select is None or select(t)]
        for lam in partitions(n):
            sigma = cycle_type_permutation(lam)
            fixed = sum(1 for t in structs if sp.relabel(t, sigma) == t)
            if fixed:
                out[lam] = Fraction(fixed, z(lam))
    return SymFn(out, n_max)


# -- axiom checks ---------------------------------------------------------

@dataclass
class AxiomResult:
    passed: bool
    checked: int = 0
    witness: object = None


@dataclass
class AxiomReport:
    name: str
    n_max: int
    results: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.results.values())

    def record(self, axiom, ok, witness=None):
        r = self.results.setdefault(axiom, AxiomResult(True))
        r.checked += 1
        if not ok and r.passed:
            r.passed = False
            r.witness = witness

    def failures(self):
        return {k: r.witness for k, r in self.results.items() if not r.passed}

    def to_json(self):
        return {
            "name": self.name,
            "n_max": self.n_max,
            "passed": self.passed,
            "axioms": {
                k: {"passed": r.passed, "checked": r.checked, "witness": r.witness}
                for k, r in sorted(self.results.items())
            },
        }


def _w(*items):
    return [to_text(i) for i in items]


def check_axioms(x, n_max, guard=ENUM_GUARD):
    """Exhaustive check of the structure laws on label sets of size ``<= n_max``."""
    if n_max > guard:
        raise GuardExceeded("axiom check beyond n = %d" % guard)
    if isinstance(x, CMonoid):
        return _check_monoid(x, n_max)
    if isinstance(x, CModule):
        return _check_module(x, n_max)
    if isinstance(x, COperad):
        return _check_operad(x, n_max)
    raise PreconditionError("no axioms for %r" % (x,))


def _check_monoid(M, n_max):
    rep = AxiomReport(M.name, n_max)
    e = M.unit
    for n in range(n_max + 1):
        U = tuple(range(n))
        full = set(M.structures(U))
        for m in full:
            rep.record("unit", M.nu(e, m) == m and M.nu(m, e) == m, _w(m))
            if M.generator_card:
                rep.record("quadratic-grading", M.weight(m) * M.generator_card == n, _w(m))
        for U1, U2 in ordered_splits(U, 2):
            for a in M.structures(U1):
                seen = {}
                for b in M.structures(U2):
                    ab = M.nu(a, b)
                    rep.record("closure", ab in full, _w(a, b))
                    rep.record("grading", M.weight(ab) == M.weight(a) + M.weight(b), _w(a, b))
                    rep.record("left-cancellation", ab not in seen, _w(a, seen.get(ab), b))
                    seen[ab] = b
        for U1, U2, U3 in ordered_splits(U, 3):
            for a in M.structures(U1):
                for b in M.structures(U2):
                    ab = M.nu(a, b)
                    for c in M.structures(U3):
                        rep.record("associativity", M.nu(ab, c) == M.nu(a, M.nu(b, c)), _w(a, b, c))
    return rep


def _check_module(N, n_max):
    M = N.monoid
    rep = AxiomReport(N.name, n_max)
    e = M.unit
    rep.record("empty", len(N.structures(())) == 0, [])
    for n in range(n_max + 1):
        U = tuple(range(n))
        full = set(N.structures(U))
        for x in full:
            rep.record("identity", N.tau(x, e) == x, _w(x))
        for U1, U2 in ordered_splits(U, 2):
            for a in N.structures(U1):
                seen = {}
                for b in M.structures(U2):
                    ab = N.tau(a, b)
                    rep.record("closure", ab in full, _w(a, b))
                    rep.record("grading", N.weight(ab) == N.weight(a) + M.weight(b), _w(a, b))
                    rep.record("left-cancellation", ab not in seen, _w(a, seen.get(ab), b))
                    seen[ab] = b
        for U1, U2, U3 in ordered_splits(U, 3):
            for a in N.structures(U1):
                for b in M.structures(U2):
                    ab = N.tau(a, b)
                    for c in M.structures(U3):
                        rep.record("pseudoassociativity", N.tau(ab, c) == N.tau(a, M.nu(b, c)), _w(a, b, c))
    return rep


def _check_operad(C, n_max):
    rep = AxiomReport(C.name, n_max)
    rep.record("empty", len(C.structures(())) == 0, [])
    for n in range(1, n_max + 1):
        U = tuple(range(n))
        full = set(C.structures(U))
        if n == 1:
            rep.record("singleton", full == {C.unit(0)}, _w(*full))
        whole = frozenset(U)
        for c in full:
            if C.generator_card:
                rep.record("quadratic-grading", C.weight(c) * C.generator_card == n - 1, _w(c))
            singles = frozenset(C.unit(u) for u in U)
            lifted = C.relabel(c, {u: frozenset({u}) for u in U})
            rep.record("unit", C.compose(singles, lifted) == c, _w(c))
            rep.record("unit", C.compose(frozenset({c}), C.unit(whole)) == c, _w(c))
        for a1 in C.assemblies.structures(U):
            pi = C.partition(a1)
            seen = {}
            for c in C.structures(pi):
                r = C.compose(a1, c)
                rep.record("closure", r in full, _w(a1, c))
                rep.record("left-cancellation", r not in seen, _w(a1, seen.get(r), c))
                seen[r] = c
            for a2 in C.assemblies.structures(pi):
                a12 = C.compose_hat(a1, a2)
                rep.record(
                    "grading",
                    C.assembly_weight(a12) == C.assembly_weight(a1) + C.assembly_weight(a2),
                    _w(a1, a2),
                )
                pi2 = C.partition(a2)
                merge = {Bp: frozenset().union(*Bp) for Bp in pi2}
                for c in C.structures(pi2):
                    lhs = C.compose(a1, C.compose(a2, c))
                    rhs = C.compose(a12, C.relabel(c, merge))
                    rep.record("associativity", lhs == rhs, _w(a1, a2, c))
    return rep


def check_functoriality(s, n_max):
    """``relabel`` is a functor and ``structures`` commutes with it; no duplicates."""
    sp = species_of(s)
    rep = AxiomReport(sp.name, n_max)
    for n in range(n_max + 1):
        U = tuple(range(n))
        structs = sp.structures(U)
        rep.record("no-duplicates", len(set(structs)) == len(structs), [n])
        perms = list(itertools.permutations(U))
        sample = perms[:: max(1, len(perms) // 12)]
        for p in sample:
            f = dict(zip(U, p))
            image = {sp.relabel(t, f) for t in structs}
            rep.record("equivariance", image == set(structs), [n, list(p)])
            for q in sample[:4]:
                g = dict(zip(U, q))
                gf = {u: g[f[u]] for u in U}
                for t in structs[:50]:
                    rep.record("composition", sp.relabel(t, gf) == sp.relabel(sp.relabel(t, f), g), _w(t))
        # arbitrary label sets are handled through the canonical order
        shifted = tuple(10 + 3 * u for u in U)
        f = dict(zip(U, shifted))
        rep.record(
            "label-independence",
            {sp.relabel(t, f) for t in structs} == set(sp.structures(shifted)),
            [n],
        )
    return rep
