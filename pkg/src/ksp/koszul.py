"""
Bar complexes of quadratic c-monoids read off as poset chains, Koszul dual
dimensions, and desk-scale Koszulness verdicts.

Dual dimensions are computed three independent ways and compared exactly:
signed Möbius sums on the induced posets, top homology of the order complex,
and inversion of the graded generating series built from structure counts.
"""

from dataclasses import dataclass, field
from math import comb

from ksp.errors import AxiomFailure, GuardExceeded, NotQuadratic, PreconditionError
from ksp.poset import (
    ChainComplex,
    build_module_poset,
    build_monoid_poset,
    build_operad_poset,
    cohen_macaulay_check,
    mobius_inverse_series,
    mobius_row,
    order_complex,
)
from ksp.series import (
    Egf,
    GradedEgf,
    egf_comp_inverse,
    egf_div,
    egf_mul_inverse,
    egf_solve_tree_fixed_point,
    graded_div,
    graded_mul_inverse,
)
from ksp.species import (
    ENUM_GUARD,
    CModule,
    CMonoid,
    COperad,
    EnrichedTreeSpecies,
    check_axioms,
    cycle_index,
    ordered_splits,
    to_text,
)
from ksp.symfun import sf_mul, sf_mul_inverse, sf_plethystic_inverse, sf_to_schur

_AXIOMS = {}


def _axioms_ok(x, n):
    key = (id(x), n)
    if key not in _AXIOMS:
        _AXIOMS[key] = check_axioms(x, n)
    return _AXIOMS[key]


def _require_axioms(x, n):
    rep = _axioms_ok(x, min(n, 5))
    if not rep.passed:
        raise AxiomFailure("%s fails %s" % (x.name, sorted(rep.failures())))


def require_quadratic(x):
    """Refuse structures without a declared, consistent generator cardinality."""
    if not x.generator_card:
        raise NotQuadratic("%s has no declared generator cardinality" % x.name)
    if isinstance(x, CMonoid):
        ok = lambda n, s: x.weight(s) * x.generator_card == n
    elif isinstance(x, COperad):
        ok = lambda n, s: x.weight(s) * x.generator_card == n - 1
    else:
        c = x.monoid.generator_card
        if not c:
            raise NotQuadratic("base monoid %s is not quadratic" % x.monoid.name)
        ok = lambda n, s: x.generator_card + x.weight(s) * c == n
    for n in range(6):
        for s in x.structures(range(n)):
            if not ok(n, s):
                raise NotQuadratic("%s: structure %s on %d labels has weight %d" % (x.name, to_text(s), n, x.weight(s)))


# -- bar complex ----------------------------------------------------------

@dataclass
class BarComplexView:
    name: str
    n: int
    k: int
    complex: ChainComplex
    factorizations: dict
    chains: dict
    alpha_bijective: bool
    homology: list

    def to_json(self):
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "factorizations": {str(r): c for r, c in sorted(self.factorizations.items())},
            "chains": {str(r): c for r, c in sorted(self.chains.items())},
            "alpha_bijective": self.alpha_bijective,
            "homology": self.homology,
        }


def factorizations(M, n, k):
    """Sequences ``(m_1, ..., m_r)`` of nonempty factors whose product has weight ``k``."""
    U = tuple(range(n))
    out = []
    if n == 0:
        return [()] if k == 0 else []
    for r in range(1, n + 1):
        for blocks in ordered_splits(U, r):
            if any(not b for b in blocks):
                continue
            pools = [M.structures(b) for b in blocks]
            stack = [((), None, 0)]
            for pool in pools:
                nxt = []
                for seq, prod, w in stack:
                    for m in pool:
                        nxt.append((seq + (m,), m if prod is None else M.nu(prod, m), w + M.weight(m)))
                stack = nxt
            out.extend(seq for seq, _, w in stack if w == k)
    return out


def bar_complex(M, n, k):
    """The chain complex of ``P_M^k[n]`` with the factorization dictionary ``alpha``.

    ``alpha(m_1 | ... | m_r) = (0 < m_1 < m_1 m_2 < ... < m_1 ... m_r)``.
    """
    if not isinstance(M, CMonoid):
        raise PreconditionError("bar complex needs a c-monoid")
    _require_axioms(M, n)
    P = build_monoid_poset(M, n, weight=k)
    C = order_complex(P) if P.tops else ChainComplex({})
    facts = factorizations(M, n, k)
    images = set()
    fcount = {}
    for seq in facts:
        chain = [P.bottom]
        prod = M.unit
        for m in seq:
            prod = M.nu(prod, m)
            chain.append(P.index[prod])
        images.add(tuple(chain))
        fcount[len(seq)] = fcount.get(len(seq), 0) + 1
    all_chains = {c for cs in C.chains.values() for c in cs}
    ccount = {l: len(cs) for l, cs in C.chains.items()}
    bij = images == all_chains and len(images) == len(facts)
    return BarComplexView(M.name, n, k, C, fcount, ccount, bij, C.homology())


# -- dual dimensions ------------------------------------------------------

def graded_series(x, n_max):
    """``sum |X^k[n]| t^k x^n / n!`` from enumeration."""
    counts = {}
    for n in range(n_max + 1):
        for s in x.structures(range(n)):
            key = (n, x.weight(s))
            counts[key] = counts.get(key, 0) + 1
    return GradedEgf(counts, n_max)


def counting_series(x, n_max):
    return Egf([len(x.structures(range(n))) for n in range(n_max + 1)], n_max)


@dataclass
class DualTable:
    name: str
    kind: str
    n_max: int
    # (n, k) -> value; three independent computations
    mobius: dict = field(default_factory=dict)
    homology: dict = field(default_factory=dict)
    series: dict = field(default_factory=dict)
    concentrated: bool = True

    @property
    def agree(self):
        keys = set(self.mobius) | set(self.homology) | {k for k, v in self.series.items() if v}
        return all(
            self.mobius.get(key, 0) == self.homology.get(key, 0) == self.series.get(key, 0) for key in keys
        )

    def rows(self):
        keys = sorted(set(self.mobius) | set(self.homology) | {k for k, v in self.series.items() if v})
        return [
            {"n": n, "k": k, "mobius": self.mobius.get((n, k), 0), "homology": self.homology.get((n, k), 0),
             "series": self.series.get((n, k), 0)}
            for n, k in keys
        ]

    def to_json(self):
        return {"name": self.name, "kind": self.kind, "n_max": self.n_max, "agree": self.agree,
                "concentrated": self.concentrated, "rows": self.rows()}


def _top_homology(P, top_degree, table, key):
    hom = order_complex(P).homology() if P.tops else []
    ok = all(h == 0 for l, h in enumerate(hom) if l != top_degree)
    table[key] = hom[top_degree] if top_degree < len(hom) else 0
    return ok


def dual_dimensions(x, n_max, guard=ENUM_GUARD, force=False):
    """``dim (X^{dual})^k[n]`` via Möbius sums, top homology and series inversion."""
    if n_max > guard and not force:
        raise GuardExceeded("n_max = %d exceeds the enumeration guard %d" % (n_max, guard))
    if isinstance(x, CMonoid):
        return _dual_monoid(x, n_max)
    if isinstance(x, CModule):
        return _dual_module(x, n_max)
    if isinstance(x, COperad):
        return _dual_operad(x, n_max)
    raise PreconditionError("no dual for %r" % (x,))


def _dual_monoid(M, n_max):
    T = DualTable(M.name, "monoid", n_max)
    inv = graded_mul_inverse(graded_series(M, n_max).sign_twist())
    T.series = {nk: c for nk, c in inv.coeffs.items()}
    for n in range(n_max + 1):
        weights = sorted({M.weight(m) for m in M.structures(range(n))})
        for k in weights:
            P = build_monoid_poset(M, n, weight=k)
            row = mobius_row(P, P.bottom)
            T.mobius[(n, k)] = (-1) ** k * sum(row[t] for t in P.tops)
            T.concentrated &= _top_homology(P, k, T.homology, (n, k))
    return T


def _dual_module(N, n_max):
    T = DualTable(N.name, "module", n_max)
    quot = graded_div(graded_series(N, n_max).sign_twist(), graded_series(N.monoid, n_max).sign_twist())
    T.series = {nk: c for nk, c in quot.coeffs.items()}
    for n in range(n_max + 1):
        weights = sorted({N.weight(s) for s in N.structures(range(n))})
        for k in weights:
            P = build_module_poset(N, n, weight=k)
            row = mobius_row(P, P.bottom)
            # the adjoined bottom adds one to every rank
            T.mobius[(n, k)] = (-1) ** (k + 1) * sum(row[t] for t in P.tops)
            T.concentrated &= _top_homology(P, k + 1, T.homology, (n, k))
    return T


def operad_series(C, n_max):
    """``C(x)``; for enriched trees this comes from the fixed point, not enumeration."""
    if isinstance(C.species, EnrichedTreeSpecies):
        return egf_solve_tree_fixed_point(counting_series(C.species.M, n_max), "rooted")
    return counting_series(C, n_max)


def _dual_operad(C, n_max):
    T = DualTable(C.name, "operad", n_max)
    inv = egf_comp_inverse(operad_series(C, n_max))
    T.series = {}
    for n in range(1, n_max + 1):
        weights = sorted({C.weight(c) for c in C.structures(range(n))})
        if len(weights) > 1:
            raise NotQuadratic("%s is not concentrated in one weight on %d labels" % (C.name, n))
        if not weights:
            if inv.coeffs[n]:
                T.series[(n, -1)] = inv.coeffs[n]
            continue
        k = weights[0]
        T.series[(n, k)] = (-1) ** k * inv.coeffs[n]
        P = build_operad_poset(C, n)
        row = mobius_row(P, P.bottom)
        T.mobius[(n, k)] = (-1) ** k * sum(row[t] for t in P.tops)
        T.concentrated &= _top_homology(P, k, T.homology, (n, k))
    return T


# -- Schur pre-filter -----------------------------------------------------

def dual_character(x, n_max):
    """Sign-corrected character of the dual, by degree: ``{n: SymFn}``."""
    if isinstance(x, COperad):
        inv = sf_plethystic_inverse(cycle_index(x, n_max))
        c = x.generator_card
        return {n: inv.degree_part(n) * (-1) ** ((n - 1) // c) for n in range(1, n_max + 1)}
    # the weight-graded character with t -> -t, then set t = 1
    if isinstance(x, CMonoid):
        M, base = x, None
    else:
        M, base = x.monoid, x
    twisted = 0
    for k in range(n_max + 1):
        twisted = twisted + cycle_index(M, n_max, select=lambda m, k=k: M.weight(m) == k) * (-1) ** k
    out = sf_mul_inverse(twisted)
    if base is not None:
        num = 0
        for k in range(n_max + 1):
            num = num + cycle_index(base, n_max, select=lambda s, k=k: base.weight(s) == k) * (-1) ** k
        out = sf_mul(num, out)
    # inverting M(x, -t) at t = 1 already yields the dual with positive signs
    return {n: out.degree_part(n) for n in range(n_max + 1)}


def schur_prefilter(x, n_max):
    """Necessary condition: the dual character is Schur-positive.  Returns the negatives."""
    negatives = []
    for n, f in dual_character(x, n_max).items():
        for lam, v in sorted(sf_to_schur(f).items()):
            if v < 0 or v.denominator != 1:
                negatives.append({"n": n, "partition": list(lam), "coefficient": str(v)})
    return negatives


# -- verdicts -------------------------------------------------------------

@dataclass
class KoszulVerdict:
    name: str
    kind: str
    n_max: int
    passed: bool
    scale: str
    profiles: dict = field(default_factory=dict)
    schur_negatives: list = field(default_factory=list)
    dual: DualTable = None
    witnesses: list = field(default_factory=list)

    def to_json(self):
        return {
            "name": self.name,
            "kind": self.kind,
            "n_max": self.n_max,
            "passed": self.passed,
            "scale": self.scale,
            "profiles": {str(n): p for n, p in sorted(self.profiles.items())},
            "schur_negatives": self.schur_negatives,
            "dual": self.dual.to_json() if self.dual else None,
            "witnesses": self.witnesses,
        }


def koszul_check(x, n_max, schur_max=4, guard=ENUM_GUARD, force=False):
    """Cohen-Macaulay check of every induced poset up to ``n_max`` plus three-way agreement."""
    require_quadratic(x)
    if n_max > guard and not force:
        raise GuardExceeded("n_max = %d exceeds the enumeration guard %d" % (n_max, guard))
    _require_axioms(x, n_max)
    kind = x.kind
    v = KoszulVerdict(x.name, kind, n_max, True, "")
    v.schur_negatives = schur_prefilter(x, min(schur_max, n_max))
    if v.schur_negatives:
        v.passed = False
        v.witnesses.append({"reason": "schur-negative", "data": v.schur_negatives[0]})
    for n in range(n_max + 1):
        if kind == "monoid":
            P = build_monoid_poset(x, n)
        elif kind == "module":
            P = build_module_poset(x, n)
        else:
            if n == 0:
                continue
            P = build_operad_poset(x, n)
        if not P.tops:
            continue
        cert = cohen_macaulay_check(P)
        v.profiles[n] = cert.to_json()
        if not cert.passed:
            v.passed = False
            v.witnesses.append({"n": n, **cert.witness})
    v.dual = dual_dimensions(x, n_max, guard=guard, force=force)
    if not (v.dual.agree and v.dual.concentrated):
        v.passed = False
        v.witnesses.append({"reason": "three-way-disagreement", "rows": v.dual.rows()})
    v.scale = ("Koszul at scale n <= %d" if v.passed else "not Koszul at scale n <= %d") % n_max
    return v


@dataclass
class SeriesIdentityReport:
    name: str
    n_max: int
    poset_series: Egf
    inverse_series: Egf
    equal: list

    @property
    def passed(self):
        return all(self.equal)

    def to_json(self):
        return {
            "name": self.name,
            "n_max": self.n_max,
            "poset": self.poset_series.to_json(),
            "inverse": self.inverse_series.to_json(),
            "equal": self.equal,
            "passed": self.passed,
        }


def dual_series_identities(x, n_max, guard=ENUM_GUARD, force=False):
    """Möbius series of the induced posets against the series-level inverse."""
    mob = mobius_inverse_series(x, n_max, guard=guard, force=force).egf
    if isinstance(x, CMonoid):
        inv = egf_mul_inverse(counting_series(x, n_max))
    elif isinstance(x, CModule):
        inv = -egf_div(counting_series(x, n_max), counting_series(x.monoid, n_max))
    else:
        inv = egf_comp_inverse(operad_series(x, n_max))
    eq = [a == b for a, b in zip(mob.coeffs, inv.coeffs)]
    return SeriesIdentityReport(x.name, n_max, mob, inv, eq)


def check_character_identity(M, n_max):
    """Fixed-subposet character of the Möbius species against ``(Ch M)^{-1}``."""
    rep = mobius_inverse_series(M, n_max, char_max=n_max)
    if isinstance(M, COperad):
        expected = sf_plethystic_inverse(cycle_index(M, n_max))
    else:
        expected = sf_mul_inverse(cycle_index(M, n_max))
    return rep.character == expected, rep.character, expected


def hook_dimension(j, k):
    """``C(j + k - 1, k)``: dimension of the hook Specht module dual to ``E_{j+}``."""
    return comb(j + k - 1, k)
