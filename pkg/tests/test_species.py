from math import comb, factorial

import pytest

from ksp.errors import GuardExceeded, PreconditionError, UnknownName
from ksp.identities import rooted_trees, set_partition_count
from ksp.species import (
    REGISTERED_MODULES,
    REGISTERED_MONOIDS,
    REGISTERED_OPERADS,
    CModule,
    CMonoid,
    COperad,
    LinearOrderSpecies,
    SmallTrees,
    builtin,
    check_axioms,
    check_functoriality,
    cycle_index,
    make_cosh,
    make_L,
    set_partitions,
    struct_key,
    to_text,
    veronese,
)
from ksp.symfun import sf_e, sf_h, sf_sum


def fubini(n):
    # ordered set partitions: sum over j of surjections onto j blocks
    return sum(sum((-1) ** (j - i) * comb(j, i) * i ** n for i in range(j + 1)) for j in range(n + 1))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_counts():
    assert builtin("E").species.counts(5) == [1] * 6
    assert builtin("Cosh").species.counts(6) == [1, 0, 1, 0, 1, 0, 1]
    assert builtin("L").species.counts(5) == [factorial(n) for n in range(6)]
    assert builtin("pointed").species.counts(5) == list(range(6))
    assert builtin("A").species.counts(6) == [rooted_trees(n) for n in range(7)]
    assert builtin("EsegreE").species.counts(8) == [comb(n, n // 2) if n % 2 == 0 else 0 for n in range(9)]
    assert builtin("L(E+)").species.counts(5) == [fubini(n) for n in range(6)]
    assert builtin("A_L").species.counts(5) == [0] + [factorial(n) * catalan(n - 1) for n in range(1, 6)]
    assert builtin("Lib_(1,3)").species.count(3) == 6
    assert len(list(set_partitions(range(5)))) == set_partition_count(5)


def test_registry_names():
    assert builtin("E+") is builtin("Com")
    assert builtin("E_(2)").species.counts(4) == [1, 0, 1, 0, 1]
    assert builtin("A_(E)").species.counts(4) == builtin("A").species.counts(4)
    with pytest.raises(UnknownName):
        builtin("Nope")
    for name in REGISTERED_MONOIDS:
        assert isinstance(builtin(name), CMonoid)
    for name in REGISTERED_MODULES:
        assert isinstance(builtin(name), CModule)
    for name in REGISTERED_OPERADS:
        assert isinstance(builtin(name), COperad)


def test_text_forms():
    assert to_text(frozenset({2, 0, 1})) == "{0,1,2}"
    assert to_text((2, 0)) == "[2,0]"
    items = [frozenset({1}), frozenset({0, 1}), frozenset(), (1, 0), (0, 1)]
    assert sorted(items, key=struct_key) == sorted(reversed(items), key=struct_key)


def test_cosh_weights_and_veronese():
    C = make_cosh()
    assert [C.weight(s) for s in C.structures(range(4))] == [2]
    with pytest.raises(PreconditionError):
        veronese(C, 0)


def test_cycle_index_of_E():
    E = builtin("E")
    want = sf_sum([sf_h(i, 4) for i in range(5)], 4)
    assert cycle_index(E, 4) == want
    # Cosh graded part k is h_{2k}
    C = builtin("Cosh")
    assert cycle_index(C, 4, select=lambda m: C.weight(m) == 1) == sf_h(2, 4)


def test_cycle_index_of_sign_free_species():
    # the exterior character appears only after sign twist; E itself has none
    E = builtin("E")
    assert cycle_index(E, 3) != sf_sum([sf_e(i, 3) for i in range(4)], 3)


@pytest.mark.parametrize("name", REGISTERED_MONOIDS + REGISTERED_MODULES + REGISTERED_OPERADS)
def test_registered_axioms_pass(name):
    x = builtin(name)
    n = 4 if isinstance(x, COperad) else 5
    rep = check_axioms(x, n)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("name", ["E", "Cosh", "L", "pointed", "A", "EsegreE", "L(E+)", "Sinh", "E+"])
def test_functoriality(name):
    rep = check_functoriality(builtin(name), 4)
    assert rep.passed, rep.failures()


def test_axiom_guard():
    with pytest.raises(GuardExceeded):
        check_axioms(builtin("E"), 20)


# -- negative controls ----------------------------------------------------

def test_swapped_L_fails_associativity():
    swap = {(0, 1): (1, 0), (1, 0): (0, 1)}

    def nu(a, b):
        c = a + b
        return swap.get(c, c)

    bad = CMonoid("L-swapped", LinearOrderSpecies("L"), nu, 1)
    rep = check_axioms(bad, 3)
    fails = rep.failures()
    assert not rep.passed
    assert "associativity" in fails
    assert fails["associativity"] is not None
    # the witness is a triple of concrete structures
    assert len(fails["associativity"]) >= 3


def test_non_cancellative_monoid_fails():
    L = make_L()

    def nu(a, b):
        # forget the order of the right factor
        return a + tuple(sorted(b))

    bad = CMonoid("L-sorted", L.species, nu, 1)
    rep = check_axioms(bad, 3)
    assert "left-cancellation" in rep.failures()


def test_module_mutation_fails_closure():
    S = builtin("Sinh")
    bad = CModule("Sinh-bad", S.monoid, S.species, lambda n, m: n, generator_card=1)
    rep = check_axioms(bad, 4)
    assert not rep.passed
    assert rep.failures()


def test_operad_mutation_fails_unit():
    P = builtin("pointed")

    def compose(a, c):
        whole = frozenset().union(*(s[0] for s in a))
        return (whole, min(whole))

    bad = COperad("pointed-min", P.species, compose, P.unit)
    rep = check_axioms(bad, 3)
    assert not rep.passed
    assert any(w is not None for w in rep.failures().values())


def test_report_json():
    rep = check_axioms(builtin("E"), 3)
    obj = rep.to_json()
    assert obj["passed"] and set(obj["axioms"]) >= {"associativity", "unit"}


def test_small_trees_partial_composition():
    T = SmallTrees(builtin("E"))
    assert T.structures((0, 1, 2))
