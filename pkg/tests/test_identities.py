import json

import pytest

from ksp.errors import UnknownName
from ksp.identities import (
    IDENTITIES,
    alternating_permutations,
    binary_trees,
    carlitz_pairs,
    hook_length_dimension,
    mobius_recursion_partition_lattice,
    rooted_trees,
    run_all,
    run_identity,
    schroeder_trees,
    set_partition_count,
)


def test_oracles():
    assert [alternating_permutations(n) for n in range(10)] == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
    assert [carlitz_pairs(k) for k in range(5)] == [1, 1, 3, 19, 211]
    assert [rooted_trees(n) for n in range(1, 6)] == [1, 2, 9, 64, 625]
    assert [set_partition_count(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert schroeder_trees(10) == 103049
    assert [binary_trees(n) for n in range(1, 6)] == [1, 1, 2, 5, 14]
    assert hook_length_dimension((3, 1, 1)) == 6
    assert [mobius_recursion_partition_lattice(n) for n in range(1, 6)] == [1, -1, 2, -6, 24]


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_identity_passes(name):
    r = run_identity(name)
    assert r.passed, (r.lhs, r.rhs)
    json.dumps(r.to_json())


def test_small_truncation():
    assert run_identity("bessel-carlitz", trunc=4).passed
    assert run_identity("euler-sec", trunc=4).passed


def test_unknown():
    with pytest.raises(UnknownName):
        run_identity("nope")


def test_run_all_sorted():
    names = [r.name for r in run_all(n_max=4)]
    assert names == sorted(IDENTITIES)
