# %% [markdown]
# # Induced posets, Möbius functions and homology
#
# A monoid orders the structures on subsets of U by left division; an
# operad orders assemblies by coarsening.  The Möbius function from the
# bottom to the tops gives signed counts.

# %%
from ksp.poset import (
    Poset,
    build_monoid_poset,
    build_operad_poset,
    cohen_macaulay_check,
    mobius_inverse_series,
    order_complex,
)
from ksp.species import builtin

for name, n in (("E", 6), ("E+", 6), ("Cosh", 6), ("pointed", 5), ("EsegreE", 6)):
    rep = mobius_inverse_series(builtin(name), n)
    print("%-8s" % name, rep.cardinalities)

# %% [markdown]
# Order complex of the partition lattice on four labels.  Chains run from
# bottom to top and the boundary deletes interior elements.

# %%
P = build_operad_poset(builtin("E+"), 4)
C = order_complex(P)
print("chains", C.dims(), "homology", C.homology(), "d^2 = 0", C.check_d_squared())

# %% [markdown]
# Cohen-Macaulay check of every interval, with isomorphic intervals
# computed once.

# %%
cert = cohen_macaulay_check(build_monoid_poset(builtin("Cosh"), 6))
print(cert.passed, cert.intervals, cert.classes, cert.profile)

# %% [markdown]
# A poset that is not graded fails with a witness interval.

# %%
bad = Poset.from_covers(["0", "a", "b", "c", "1"], [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")])
print(cohen_macaulay_check(bad).witness)
