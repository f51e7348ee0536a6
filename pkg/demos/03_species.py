# %% [markdown]
# # Species, monoids and operads
#
# Structures are hashable values on a label set.  A monoid supplies a
# product nu that merges structures on disjoint label sets; an operad
# supplies a composition along a set partition.

# %%
from ksp.species import builtin, check_axioms, check_functoriality, cycle_index, to_text

for name in ("E", "Cosh", "L", "EsegreE", "pointed", "A", "L(E+)"):
    print("%-8s" % name, builtin(name).species.counts(5))

# %% [markdown]
# Structures print in a canonical text form.

# %%
A = builtin("A")
for t in A.structures((0, 1, 2))[:4]:
    print(to_text(t))

# %% [markdown]
# The axiom checker walks every label set up to n and reports the first
# failing instance of each law.

# %%
for name in ("E", "Sinh", "pointed", "A_L"):
    rep = check_axioms(builtin(name), 4)
    print(name, rep.passed, sorted(rep.results))
print("functorial", check_functoriality(builtin("EsegreE"), 4).passed)

# %% [markdown]
# Cycle index of Cosh by fixed points of one permutation per cycle type.

# %%
print(cycle_index(builtin("Cosh"), 4))
