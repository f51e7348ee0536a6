# %% [markdown]
# # Koszul duals at desk scale
#
# Dual dimensions are computed three ways: from the series inverse, from
# signed Möbius sums and from top homology ranks.  A verdict also checks
# that every induced poset is Cohen-Macaulay.

# %%
from ksp.koszul import bar_complex, dual_dimensions, koszul_check
from ksp.species import builtin

T = dual_dimensions(builtin("EsegreE"), 6)
for row in T.rows():
    print(row)
print("agree", T.agree)

# %% [markdown]
# Sinh is a module over Cosh; its dual dimensions are tangent numbers.

# %%
T = dual_dimensions(builtin("Sinh"), 7)
print([int(T.series[(2 * k + 1, k)]) for k in range(4)])

# %% [markdown]
# Bar complex of E on three labels in weight three: factorizations match
# chains one to one.

# %%
b = bar_complex(builtin("E"), 3, 3)
print(b.factorizations, b.chains, b.alpha_bijective, b.homology)

# %% [markdown]
# Verdicts.

# %%
for name, n in (("E", 5), ("Cosh", 6), ("pointed", 4), ("A_L", 4)):
    v = koszul_check(builtin(name), n)
    print("%-8s %s" % (name, v.scale))
