# %% [markdown]
# # Exact exponential generating functions
#
# Every coefficient is a Fraction and every series carries its truncation
# degree.  Operations refuse to mix truncations.

# %%
from math import factorial

from ksp.identities import alternating_permutations
from ksp.series import (
    Egf,
    cos_series,
    egf_comp_inverse,
    egf_compose,
    egf_div,
    egf_mul_inverse,
    egf_pointing,
    egf_solve_tree_fixed_point,
    exp_series,
    sin_series,
)

N = 10

# %% [markdown]
# sec and tan count alternating permutations.

# %%
sec = egf_mul_inverse(cos_series(N))
tan = egf_div(sin_series(N), cos_series(N))
print("sec", [int(sec[n]) for n in range(0, N + 1, 2)])
print("tan", [int(tan[n]) for n in range(1, N + 1, 2)])
print("brute force", [alternating_permutations(n) for n in range(N)])

# %% [markdown]
# Set partitions are exp composed with e^x - 1.

# %%
E = exp_series(N)
print("Bell", [int(c) for c in egf_compose(E, E - 1).coeffs])

# %% [markdown]
# Lagrange inversion of x e^x gives signed Cayley numbers.

# %%
print("cinv(x e^x)", [int(c) for c in egf_comp_inverse(egf_pointing(E)).coeffs])

# %% [markdown]
# Tree fixed points: rooted trees A = x E(A) and Schröder trees built from
# linear orders of size at least two.

# %%
A = egf_solve_tree_fixed_point(exp_series(7), "rooted")
print("rooted trees", [int(c) for c in A.coeffs])
L2 = Egf([0, 0] + [factorial(n) for n in range(2, N + 1)], N)
F = egf_solve_tree_fixed_point(L2, "schroeder")
print("plane Schröder trees at 10 leaves", F[10] / factorial(10))
