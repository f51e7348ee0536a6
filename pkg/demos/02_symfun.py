# %% [markdown]
# # Symmetric functions in the power-sum basis
#
# A SymFn maps partitions to Fraction coefficients of p_lambda, truncated in
# degree.  Plethysm is species substitution, and the exponential
# specialization p_1 -> x, p_k -> 0 recovers the egf.

# %%
from ksp.symfun import (
    sf_h,
    sf_p,
    sf_plethysm,
    sf_plethystic_inverse,
    sf_schur,
    sf_sum,
    sf_to_egf,
    sf_to_schur,
)

T = 4
E = sf_sum([sf_h(i, T) for i in range(T + 1)], T)
E_plus = E - 1

# %% [markdown]
# Set partitions as a character: E composed with E_+.

# %%
parts = sf_plethysm(E, E_plus)
print(parts)
print("egf", [int(c) for c in sf_to_egf(parts).coeffs])

# %% [markdown]
# The plethystic inverse of E_+ is the signed Lie character.  Its degree
# n part lives on the partition lattice (see demo 04).

# %%
lie = sf_plethystic_inverse(E_plus)
for n in range(1, T + 1):
    print(n, {lam: int(c) for lam, c in sf_to_schur(lie.degree_part(n)).items()})
print("roundtrip", sf_plethysm(E_plus, lie) == sf_p((1,), T))

# %% [markdown]
# Schur functions come from Murnaghan-Nakayama.

# %%
print({lam: int(c) for lam, c in sf_to_schur(sf_schur((2, 1), T) * 2 + sf_h(3, T)).items()})
