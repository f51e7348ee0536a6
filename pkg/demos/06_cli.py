# %% [markdown]
# # The ksp command line
#
# The same computations are available from the shell.  Reports are JSON
# with sorted keys, rationals as p/q strings and a schema_version field.
# Here the entry point is called in-process.

# %%
from ksp.cli import main

main(["series", "Sinh*inv(Cosh)", "--trunc", "9"])

# %%
main(["poset", "operad", "Com", "4", "mobius"])

# %%
main(["verify", "hipparchus"])

# %% [markdown]
# Failures print a machine-readable error and return a nonzero code.

# %%
print("exit", main(["series", "E + * E"]))
