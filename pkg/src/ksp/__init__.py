"""Exact species calculus: series, symmetric functions, enumerators, posets, Koszulness."""

from ksp.errors import KspError
from ksp.series import (
    Egf,
    GradedEgf,
    egf_add,
    egf_comp_inverse,
    egf_compose,
    egf_derivative,
    egf_hadamard,
    egf_mul,
    egf_mul_inverse,
    egf_pointing,
    egf_solve_tree_fixed_point,
    graded_euler,
)
from ksp.symfun import (
    SymFn,
    sf_e,
    sf_h,
    sf_hilbert,
    sf_internal,
    sf_mul,
    sf_plethysm,
    sf_plethystic_inverse,
    sf_sign_twist,
    sf_to_egf,
)
from ksp.species import builtin, check_axioms, cycle_index, segre, truncate_module, veronese
from ksp.poset import (
    build_module_poset,
    build_monoid_poset,
    build_operad_poset,
    cohen_macaulay_check,
    homology_ranks,
    mobius,
    mobius_inverse_series,
    order_complex,
)
from ksp.koszul import bar_complex, dual_dimensions, dual_series_identities, koszul_check

__version__ = "0.1.0"
