"""Distinguishability measures for pure-state ensembles.

Computes the maximum probabilities of correct identification (hypothesis
testing) and of unambiguous discrimination for pure-state ensembles,
cross-validates every closed form against an independent brute-force
route, and maps out how the two measures can rank ensemble pairs in
opposite orders.
"""

from .ensembles import (
    Ensemble,
    GramMatrix,
    LoadedEnsemble,
    PureState,
    SymmetricEnsemble,
    ensemble_from_dict,
    ensemble_to_dict,
    gram,
    is_linearly_independent,
    load_ensemble,
    make_symmetric,
    realize,
)
from .extremal import (
    ExtremalConfig,
    extremal_coefficients,
    extremum_profile,
    local_extremum_p_hyp,
    p_hyp_lower_bound,
    p_hyp_upper_bound,
    verify_n0_monotonicity,
)
from .measures import (
    MeasureReport,
    Povm,
    ensemble_entropy_two_state,
    helstrom_two_state,
    hyp_success_probability,
    jaeger_shimony,
    optimality_certificate,
    p_hyp_symmetric,
    p_usd_symmetric,
    square_root_measurement,
    two_state_overlap_delta,
)
from .numerics import (
    DEFAULT_TOLERANCE,
    HermitianEigenDecomposition,
    Tolerance,
    hermitian_eig,
    hermitize,
    matrix_function,
    min_eigenvalue,
)
from .oracles import (
    UsdSolution,
    entropy_oracle,
    hyp_random_search,
    reciprocal_states,
    usd_oracle,
)
from .ordering import (
    RatioGrid,
    ReversalWitness,
    build_candidate_pair,
    check_reversal,
    grid_summary,
    grid_to_csv,
    grid_to_json,
    ratio_grid,
    two_state_relation,
    verify_no_two_state_reversal,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLERANCE",
    "Ensemble",
    "ExtremalConfig",
    "GramMatrix",
    "HermitianEigenDecomposition",
    "LoadedEnsemble",
    "MeasureReport",
    "Povm",
    "PureState",
    "RatioGrid",
    "ReversalWitness",
    "SymmetricEnsemble",
    "Tolerance",
    "UsdSolution",
    "build_candidate_pair",
    "check_reversal",
    "ensemble_entropy_two_state",
    "ensemble_from_dict",
    "ensemble_to_dict",
    "entropy_oracle",
    "extremal_coefficients",
    "extremum_profile",
    "gram",
    "grid_summary",
    "grid_to_csv",
    "grid_to_json",
    "helstrom_two_state",
    "hermitian_eig",
    "hermitize",
    "hyp_random_search",
    "hyp_success_probability",
    "is_linearly_independent",
    "jaeger_shimony",
    "load_ensemble",
    "local_extremum_p_hyp",
    "make_symmetric",
    "matrix_function",
    "min_eigenvalue",
    "optimality_certificate",
    "p_hyp_lower_bound",
    "p_hyp_symmetric",
    "p_hyp_upper_bound",
    "p_usd_symmetric",
    "ratio_grid",
    "realize",
    "reciprocal_states",
    "square_root_measurement",
    "two_state_overlap_delta",
    "two_state_relation",
    "usd_oracle",
    "verify_n0_monotonicity",
    "verify_no_two_state_reversal",
]
