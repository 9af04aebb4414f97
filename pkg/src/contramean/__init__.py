"""
Weighted contraharmonic means of Hermitian positive-definite matrices.

The library provides the four weighted operator means (arithmetic,
harmonic, geometric, contraharmonic), the variational characterization
of the contraharmonic mean with its explicit maximizing witness, a suite
of named order/equality properties with normalized margins, and a
deterministic randomized-testing harness with CSV/JSON reporting.
"""

from .campaign import (
    ALL_PROPERTIES,
    CampaignConfig,
    PropertyReport,
    fuzz_campaign,
    render_csv,
    render_json,
    run_property_trial,
    summarize,
    trial_rng,
    write_report,
)
from .errors import (
    ContrameanError,
    DecompositionInvalidError,
    DimensionMismatchError,
    DomainError,
    LambdaOutOfRangeError,
    NoConvergenceError,
    NotHermitianError,
    NotPositiveDefiniteError,
    SingularMatrixError,
    ZeroFunctionalError,
)
from .inequalities import (
    ContractionReport,
    PropertyId,
    apply_functional,
    check_bounds_remark,
    check_congruence,
    check_contraction,
    check_convexity_mix,
    check_functional,
    check_homogeneity,
    check_homogeneity_and_embedding,
    check_mixed_mean,
    check_norm_lower_bound,
    check_refined_upper,
    check_scalar_embedding,
    check_symmetry,
    contraction_witness,
    lambda_lower_bound,
    norm_lower_coefficients,
    norm_lower_premise_residual,
)
from .linalg import (
    DEFAULT_TOL,
    EqualityReport,
    LoewnerVerdict,
    SpectralDecomposition,
    congruence,
    eig_hermitian,
    equality_report,
    hermitian_part,
    loewner_leq,
    matrix_function,
    matrix_inv_sqrt,
    matrix_inverse,
    matrix_power,
    matrix_sqrt,
    op_norm,
    require_hermitian,
    require_hermitian_pd,
)
from .matrixio import load_hermitian_pd, load_matrix, matrix_from_obj, matrix_to_obj, save_matrix
from .means import (
    Decomposition,
    WitnessPair,
    arithmetic_mean,
    check_attainment,
    check_gap_identity,
    check_product_identity,
    check_square_identity,
    contraharmonic_mean,
    equal_args_coefficient,
    geometric_mean,
    harmonic_mean,
    mixed_mean_coefficient,
    objective,
    residual_h,
    witness_pair,
)
from .sampling import gen_decomposition, gen_invertible, gen_pd, gen_psd_weight
from .scalar import (
    grid_search_contraharmonic,
    grid_search_weighted_contraharmonic,
    lehmer_mean,
    scalar_weighted_mean,
    weighted_arithmetic,
    weighted_contraharmonic,
    weighted_geometric,
    weighted_harmonic,
)

__version__ = "0.1.0"
