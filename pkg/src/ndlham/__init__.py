"""Spectral certification of pseudo-random regular graphs and exact,
desk-scale verification of the Hamilton-cycle counting identities built on
permanents, 2-factors and rotation."""

from .errors import (
    GenerationTimeout,
    InconsistentTrace,
    InvalidParameters,
    InvariantViolation,
    NdlError,
    NotRegular,
    ParseError,
    TooLarge,
)
from .graph import (
    Graph,
    GraphFamilySpec,
    circulant,
    complete,
    cycle,
    from_edges,
    generate,
    paley,
    petersen,
    random_regular,
    read_edge_list,
    write_edge_list,
)
from .spectral import NdlCertificate, certify, jacobi_eigenvalues, spectrum
from .mixing import (
    MixingReport,
    edge_count,
    expansion_check,
    large_sets_edge,
    mixing_defect,
    verify_mixing,
)
from .permanent import (
    LogBound,
    ZeroOneMatrix,
    adjacency_matrix_of,
    alon_friedland_upper,
    bregman_bound,
    bregman_bound_total,
    equal_row_sums,
    permanent_exact,
    regular_upper,
    vdw_lower,
)
from .factors import (
    FactorHistogram,
    TwoFactor,
    enumerate_two_factors,
    factor_histogram,
    hamilton_count_exact,
    perfect_matching_count,
    phi,
    two_factor_total,
    two_factors_near_hamilton,
    weighted_cycle_cover_sum,
)
from .hamiltonize import RotationTrace, posa_close, replay, two_factor_to_hamilton
from .experiments import (
    BoundsReport,
    TailDiagnostics,
    bounds_report,
    janson_expectation_gnm,
    janson_expectation_gnp,
    monte_carlo_gnp,
    phi_estimate_report,
    tail_diagnostics,
    theorem_trend,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
