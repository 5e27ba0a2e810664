"""Arithmetic sets, tilings and solutions of A(K) for finite K in Z."""

from .recurrence import (
    BoundednessReport,
    PeriodicSolution,
    RootTerm,
    SequenceWindow,
    classify_boundedness,
    extend_recurrence,
    integral_periodic_solution,
    make_bounded_solution,
    tiling_to_solution,
    window_residuals,
)
from .sets import (
    CovenMeyerowitzReport,
    ZSet,
    as_zset,
    coven_meyerowitz_report,
    family_parith_nontile,
    family_parith_nontile_composite,
    is_arithmetic_Zn,
    is_b_arithmetic,
    is_p_arithmetic,
    mask_polynomial,
    newman_prime_test,
    normalize_set,
    parse_set,
)
from .tiling import (
    TileResultZ,
    admissible_moduli,
    decide_tile_Z,
    tile_Zn_exact_cover,
    tiles_some_Zn,
    verify_Zn_partition,
)

__all__ = [
    "BoundednessReport",
    "CovenMeyerowitzReport",
    "PeriodicSolution",
    "RootTerm",
    "SequenceWindow",
    "TileResultZ",
    "ZSet",
    "admissible_moduli",
    "as_zset",
    "classify_boundedness",
    "coven_meyerowitz_report",
    "decide_tile_Z",
    "extend_recurrence",
    "family_parith_nontile",
    "family_parith_nontile_composite",
    "integral_periodic_solution",
    "is_arithmetic_Zn",
    "is_b_arithmetic",
    "is_p_arithmetic",
    "make_bounded_solution",
    "mask_polynomial",
    "newman_prime_test",
    "normalize_set",
    "parse_set",
    "tile_Zn_exact_cover",
    "tiles_some_Zn",
    "tiling_to_solution",
    "verify_Zn_partition",
    "window_residuals",
]
