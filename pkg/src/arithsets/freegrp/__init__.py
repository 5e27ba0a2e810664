"""Words, balls, tilings and solution patches in the free group F_k."""

from .search import SAT, UNKNOWN, UNSAT, CoverResult, cover_search
from .solutions import (
    PatchReport,
    SolutionPatch,
    StepLog,
    bounded_nonperiodic_solution,
    check_bounded_hypotheses,
    check_parity_balance,
    distinct_values_on_spheres,
    parity_example_set,
    parity_solution,
    tiling_to_solution_fg,
    verify_solution_patch,
)
from .tiling import PartialTiling, TilingReport, greedy_tiling, verify_partial_tiling
from .words import (
    IDENTITY,
    FGSet,
    Word,
    ball,
    ball_words,
    check_rank,
    format_word,
    inv,
    is_connected,
    letters,
    mul,
    norm,
    parse_word,
    reduce_word,
    shortlex_key,
    sphere,
    sphere_words,
    word_ops,
)

__all__ = [
    "IDENTITY", "SAT", "UNKNOWN", "UNSAT", "CoverResult", "FGSet", "PartialTiling", "PatchReport",
    "SolutionPatch", "StepLog", "TilingReport", "Word", "ball", "ball_words", "bounded_nonperiodic_solution",
    "check_bounded_hypotheses", "check_parity_balance", "check_rank", "cover_search",
    "distinct_values_on_spheres", "format_word", "greedy_tiling", "inv", "is_connected", "letters", "mul",
    "norm", "parity_example_set", "parity_solution", "parse_word", "reduce_word", "shortlex_key", "sphere",
    "sphere_words", "tiling_to_solution_fg", "verify_partial_tiling", "verify_solution_patch", "word_ops",
]
