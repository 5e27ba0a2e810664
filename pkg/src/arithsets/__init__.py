"""Arithmetic sets: finite sets K in Z or F_k for which the system A(K) has
nontrivial bounded or periodic solutions, and their relation to tilings."""

from . import exactlin, freegrp, intpoly, zarith
from .errors import ArithSetsError
from .intpoly import IntPoly
from .zarith import ZSet, decide_tile_Z, is_b_arithmetic, is_p_arithmetic, parse_set

__version__ = "0.1.0"

__all__ = [
    "ArithSetsError",
    "IntPoly",
    "ZSet",
    "decide_tile_Z",
    "exactlin",
    "freegrp",
    "intpoly",
    "is_b_arithmetic",
    "is_p_arithmetic",
    "parse_set",
    "zarith",
]
