"""Ramsey numbers of double stars and subdivided stars: witnesses, extractors, detectors, bounds and search."""

__version__ = "0.1.0"

from .bounds import BoundsReport, bounds_double_star, bounds_for, bounds_p4, bounds_star, bounds_substar
from .construct import (
    InternalError,
    WitnessCertificate,
    best_double_star_witness,
    best_substar_witness,
    witness_double_star_divisible,
    witness_double_star_even_k,
    witness_double_star_half_divisible,
    witness_double_star_odd_k,
    witness_list_p4,
    witness_star,
    witness_substar,
    witness_substar_2color,
)
from .core import (
    P4,
    ColoredCompleteGraph,
    Embedding,
    Pattern,
    PatternKind,
    build,
    double_star,
    star,
    subdivided_star,
    validate_embedding,
)
from .detect import brute_force_find, find_mono
from .extract import ProofTrace, extract_double_star, extract_double_star_m1, extract_subdivided_star
from .search import ListAssignment, exists_free_coloring, list_edge_coloring, list_ramsey_check, ramsey_exact

__all__ = [name for name in dir() if not name.startswith("_")]
