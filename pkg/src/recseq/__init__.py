"""Exact linear representations of recognisable series and q-regular sequences."""

from .linalg import Basis, canonicalise, coordinates, try_insert
from .oracle import brute_force_equal, hankel_rank, hankel_table, recursion_oracle
from .reduction import (
    coreachability_basis,
    is_zero_series,
    left_reduce,
    minimise,
    reachability_basis,
    right_reduce,
    series_equal,
)
from .regular import (
    RegularSequenceRep,
    is_compatible_series,
    is_proper,
    minimise_regular,
    properise,
    sequence_equal,
)
from .series import (
    LinearRepresentation,
    canonical_digits,
    eval_sequence,
    eval_series,
    rep_matrix_product,
    strip_trailing_zeros,
    word_value,
)

__all__ = [
    "Basis",
    "LinearRepresentation",
    "RegularSequenceRep",
    "brute_force_equal",
    "canonical_digits",
    "canonicalise",
    "coordinates",
    "coreachability_basis",
    "eval_sequence",
    "eval_series",
    "hankel_rank",
    "hankel_table",
    "is_compatible_series",
    "is_proper",
    "is_zero_series",
    "left_reduce",
    "minimise",
    "minimise_regular",
    "properise",
    "reachability_basis",
    "recursion_oracle",
    "rep_matrix_product",
    "right_reduce",
    "sequence_equal",
    "series_equal",
    "strip_trailing_zeros",
    "try_insert",
    "word_value",
]
