"""Small named representations used by the tests, scripts and data files."""

from .series import LinearRepresentation


def constant_one_minimal() -> LinearRepresentation:
    """The constant series 1 over {0, 1} in dimension 1."""
    return LinearRepresentation(2, (1,), (((1,),), ((1,),)), (1,), "constant-1d")


def constant_one_redundant() -> LinearRepresentation:
    """The constant series 1 again, in a non-minimal, improper dimension 2."""
    diag = ((1, 0), (0, 2))
    return LinearRepresentation(2, (1, 0), (diag, diag), (1, 1), "constant-2d")


def gone_wrong() -> LinearRepresentation:
    """Improper representation; its series is 1 exactly on words ending in 0.

    Read as a sequence through standard expansions it is the zero sequence,
    yet the series itself needs dimension 2.
    """
    return LinearRepresentation(
        2,
        (1, 0),
        (((1, 1), (0, 0)), ((1, 0), (0, 0))),
        (0, 1),
        "gone-wrong",
    )


def binary_sum_of_digits() -> LinearRepresentation:
    """Number of ones in the binary expansion of n; proper."""
    return LinearRepresentation(
        2,
        (1, 0),
        (((1, 0), (0, 1)), ((1, 1), (0, 1))),
        (0, 1),
        "sum-of-digits",
    )


ALL = {
    "ex-constant-1d": constant_one_minimal,
    "ex-constant-2d": constant_one_redundant,
    "ex-gone-wrong": gone_wrong,
    "sum-of-digits": binary_sum_of_digits,
}
