"""Regular sequences on top of recognisable series.

A representation is *proper* when ``M(0) w == w``. Only proper
representations define the digit recursion ``v(qn + r) = M(r) v(n)``
consistently, and for them series minimisation is also sequence
minimisation. Improper inputs are repaired with :func:`properise` first.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .reduction import minimise, series_equal
from .series import LinearRepresentation


class ImproperRepresentationError(ValueError):
    pass


def is_proper(rep: LinearRepresentation) -> bool:
    return la.mat_vec(rep.matrices[0], rep.w) == rep.w


@dataclass(frozen=True)
class RegularSequenceRep:
    """A representation tagged as proper; the tag is checked on construction."""

    rep: LinearRepresentation
    proper: bool = True

    def __post_init__(self):
        if self.proper and not is_proper(self.rep):
            raise ImproperRepresentationError("representation is not proper: M(0)w != w")


def is_compatible_series(rep: LinearRepresentation) -> bool:
    """Whether ``x(b 0) == x(b)`` for every word ``b``.

    Decided on the minimised representation, where compatibility and
    ``M(0) w == w`` are equivalent.
    """
    return is_proper(minimise(rep))


def properise(rep: LinearRepresentation) -> LinearRepresentation:
    """Proper representation of the same sequence, one dimension larger.

    The extra coordinate latches ``u M(c) w`` where ``c`` is the input read
    so far with trailing zeros removed: letter 0 keeps the latch, any other
    letter refreshes it. The resulting series takes the value
    ``x(strip_trailing_zeros(b))`` on every word ``b``.
    """
    d = rep.dim
    u = rep.u + (la.dot(rep.u, rep.w),)
    mats = []
    for a, m in enumerate(rep.matrices):
        if a == 0:
            block = tuple(row + (la.ZERO,) for row in m) + (la.unit(d + 1, d),)
        else:
            mw = la.mat_vec(m, rep.w)
            block = tuple(row + (x,) for row, x in zip(m, mw)) + (la.zeros(d + 1),)
        mats.append(block)
    w = la.unit(d + 1, d)
    return LinearRepresentation(rep.q, u, tuple(mats), w, rep.name)


def minimise_regular(rep: LinearRepresentation) -> LinearRepresentation:
    if is_proper(rep):
        return minimise(rep)
    return minimise(properise(rep))


def sequence_equal(rep1: LinearRepresentation, rep2: LinearRepresentation) -> bool:
    if rep1.q != rep2.q:
        raise ValueError(f"alphabet mismatch: q={rep1.q} vs q={rep2.q}")
    return series_equal(properise(rep1), properise(rep2))
