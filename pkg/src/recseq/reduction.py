"""Minimisation of linear representations by two-pass reduction.

The left pass restricts the representation to the span of the row vectors
``u M(b)`` and writes each ``M(a)`` in a basis of that invariant subspace; the
right pass does the same for the column vectors ``M(b) w``. Running the right
pass on the output of the left pass yields a representation of least
dimension for the same series.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Tuple

from . import linalg as la
from .linalg import Basis
from .series import LinearRepresentation, Word


@dataclass(frozen=True)
class SpanClosure:
    """Basis of a reachability (row) or co-reachability (column) space.

    ``witnesses[i]`` is the word producing ``basis.vectors[i]``: the vector is
    ``u M(witness)`` for row closures and ``M(witness) w`` for column ones.
    """

    basis: Basis
    witnesses: Tuple[Word, ...]

    def __len__(self):
        return len(self.basis)

    @property
    def vectors(self):
        return self.basis.vectors


# kept for readability at call sites
ReachabilityBasis = SpanClosure
CoreachabilityBasis = SpanClosure


def _closure(seed, step, q: int, dim: int, extend) -> SpanClosure:
    basis = Basis(dim)
    witnesses = []
    if la.is_zero(seed):
        return SpanClosure(basis, ())
    basis, _ = basis.try_insert(seed)
    witnesses.append(())
    pending = deque([0])
    while pending:
        i = pending.popleft()
        v, word = basis.vectors[i], witnesses[i]
        for a in range(q):
            basis, coords = basis.try_insert(step(v, a))
            if coords is None:
                witnesses.append(extend(word, a))
                pending.append(len(basis) - 1)
                if len(basis) == dim:
                    return SpanClosure(basis, tuple(witnesses))
    return SpanClosure(basis, tuple(witnesses))


def reachability_basis(rep: LinearRepresentation) -> SpanClosure:
    """FIFO closure of ``{u M(b)}`` under right multiplication, letters ascending."""
    d = rep.dim
    return _closure(
        rep.u,
        lambda v, a: la.vec_mat(v, rep.matrices[a], d),
        rep.q,
        d,
        lambda word, a: word + (a,),
    )


def coreachability_basis(rep: LinearRepresentation) -> SpanClosure:
    """FIFO closure of ``{M(b) w}`` under left multiplication, letters ascending."""
    return _closure(
        rep.w,
        lambda v, a: la.mat_vec(rep.matrices[a], v),
        rep.q,
        rep.dim,
        lambda word, a: (a,) + word,
    )


def _coords(basis: Basis, v) -> la.Vector:
    c = basis.coordinates(v)
    # closure guarantees membership; a miss means the closure is broken
    assert c is not None, "vector escaped an invariant subspace"
    return c


def left_reduce(rep: LinearRepresentation) -> LinearRepresentation:
    closure = reachability_basis(rep)
    if len(closure) == 0:
        return LinearRepresentation.zero(rep.q, rep.name)
    b = closure.basis
    d = rep.dim
    u = _coords(b, rep.u)
    # row i of the new M(a) holds the coordinates of b_i M(a)
    mats = tuple(
        tuple(_coords(b, la.vec_mat(v, m, d)) for v in b.vectors) for m in rep.matrices
    )
    w = tuple(la.dot(v, rep.w) for v in b.vectors)
    return LinearRepresentation(rep.q, u, mats, w, rep.name)


def right_reduce(rep: LinearRepresentation) -> LinearRepresentation:
    closure = coreachability_basis(rep)
    if len(closure) == 0:
        return LinearRepresentation.zero(rep.q, rep.name)
    c = closure.basis
    k = len(c)
    w = _coords(c, rep.w)
    mats = []
    for m in rep.matrices:
        # column j of the new M(a) holds the coordinates of M(a) c_j
        cols = [_coords(c, la.mat_vec(m, v)) for v in c.vectors]
        mats.append(tuple(tuple(cols[j][i] for j in range(k)) for i in range(k)))
    u = tuple(la.dot(rep.u, v) for v in c.vectors)
    return LinearRepresentation(rep.q, u, tuple(mats), w, rep.name)


def minimise(rep: LinearRepresentation) -> LinearRepresentation:
    return right_reduce(left_reduce(rep))


def is_zero_series(rep: LinearRepresentation) -> bool:
    return all(la.dot(v, rep.w) == 0 for v in reachability_basis(rep).vectors)


def direct_difference(rep1: LinearRepresentation, rep2: LinearRepresentation) -> LinearRepresentation:
    """Representation of the series ``x1 - x2``."""
    if rep1.q != rep2.q:
        raise ValueError(f"alphabet mismatch: q={rep1.q} vs q={rep2.q}")
    return LinearRepresentation(
        rep1.q,
        rep1.u + tuple(-x for x in rep2.u),
        tuple(la.block_diag(a, b) for a, b in zip(rep1.matrices, rep2.matrices)),
        rep1.w + rep2.w,
    )


def series_equal(rep1: LinearRepresentation, rep2: LinearRepresentation) -> bool:
    return is_zero_series(direct_difference(rep1, rep2))
