"""Words, digit expansions and linear representations.

Word convention: a word is a tuple of letters ``(a_0, a_1, ..., a_l)`` with
``a_0`` the *least* significant digit, so ``word_value((0, 1, 1), 2) == 6``.
The same letter ``a_0`` is the *leftmost* factor of the matrix product,
``M(b) = M(a_0) M(a_1) ... M(a_l)``. Trailing zeros (the right end of the
tuple) are the most significant positions and do not change the value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from . import linalg as la
from .linalg import Matrix, Vector

Word = Tuple[int, ...]


def check_word(b: Sequence[int], q: int) -> Word:
    b = tuple(b)
    for i, a in enumerate(b):
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < q:
            raise ValueError(f"letter {a!r} at position {i} is not in 0..{q - 1}")
    return b


def word_value(b: Sequence[int], q: int) -> int:
    b = check_word(b, q)
    n = 0
    for a in reversed(b):
        n = n * q + a
    return n


def canonical_digits(n: int, q: int) -> Word:
    """Standard base-``q`` expansion of ``n``, least significant digit first."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    while n:
        n, r = divmod(n, q)
        out.append(r)
    return tuple(out)


def strip_trailing_zeros(b: Sequence[int]) -> Word:
    b = tuple(b)
    end = len(b)
    while end and b[end - 1] == 0:
        end -= 1
    return b[:end]


@dataclass(frozen=True)
class LinearRepresentation:
    """A triple ``(u, M, w)`` over the digit alphabet ``{0, ..., q-1}``.

    ``matrices[a]`` is ``M(a)``. ``u`` is a row vector and ``w`` a column
    vector, both stored as flat tuples. ``dim == 0`` is allowed and
    represents the zero series.
    """

    q: int
    u: Vector
    matrices: Tuple[Matrix, ...]
    w: Vector
    name: str = ""
    description: str = ""

    def __post_init__(self):
        if isinstance(self.q, bool) or not isinstance(self.q, int) or self.q < 2:
            raise ValueError(f"alphabet size q must be an integer >= 2, got {self.q!r}")
        object.__setattr__(self, "u", la.vector(self.u))
        object.__setattr__(self, "w", la.vector(self.w))
        object.__setattr__(self, "matrices", tuple(la.matrix(m) for m in self.matrices))
        d = len(self.u)
        if len(self.w) != d:
            raise la.ShapeError(f"u has dimension {d} but w has dimension {len(self.w)}")
        if len(self.matrices) != self.q:
            raise la.ShapeError(f"expected {self.q} matrices, got {len(self.matrices)}")
        for a, m in enumerate(self.matrices):
            if len(m) != d or any(len(row) != d for row in m):
                raise la.ShapeError(f"M({a}) is not {d}x{d}")

    @property
    def dim(self) -> int:
        return len(self.u)

    def __eq__(self, other):
        # name and description are labels, not part of the value
        if not isinstance(other, LinearRepresentation):
            return NotImplemented
        return (self.q, self.u, self.matrices, self.w) == (other.q, other.u, other.matrices, other.w)

    def __hash__(self):
        return hash((self.q, self.u, self.matrices, self.w))

    @classmethod
    def zero(cls, q: int, name: str = "") -> "LinearRepresentation":
        return cls(q, (), tuple(() for _ in range(q)), (), name)

    def conjugate(self, p: Matrix) -> "LinearRepresentation":
        """Change of basis ``(u P, P^-1 M P, P^-1 w)``; same series."""
        p = la.matrix(p)
        p_inv = la.inverse(p)
        d = self.dim
        return LinearRepresentation(
            self.q,
            la.vec_mat(self.u, p, d),
            tuple(la.mat_mul(la.mat_mul(p_inv, m, d), p, d) for m in self.matrices),
            la.mat_vec(p_inv, self.w),
            self.name,
            self.description,
        )


def rep_matrix_product(rep: LinearRepresentation, b: Iterable[int]) -> Matrix:
    b = check_word(b, rep.q)
    result = la.identity(rep.dim)
    for a in b:
        result = la.mat_mul(result, rep.matrices[a], rep.dim)
    return result


def row_image(rep: LinearRepresentation, v: Vector, b: Iterable[int]) -> Vector:
    """``v M(b)`` without materialising the product matrix."""
    for a in check_word(b, rep.q):
        v = la.vec_mat(v, rep.matrices[a], rep.dim)
    return v


def column_image(rep: LinearRepresentation, b: Iterable[int], v: Vector) -> Vector:
    """``M(b) v``; letters are applied right to left."""
    for a in reversed(check_word(b, rep.q)):
        v = la.mat_vec(rep.matrices[a], v)
    return v


def eval_series(rep: LinearRepresentation, b: Iterable[int]) -> Fraction:
    return la.dot(row_image(rep, rep.u, b), rep.w)


def eval_sequence(rep: LinearRepresentation, n: int) -> Fraction:
    """Value at ``n`` read through the standard base-``q`` expansion.

    Total for every representation; only for proper ones does it coincide
    with the digit recursion (see :func:`recseq.oracle.recursion_oracle`).
    """
    return eval_series(rep, canonical_digits(n, rep.q))
