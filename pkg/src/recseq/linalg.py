"""Exact dense linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`, matrices are tuples of
row tuples. Everything here is immutable and side-effect free, so values can
be shared freely. Zero-dimensional objects (``()``) are legal everywhere.

The code only relies on field operations (``+ - * /`` and ``== 0``), so a
different exact field could be dropped in by replacing :func:`canonicalise`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

Scalar = Fraction
Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class ShapeError(ValueError):
    """Operands do not have conforming dimensions."""


def canonicalise(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def as_scalar(x) -> Fraction:
    """Coerce ints, Fractions or rational strings like ``"-5/7"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ShapeError("ragged matrix")
    return m


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple(zeros(cols) for _ in range(rows))


def ncols(m: Matrix, default: int = 0) -> int:
    # an n x 0 matrix and a 0 x 0 matrix are indistinguishable when n == 0
    return len(m[0]) if m else default


def transpose(m: Matrix, cols: Optional[int] = None) -> Matrix:
    c = ncols(m, cols or 0)
    return tuple(tuple(row[j] for row in m) for j in range(c))


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ShapeError(f"dot of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), ZERO)


def vec_add(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ShapeError(f"add of lengths {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ShapeError(f"sub of lengths {len(a)} and {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def linear_combination(coeffs: Sequence[Fraction], vectors: Sequence[Vector], dim: int) -> Vector:
    if len(coeffs) != len(vectors):
        raise ShapeError("coefficient count differs from vector count")
    out = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                out[j] += c * x
    return tuple(out)


def vec_mat(v: Vector, m: Matrix, cols: Optional[int] = None) -> Vector:
    """Row vector times matrix."""
    if len(v) != len(m):
        raise ShapeError(f"row vector of length {len(v)} times {len(m)}-row matrix")
    c = ncols(m, len(v) if cols is None else cols)
    out = [ZERO] * c
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                out[j] += x * y
    return tuple(out)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    """Matrix times column vector."""
    if m and len(m[0]) != len(v):
        raise ShapeError(f"matrix with {len(m[0])} columns times vector of length {len(v)}")
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix, cols: Optional[int] = None) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ShapeError(f"{len(a)}x{len(a[0])} times {len(b)}-row matrix")
    c = ncols(b, len(b) if cols is None else cols)
    return tuple(vec_mat(row, b, c) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if len(a) != len(b):
        raise ShapeError("matrix sum of different shapes")
    return tuple(vec_add(x, y) for x, y in zip(a, b))


def mat_scale(c: Fraction, m: Matrix) -> Matrix:
    return tuple(vec_scale(c, row) for row in m)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, k = len(a), len(b)
    top = tuple(row + zeros(k) for row in a)
    bottom = tuple(zeros(n) + row for row in b)
    return top + bottom


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ``ValueError`` for singular input."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ShapeError("inverse of a non-square matrix")
    work = [list(row) + list(unit(n, i)) for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            f = work[r][col]
            if r != col and f:
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


@dataclass(frozen=True)
class Basis:
    """Linearly independent vectors kept alongside an echelon form.

    ``vectors`` are the vectors exactly as inserted. ``echelon[i]`` has a
    unit entry in column ``pivots[i]`` and equals the combination
    ``sum(transform[i][j] * vectors[j])``; that bookkeeping is what turns a
    reduction against the echelon rows into coordinates with respect to the
    original vectors.
    """

    dim: int
    vectors: Tuple[Vector, ...] = ()
    echelon: Tuple[Vector, ...] = ()
    pivots: Tuple[int, ...] = ()
    transform: Tuple[Vector, ...] = ()

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def _reduce(self, v: Sequence[Fraction]):
        if len(v) != self.dim:
            raise ShapeError(f"vector of length {len(v)} for basis of ambient dimension {self.dim}")
        residual = list(v)
        # coefficients against echelon rows
        coeffs = []
        for row, p in zip(self.echelon, self.pivots):
            c = residual[p]
            coeffs.append(c)
            if c:
                for j in range(p, self.dim):
                    if row[j]:
                        residual[j] -= c * row[j]
        return residual, coeffs

    def _combine(self, coeffs: Sequence[Fraction]) -> Vector:
        out = [ZERO] * len(self.vectors)
        for c, t in zip(coeffs, self.transform):
            if c:
                for j, x in enumerate(t):
                    out[j] += c * x
        return tuple(out)

    def coordinates(self, v: Sequence[Fraction]) -> Optional[Vector]:
        """Coordinates of ``v`` in terms of ``vectors``, or ``None`` if not in the span."""
        residual, coeffs = self._reduce(v)
        if any(residual):
            return None
        return self._combine(coeffs)

    def __contains__(self, v) -> bool:
        residual, _ = self._reduce(v)
        return not any(residual)

    def try_insert(self, v: Sequence[Fraction]) -> Tuple["Basis", Optional[Vector]]:
        """Insert ``v`` if it is independent.

        Returns ``(extended_basis, None)`` when ``v`` was independent and
        ``(self, coordinates)`` when it already lies in the span.
        """
        residual, coeffs = self._reduce(v)
        p = next((j for j, x in enumerate(residual) if x), None)
        if p is None:
            return self, self._combine(coeffs)
        k = len(self.vectors)
        lead = residual[p]
        new_row = tuple(x / lead for x in residual)
        # residual = v - sum coeffs_i echelon_i, expressed in original vectors
        combo = [-c for c in self._combine(coeffs)] + [ONE]
        new_t = tuple(c / lead for c in combo)
        old_t = tuple(t + (ZERO,) for t in self.transform)
        # keep echelon rows sorted by pivot column so _reduce is a single pass
        # rows with a larger pivot already vanish at column p (leading pivots)
        echelon, pivots, transform = list(self.echelon), list(self.pivots), list(old_t)
        at = next((i for i, q in enumerate(pivots) if q > p), len(pivots))
        echelon.insert(at, new_row)
        pivots.insert(at, p)
        transform.insert(at, new_t)
        basis = Basis(
            dim=self.dim,
            vectors=self.vectors + (tuple(v),),
            echelon=tuple(echelon),
            pivots=tuple(pivots),
            transform=tuple(transform),
        )
        assert len(basis) == k + 1 <= self.dim
        return basis, None


def try_insert(basis: Basis, v: Sequence[Fraction]) -> Tuple[Basis, Optional[Vector]]:
    return basis.try_insert(v)


def coordinates(basis: Basis, v: Sequence[Fraction]) -> Optional[Vector]:
    return basis.coordinates(v)


def span_basis(vectors: Iterable[Sequence[Fraction]], dim: int) -> Basis:
    basis = Basis(dim)
    for v in vectors:
        basis, _ = basis.try_insert(v)
    return basis


def rank(m: Matrix, cols: Optional[int] = None) -> int:
    """Rank by incremental insertion of rows; cheap when the rank is small."""
    c = ncols(m, cols or 0)
    basis = Basis(c)
    for row in m:
        if len(basis) == c:
            break
        basis, _ = basis.try_insert(row)
    return len(basis)
