"""Independent checks: word enumeration, the digit recursion, Hankel rank.

Nothing here calls into the reduction code, so these functions can certify
its results.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, List, Tuple

from . import linalg as la
from .series import LinearRepresentation, Word, column_image, eval_series, row_image

# upper bound on Hankel table cells
DEFAULT_CELL_CAP = 4 ** 9


class TruncationTooLarge(ValueError):
    pass


def words_up_to(q: int, max_len: int) -> Iterator[Word]:
    """All words of length <= max_len, length-lexicographic, letters ascending."""
    for n in range(max_len + 1):
        yield from itertools.product(range(q), repeat=n)


def count_words(q: int, max_len: int) -> int:
    return (q ** (max_len + 1) - 1) // (q - 1)


def recursion_oracle(rep: LinearRepresentation, n: int) -> Fraction:
    """``u v(n)`` with ``v(0) = w`` and ``v(qn + r) = M(r) v(n)``."""
    m0w = la.mat_vec(rep.matrices[0], rep.w)
    if m0w != rep.w:
        raise ValueError("representation is not proper")
    if n < 0:
        raise ValueError("n must be non-negative")

    def v(k: int) -> la.Vector:
        if k == 0:
            return rep.w
        quotient, r = divmod(k, rep.q)
        return la.mat_vec(rep.matrices[r], v(quotient))

    return la.dot(rep.u, v(n))


def brute_force_equal(rep1: LinearRepresentation, rep2: LinearRepresentation, max_len: int) -> bool:
    if rep1.q != rep2.q:
        raise ValueError(f"alphabet mismatch: q={rep1.q} vs q={rep2.q}")
    return all(eval_series(rep1, b) == eval_series(rep2, b) for b in words_up_to(rep1.q, max_len))


def first_difference(rep1: LinearRepresentation, rep2: LinearRepresentation, max_len: int):
    """First word (in enumeration order) where the two series differ, or ``None``."""
    for b in words_up_to(rep1.q, max_len):
        if eval_series(rep1, b) != eval_series(rep2, b):
            return b
    return None


def hankel_table(rep: LinearRepresentation, max_len: int, cap: int = DEFAULT_CELL_CAP) -> Tuple[List[Word], la.Matrix]:
    """Words of length <= max_len and the matrix ``x(b c)`` indexed by them."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    n = count_words(rep.q, max_len)
    if n * n > cap:
        raise TruncationTooLarge(f"truncation too large: {n}x{n} table exceeds {cap} cells")
    words = list(words_up_to(rep.q, max_len))
    # x(bc) = (u M(b)) (M(c) w); one vector per word instead of one product per cell
    lefts = [row_image(rep, rep.u, b) for b in words]
    rights = [column_image(rep, c, rep.w) for c in words]
    table = tuple(tuple(la.dot(left, right) for right in rights) for left in lefts)
    return words, table


def elimination_rank(rows) -> int:
    """Plain Gaussian elimination; deliberately separate from :class:`linalg.Basis`."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n_rows):
            f = m[i][c] / m[r][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def hankel_rank(rep: LinearRepresentation, max_len: int, cap: int = DEFAULT_CELL_CAP) -> int:
    _, table = hankel_table(rep, max_len, cap)
    return elimination_rank(table)
