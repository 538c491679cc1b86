import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recseq import fixtures
from recseq import linalg as la
from recseq.series import (
    LinearRepresentation,
    canonical_digits,
    eval_sequence,
    eval_series,
    rep_matrix_product,
    strip_trailing_zeros,
    word_value,
)

from corpus import reps, words


def all_words(q, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(q), repeat=n)


@pytest.mark.parametrize("b, q, n", [((), 2, 0), ((0, 1, 1), 2, 6), ((1, 1), 2, 3), ((2, 1), 3, 5)])
def test_word_value(b, q, n):
    assert word_value(b, q) == n


def test_word_value_rejects_bad_letter():
    with pytest.raises(ValueError):
        word_value((0, 2), 2)


@pytest.mark.parametrize("n, q, b", [(0, 2, ()), (6, 2, (0, 1, 1)), (5, 3, (2, 1))])
def test_canonical_digits(n, q, b):
    assert canonical_digits(n, q) == b


@pytest.mark.parametrize("b, stripped", [((1, 0, 0), (1,)), ((0, 1), (0, 1)), ((0, 0), ()), ((), ())])
def test_strip_trailing_zeros(b, stripped):
    assert strip_trailing_zeros(b) == stripped


@pytest.mark.parametrize("q", [2, 3, 10])
def test_digits_roundtrip(q):
    for n in range(500):
        b = canonical_digits(n, q)
        assert word_value(b, q) == n
        assert not b or b[-1] != 0


@given(st.lists(st.integers(0, 2), max_size=10))
def test_strip_properties(b):
    s = strip_trailing_zeros(b)
    assert strip_trailing_zeros(s) == s
    assert word_value(s, 3) == word_value(b, 3)
    assert tuple(b[: len(s)]) == s


def test_empty_word_product_is_identity():
    assert rep_matrix_product(fixtures.gone_wrong(), ()) == la.identity(2)
    assert rep_matrix_product(LinearRepresentation.zero(2), (0, 1)) == ()


def test_product_word_order():
    # M(0) M(1) = [[1,1],[0,0]] [[1,0],[0,0]], worked by hand
    assert rep_matrix_product(fixtures.gone_wrong(), (0, 1)) == la.matrix([[1, 0], [0, 0]])
    # reversed order would give M(1) M(0) = [[1,1],[0,0]]
    assert rep_matrix_product(fixtures.gone_wrong(), (1, 0)) == la.matrix([[1, 1], [0, 0]])


@pytest.mark.parametrize("length", range(7))
def test_constant_rep_power(length):
    rep = fixtures.constant_one_redundant()
    assert rep_matrix_product(rep, (1,) * length) == la.matrix([[1, 0], [0, 2 ** length]])


def test_product_matches_sympy():
    sympy = pytest.importorskip("sympy")
    rep = fixtures.binary_sum_of_digits()
    ms = [sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])
          for m in rep.matrices]
    for b in all_words(2, 5):
        expected = sympy.eye(2)
        for a in b:
            expected = expected * ms[a]
        got = rep_matrix_product(rep, b)
        assert [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in got] == expected.tolist()


def test_eval_series_examples():
    gw = fixtures.gone_wrong()
    assert eval_series(gw, (1,)) == 0
    assert eval_series(gw, (0,)) == 1
    assert eval_series(gw, ()) == 0
    red = fixtures.constant_one_redundant()
    assert all(eval_series(red, b) == 1 for b in all_words(2, 6))
    zero = LinearRepresentation.zero(3)
    assert all(eval_series(zero, b) == 0 for b in all_words(3, 3))


def test_eval_series_rejects_bad_letter():
    with pytest.raises(ValueError):
        eval_series(fixtures.gone_wrong(), (0, 5))


def test_eval_sequence_examples():
    gw = fixtures.gone_wrong()
    assert all(eval_sequence(gw, n) == 0 for n in range(200))
    assert eval_sequence(fixtures.binary_sum_of_digits(), 7) == 3


def test_representation_shape_checks():
    with pytest.raises(la.ShapeError):
        LinearRepresentation(2, (1, 0), (((1,),), ((1,),)), (1,))
    with pytest.raises(la.ShapeError):
        LinearRepresentation(2, (1,), (((1,),),), (1,))
    with pytest.raises(ValueError):
        LinearRepresentation(1, (1,), (((1,),),), (1,))


@given(reps(), st.data())
def test_product_homomorphism(rep, data):
    b = data.draw(words(rep.q, 4))
    c = data.draw(words(rep.q, 4))
    d = rep.dim
    assert rep_matrix_product(rep, b + c) == la.mat_mul(
        rep_matrix_product(rep, b), rep_matrix_product(rep, c), d
    )


@settings(max_examples=40)
@given(reps())
def test_eval_sequence_is_series_on_stripped_word(rep):
    for b in all_words(rep.q, 8 if rep.q == 2 else 5):
        assert eval_sequence(rep, word_value(b, rep.q)) == eval_series(rep, strip_trailing_zeros(b))


@given(reps(max_dim=3), st.data())
def test_conjugation_preserves_series(rep, data):
    d = rep.dim
    # unit upper triangular change of basis
    p = tuple(
        tuple(Fraction(int(i == j)) if j <= i else Fraction(data.draw(st.integers(-2, 2))) for j in range(d))
        for i in range(d)
    )
    conj = rep.conjugate(p)
    for b in all_words(rep.q, 3):
        assert eval_series(conj, b) == eval_series(rep, b)
