import pytest
from hypothesis import given, settings

from recseq import fixtures
from recseq import linalg as la
from recseq.oracle import brute_force_equal, hankel_rank, words_up_to
from recseq.reduction import (
    coreachability_basis,
    is_zero_series,
    left_reduce,
    minimise,
    reachability_basis,
    right_reduce,
    series_equal,
)
from recseq.series import LinearRepresentation, column_image, eval_series, row_image

from corpus import paper_fixtures, reps, seeded_corpus

CORPUS = paper_fixtures() + seeded_corpus(60, seed=7)


def test_reachability_examples():
    closure = reachability_basis(fixtures.constant_one_redundant())
    assert closure.vectors == ((1, 0),)
    assert closure.witnesses == ((),)

    closure = reachability_basis(fixtures.gone_wrong())
    assert closure.vectors == ((1, 0), (1, 1))
    assert closure.witnesses == ((), (0,))

    zero_u = LinearRepresentation(2, (0, 0), fixtures.gone_wrong().matrices, (0, 1))
    assert len(reachability_basis(zero_u)) == 0


def test_coreachability_examples():
    closure = coreachability_basis(fixtures.gone_wrong())
    assert closure.vectors == ((0, 1), (1, 0))
    closure = coreachability_basis(fixtures.constant_one_redundant())
    assert closure.vectors == ((1, 1), (1, 2))


def test_left_reduce_examples():
    red = left_reduce(fixtures.constant_one_redundant())
    assert red == fixtures.constant_one_minimal()
    assert left_reduce(fixtures.gone_wrong()).dim == 2
    assert left_reduce(LinearRepresentation.zero(2)).dim == 0


def test_right_reduce_examples():
    # the redundant constant rep is co-reachable in full, so this pass alone keeps it at 2
    assert right_reduce(fixtures.constant_one_redundant()).dim == 2
    assert right_reduce(fixtures.gone_wrong()).dim == 2
    assert right_reduce(LinearRepresentation.zero(3)).dim == 0


def test_minimise_examples():
    assert minimise(fixtures.constant_one_redundant()).dim == 1
    assert minimise(fixtures.gone_wrong()).dim == 2
    assert minimise(LinearRepresentation.zero(2)).dim == 0
    assert hankel_rank(fixtures.gone_wrong(), 2) == 2


def test_is_zero_series_examples():
    assert is_zero_series(LinearRepresentation.zero(2))
    assert not is_zero_series(fixtures.gone_wrong())
    assert is_zero_series(LinearRepresentation(2, (0, 0), fixtures.gone_wrong().matrices, (0, 1)))


def test_series_equal_examples():
    assert series_equal(fixtures.constant_one_minimal(), fixtures.constant_one_redundant())
    assert not series_equal(fixtures.constant_one_minimal(), fixtures.gone_wrong())
    for rep in paper_fixtures():
        assert series_equal(rep, rep)
    with pytest.raises(ValueError):
        series_equal(fixtures.gone_wrong(), LinearRepresentation.zero(3))


def test_minimise_is_deterministic():
    rep = seeded_corpus(1, seed=3, dims=(4,))[0]
    assert minimise(rep) == minimise(rep)


@pytest.mark.parametrize("rep", CORPUS)
def test_closure_invariants(rep):
    d = rep.dim
    closure = reachability_basis(rep)
    for v, b in zip(closure.vectors, closure.witnesses):
        assert v == row_image(rep, rep.u, b)
        for m in rep.matrices:
            assert la.vec_mat(v, m, d) in closure.basis
    co = coreachability_basis(rep)
    for v, b in zip(co.vectors, co.witnesses):
        assert v == column_image(rep, b, rep.w)
        for m in rep.matrices:
            assert la.mat_vec(m, v) in co.basis


@pytest.mark.parametrize("rep", CORPUS)
def test_minimise_properties(rep):
    small = minimise(rep)
    assert small.dim <= rep.dim
    assert minimise(small).dim == small.dim
    for b in words_up_to(rep.q, 6 if rep.q == 2 else 4):
        assert eval_series(small, b) == eval_series(rep, b)
    assert hankel_rank(rep, small.dim) == small.dim
    # minimal representations span the whole row and column space
    assert len(reachability_basis(small)) == small.dim
    assert len(coreachability_basis(small)) == small.dim
    assert series_equal(rep, small) and series_equal(small, rep)


@pytest.mark.parametrize("rep", CORPUS)
def test_eigenvector_condition_on_minimal(rep):
    small = minimise(rep)
    for z in range(rep.q):
        invariant = all(
            eval_series(rep, b + (z,)) == eval_series(rep, b)
            for b in words_up_to(rep.q, 6 if rep.q == 2 else 4)
        )
        if invariant:
            assert la.mat_vec(small.matrices[z], small.w) == small.w


def test_eigenvector_condition_triggers_on_constant():
    small = minimise(fixtures.constant_one_redundant())
    for z in (0, 1):
        assert la.mat_vec(small.matrices[z], small.w) == small.w


@settings(max_examples=60, deadline=None)
@given(reps())
def test_minimise_brute_force(rep):
    assert brute_force_equal(rep, minimise(rep), 6 if rep.q == 2 else 4)


@settings(max_examples=60, deadline=None)
@given(reps(), reps())
def test_series_equal_symmetric_and_sound(rep1, rep2):
    if rep1.q != rep2.q:
        return
    verdict = series_equal(rep1, rep2)
    assert verdict == series_equal(rep2, rep1)
    # total dimension bounds the length of a shortest separating word
    bound = rep1.dim + rep2.dim
    assert verdict == brute_force_equal(rep1, rep2, max(bound - 1, 0))


def _padded(rep, junk):
    """rep plus an unreachable junk block and a duplicated copy splitting w in half."""
    half = tuple(x / 2 for x in rep.w)
    mats = tuple(
        la.block_diag(la.block_diag(m, m), j) for m, j in zip(rep.matrices, junk.matrices)
    )
    return LinearRepresentation(
        rep.q, rep.u + rep.u + la.zeros(junk.dim), mats, half + half + junk.w
    )


@settings(max_examples=60)
@given(reps(max_dim=2), reps(max_dim=2))
def test_minimise_strips_padding(rep, junk):
    if rep.q != junk.q:
        return
    padded = _padded(rep, junk)
    assert padded.dim == 2 * rep.dim + junk.dim
    small = minimise(padded)
    assert small.dim == minimise(rep).dim
    assert series_equal(small, rep)
