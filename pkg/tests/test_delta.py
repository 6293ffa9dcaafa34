import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_cr
from rectcross import _backend
from rectcross.delta import (DeltaResult, batch_add, batch_move, batch_remove, insertion_f,
                             removal_f)
from rectcross.errors import CollinearPoints, NotAMember, OverlapError
from rectcross.lambdas import crossing_number, crossing_number_from_lambda, lambda_matrix
from rectcross.sampling import convex_points, random_points, random_split

SQUARE4 = [(0, 0), (4, 0), (4, 4), (0, 4)]
PENTAGON = [(0, 0), (4, 0), (9, 2), (4, 4), (0, 4)]


def recompute(points):
    return crossing_number_from_lambda(lambda_matrix(points))


def test_assembly_signs_are_pinned():
    # removal subtracts the point's row and column, insertion adds them
    assert removal_f(100, 7, 5, 3) == 91
    assert insertion_f(100, 7, 5, 3) == 115
    assert removal_f(100, 7, 5, -3) == 85
    assert insertion_f(100, 7, 5, -3) == 109


def test_batch_remove_examples(backend):
    assert list(batch_remove(PENTAGON).values()) == [1] * 5
    got = batch_remove([(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)])
    assert dict(got) == {(1, 2): 1, (0, 0): 1, (4, 0): 0, (4, 4): 0, (0, 4): 1}
    assert list(batch_remove(SQUARE4).values()) == [0] * 4
    assert len(batch_remove([])) == 0


def test_batch_add_examples(backend):
    assert dict(batch_add(SQUARE4, [(1, 2), (9, 2)])) == {(1, 2): 3, (9, 2): 5}
    assert len(batch_add(SQUARE4, [])) == 0
    assert dict(batch_add([(0, 0), (4, 0), (0, 4)], [(5, 5)])) == {(5, 5): 1}


def test_batch_move_examples(backend):
    assert dict(batch_move(SQUARE4, (0, 4), [(1, 2)])) == {(1, 2): 1}
    assert dict(batch_move(SQUARE4, (0, 4), [(9, 2)])) == {(9, 2): 1}
    assert dict(batch_move(SQUARE4, (0, 4), [(0, 4)])) == {(0, 4): crossing_number(SQUARE4)}


def test_examples_agree_with_segment_definition():
    S = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)]
    for p in S:
        assert batch_remove(S)[p] == brute_cr([q for q in S if q != p])
    for q in [(1, 2), (9, 2)]:
        assert batch_add(SQUARE4, [q])[q] == brute_cr(SQUARE4 + [q])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 9, 17, 33])
def test_remove_equals_recompute(backend, rng, n):
    for _ in range(5):
        S = random_points(n, rng, bound=10**5)
        res = batch_remove(S)
        assert list(res) == list(S)
        for p in S:
            assert res[p] == recompute(S.without(p))


@pytest.mark.parametrize("n, k", [(0, 3), (1, 2), (3, 3), (4, 4), (10, 5), (25, 25)])
def test_add_equals_recompute(backend, rng, n, k):
    for _ in range(5):
        S, C = random_split(n, k, rng, bound=10**5)
        res = batch_add(S, C)
        assert list(res) == list(C)
        for q in C:
            assert res[q] == recompute(S.plus(q))


@pytest.mark.parametrize("n", [4, 12, 30])
def test_move_equals_recompute(backend, rng, n):
    for _ in range(5):
        S, C = random_split(n, n, rng, bound=10**5)
        p = S[int(rng.integers(n))]
        res = batch_move(S, p, C)
        assert dict(res) == dict(batch_add(S.without(p), C))
        for q in C:
            assert res[q] == recompute(S.replace(p, q))


@settings(max_examples=25, deadline=None)
@given(st.integers(5, 120), st.integers(0, 2**32))
def test_recompute_equivalence_property(n, seed):
    rng = np.random.default_rng(seed)
    S, C = random_split(n, max(1, n // 4), rng)
    rem = batch_remove(S)
    add = batch_add(S, C)
    for p in list(S)[:5]:
        assert rem[p] == crossing_number(S.without(p))
    for q in list(C)[:5]:
        assert add[q] == crossing_number(S.plus(q))


def test_add_then_remove_is_identity(backend, rng):
    for _ in range(10):
        S, C = random_split(15, 4, rng, bound=10**4)
        cr = crossing_number(S)
        for q in C:
            assert batch_remove(S.plus(q))[q] == cr


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tiny_sets_have_no_correction(backend, rng, n):
    S = random_points(n, rng, bound=100)
    f, row, col, nabla = _backend.kernels.remove_terms(S.xs, S.ys)
    assert f == 0 and not row.any() and not col.any() and not nabla.any()


def test_overlap_and_membership_errors(backend):
    with pytest.raises(OverlapError):
        batch_add(SQUARE4, [(4, 4)])
    with pytest.raises(NotAMember):
        batch_move(SQUARE4, (1, 1), [(2, 1)])


def test_candidate_collinear_with_set_is_rejected(backend):
    with pytest.raises(CollinearPoints) as e:
        batch_add(SQUARE4, [(1, 2), (2, 2)])
    assert (2, 2) in e.value.points


def test_collinear_candidates_among_themselves_are_fine(backend):
    C = [(1, 2), (2, 3), (5, 6), (-3, -2)]
    res = batch_add(SQUARE4, C)
    for q in C:
        assert res[q] == brute_cr(SQUARE4 + [q])


def test_collinear_base_set_is_rejected(backend):
    with pytest.raises(CollinearPoints):
        batch_remove([(0, 0), (1, 1), (2, 2), (5, 0)])


def test_convex_removals(backend):
    for n in range(5, 12):
        assert set(batch_remove(convex_points(n)).values()) == {math.comb(n - 1, 4)}


def test_delta_result_order_and_best():
    res = DeltaResult("add", [(3, 3), (1, 1), (2, 2)], [5, 2, 2])
    assert list(res) == [(3, 3), (1, 1), (2, 2)]
    assert res.best() == ((1, 1), 2)
    assert res[(2, 2)] == 2
