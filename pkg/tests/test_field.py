import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from aircodes.air import build_air
from aircodes.errors import ParameterError
from aircodes.field import (
    GF,
    GF2,
    in_span,
    isolating_combinations,
    matmul,
    rank,
    rref,
    solve_left,
    solve_left_many,
)
from conftest import grid, sympy_rank
from tables import AIR_18_12

PRIMES = [2, 3, 5]


def small_matrices(max_side=6):
    shapes = st.tuples(st.integers(1, max_side), st.integers(1, max_side))
    return shapes.flatmap(lambda s: arrays(np.int64, s, elements=st.integers(0, 4)))


def test_rejects_composite_modulus():
    for p in (0, 1, 4, 9):
        with pytest.raises(ParameterError):
            GF(p)


def test_inverse():
    F = GF(7)
    assert all(a * F.inv(a) % 7 == 1 for a in range(1, 7))
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_rank_examples():
    assert rank(np.eye(3, dtype=int)) == 3
    assert rank(np.zeros((4, 2), dtype=int)) == 0
    assert rank(np.zeros((0, 0), dtype=int)) == 0
    assert rank(grid(AIR_18_12)) == 12


def test_rank_depends_on_field():
    M = [[1, 1], [1, 3]]
    assert rank(M, GF(2)) == 1
    assert rank(M, GF(3)) == 2


@pytest.mark.parametrize("p", PRIMES)
@given(M=small_matrices())
def test_rank_matches_independent_oracle(p, M):
    assert rank(M, GF(p)) == sympy_rank(M, p)


@pytest.mark.parametrize("p", PRIMES)
@given(M=small_matrices(), seed=st.integers(0, 2**16))
def test_rank_invariances(p, M, seed):
    F = GF(p)
    r = rank(M, F)
    assert r == rank(M.T, F)
    gen = np.random.default_rng(seed)
    scaled = M[gen.permutation(M.shape[0])] * gen.integers(1, p, size=(M.shape[0], 1))
    assert rank(scaled, F) == r


def test_rank_does_not_mutate_input():
    M = np.array([[1, 1], [1, 0]])
    before = M.copy()
    rank(M)
    rref(M)
    assert np.array_equal(M, before)


def test_rref_pivots_and_form():
    R, piv = rref([[0, 1, 1], [1, 1, 0], [1, 0, 1]], GF2)
    assert piv == [0, 1]
    assert np.array_equal(R, [[1, 0, 1], [0, 1, 1], [0, 0, 0]])


def test_in_span_examples():
    I3 = np.eye(3, dtype=int)
    assert not in_span(I3[0], I3[1:])
    assert in_span([0, 0, 0], I3[1:])
    assert in_span([0, 0, 0], np.zeros((0, 3), dtype=int))
    air = grid(AIR_18_12)
    assert in_span(air[12], air[[0, 6]])
    assert not in_span(air[12], air[[0, 7]])


def test_in_span_dimension_mismatch():
    with pytest.raises(ParameterError):
        in_span([1, 0], np.eye(3, dtype=int))
    with pytest.raises(ParameterError):
        solve_left(np.eye(3, dtype=int), [1, 0])


def test_solve_left_examples():
    assert list(solve_left(np.eye(2, dtype=int), [1, 1])) == [1, 1]
    assert solve_left([[0, 1]], [1, 0]) is None
    air = grid(AIR_18_12)
    S = air[[0, 6, 12]]
    e0 = np.eye(12, dtype=int)[0]
    w = solve_left(S, e0)
    assert np.array_equal(w @ S % 2, e0)
    # free variable (row 12's coefficient) is zero under the RREF convention
    assert list(w) == [1, 0, 0]


@pytest.mark.parametrize("p", PRIMES)
@given(S=small_matrices(), coeffs=arrays(np.int64, 6, elements=st.integers(0, 4)))
def test_solve_left_recovers_span_members(p, S, coeffs):
    F = GF(p)
    v = coeffs[: S.shape[0]] @ S % p
    assert in_span(v, S, F)
    w = solve_left(S, v, F)
    assert w is not None
    assert np.array_equal(w @ S % p, v)


@pytest.mark.parametrize("p", PRIMES)
@given(S=small_matrices(), v=arrays(np.int64, 6, elements=st.integers(0, 4)))
def test_solve_left_agrees_with_in_span(p, S, v):
    v = v[: S.shape[1]]
    F = GF(p)
    w = solve_left(S, v, F)
    assert (w is not None) == in_span(v, S, F)


def test_solve_left_many_empty_cases():
    assert solve_left_many(np.eye(2, dtype=int), np.zeros((0, 2), dtype=int)) == []
    out = solve_left_many(np.zeros((0, 2), dtype=int), [[0, 0], [1, 0]])
    assert out[1] is None and out[0].size == 0


@pytest.mark.parametrize("p", [2, 3])
@given(M=small_matrices(), seed=st.integers(0, 2**16))
def test_isolating_combinations_match_solve_left(p, M, seed):
    F = GF(p)
    gen = np.random.default_rng(seed)
    r = int(gen.integers(1, M.shape[0] + 1))
    subsets = np.array([gen.permutation(M.shape[0])[:r] for _ in range(3)])
    targets = gen.integers(0, r, size=(3, 2))
    W, ok = isolating_combinations(M, subsets, targets, F)
    for s in range(3):
        sub = F.matrix(M)[subsets[s]]
        for j in range(2):
            e = np.zeros(r, dtype=np.int64)
            e[targets[s, j]] = 1
            w = solve_left(sub.T, e, F)
            assert ok[s, j] == (w is not None)
            if w is not None:
                assert np.array_equal(W[s, j], w)
                assert np.array_equal(sub @ W[s, j] % p, e)


def test_isolating_combinations_validates_targets():
    with pytest.raises(ParameterError):
        isolating_combinations(np.eye(2, dtype=int), [[0, 1]], [[2]])


@pytest.mark.parametrize("p", [2, 3, 65537, 2**31 - 1])
def test_matmul_exact(p):
    gen = np.random.default_rng(p)
    A = gen.integers(0, p, size=(7, 9))
    B = gen.integers(0, p, size=(9, 4))
    expect = np.array([[sum(int(A[i, k]) * int(B[k, j]) for k in range(9)) % p for j in range(4)] for i in range(7)])
    assert np.array_equal(matmul(A, B, GF(p)), expect)


def test_large_air_rank():
    A = build_air(64, 40).matrix
    assert rank(A, GF(3)) == 40
