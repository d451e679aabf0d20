"""Dense linear algebra over prime fields GF(p).

Matrices are plain 2-D ``numpy`` integer arrays whose entries lie in
``[0, p)``. Every routine copies its input, so callers never observe
mutation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import ParameterError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class GF:
    """A prime field GF(p)."""

    p: int = 2

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not _is_prime(int(self.p)):
            raise ParameterError(f"field modulus must be prime, got {self.p!r}")

    def __str__(self):
        return f"GF({self.p})"

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def matrix(self, data) -> np.ndarray:
        """Coerce ``data`` to a reduced 2-D int64 array."""
        arr = np.array(data, dtype=np.int64, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ParameterError(f"expected a 2-D matrix, got shape {arr.shape}")
        return arr % self.p

    def vector(self, data) -> np.ndarray:
        arr = np.array(data, dtype=np.int64, copy=True).reshape(-1)
        return arr % self.p


GF2 = GF(2)


@njit(cache=True)
def _eliminate(A, p, ncols):
    # in-place Gauss-Jordan on A[:, :ncols]; returns pivot columns
    rows = A.shape[0]
    cols = A.shape[1]
    pivots = np.empty(min(rows, ncols), dtype=np.int64)
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        i = r
        while i < rows and A[i, c] == 0:
            i += 1
        if i == rows:
            continue
        if i != r:
            for j in range(cols):
                tmp = A[r, j]
                A[r, j] = A[i, j]
                A[i, j] = tmp
        lead = A[r, c]
        if lead != 1:
            # Fermat inverse; p is prime
            inv = 1
            base = lead
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for j in range(cols):
                A[r, j] = (A[r, j] * inv) % p
        # pivot rows are typically sparse: touch only their nonzero columns
        nz = np.empty(cols - c, dtype=np.int64)
        n_nz = 0
        for j in range(c, cols):
            if A[r, j] != 0:
                nz[n_nz] = j
                n_nz += 1
        for i2 in range(rows):
            f = A[i2, c]
            if i2 == r or f == 0:
                continue
            if p == 2:
                for q in range(n_nz):
                    A[i2, nz[q]] ^= 1
            else:
                for q in range(n_nz):
                    j = nz[q]
                    A[i2, j] = (A[i2, j] - f * A[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


def rref(M, field: GF = GF2, ncols: int | None = None):
    """Reduced row echelon form of ``M`` over ``field``.

    Only the first ``ncols`` columns are used for pivoting (all columns by
    default), which lets callers carry augmented right-hand sides along.
    Pivot choice is deterministic: leftmost nonzero column, lowest row.

    Returns ``(R, pivots)`` where ``pivots`` lists the pivot column indices.
    """
    A = np.ascontiguousarray(field.matrix(M))
    if ncols is None:
        ncols = A.shape[1]
    pivots = _eliminate(A, field.p, ncols)
    return A, [int(c) for c in pivots]


def rank(M, field: GF = GF2) -> int:
    """Row rank of ``M`` over ``field``. An empty matrix has rank 0."""
    A = np.ascontiguousarray(field.matrix(M))
    if A.size == 0:
        return 0
    return len(_eliminate(A, field.p, A.shape[1]))


def matmul(A, B, field: GF = GF2) -> np.ndarray:
    """``A @ B`` over ``field`` for reduced integer arrays.

    Goes through float64 (BLAS) whenever every partial sum stays below
    ``2**53`` and is therefore exact, then int64, then Python integers.
    """
    A = np.asarray(A)
    B = np.asarray(B)
    bound = (A.shape[-1] if A.ndim else 1) * (field.p - 1) ** 2
    if bound < 2**53:
        out = A.astype(np.float64) @ B.astype(np.float64)
        return out.astype(np.int64) % field.p
    if bound < 2**63:
        return (A.astype(np.int64) @ B.astype(np.int64)) % field.p
    return ((A.astype(object) @ B.astype(object)) % field.p).astype(np.int64)


def _check_cols(v: np.ndarray, S: np.ndarray):
    if S.size and v.shape[0] != S.shape[1]:
        raise ParameterError(
            f"dimension mismatch: vector has {v.shape[0]} entries, matrix has {S.shape[1]} columns"
        )


def in_span(v, S, field: GF = GF2) -> bool:
    """True iff the row vector ``v`` lies in the row space of ``S``."""
    v = field.vector(v)
    S = field.matrix(S)
    _check_cols(v, S)
    if not v.any():
        return True
    if S.size == 0:
        return False
    return rank(S, field) == rank(np.vstack([S, v]), field)


def solve_left_many(S, V, field: GF = GF2) -> list:
    """Solve ``w @ S == v`` for every row ``v`` of ``V``.

    Each entry of the result is either a coefficient vector of length
    ``S.shape[0]`` or ``None`` when that ``v`` is outside the row space.
    Free variables are set to zero.
    """
    S = field.matrix(S)
    V = field.matrix(V)
    n_rows = S.shape[0]
    if V.size == 0:
        return []
    if S.size == 0:
        return [np.zeros(n_rows, dtype=np.int64) if not v.any() else None for v in V]
    if V.shape[1] != S.shape[1]:
        raise ParameterError(
            f"dimension mismatch: vectors have {V.shape[1]} entries, matrix has {S.shape[1]} columns"
        )
    # w S = v  <=>  S^T w^T = v^T; reduce [S^T | V^T] on the first n_rows columns.
    aug = np.hstack([S.T, V.T])
    R, pivots = rref(aug, field, ncols=n_rows)
    rk = len(pivots)
    rhs = R[:, n_rows:]
    out = []
    for j in range(V.shape[0]):
        if rhs[rk:, j].any():
            out.append(None)
            continue
        w = np.zeros(n_rows, dtype=np.int64)
        w[pivots] = rhs[:rk, j]
        out.append(w)
    return out


def solve_left(S, v, field: GF = GF2):
    """One ``w`` with ``w @ S == v`` over ``field``, or ``None``."""
    v = field.vector(v)
    S = field.matrix(S)
    _check_cols(v, S)
    return solve_left_many(S, v.reshape(1, -1), field)[0]


@njit(cache=True)
def _isolating(M, subsets, targets, p):
    n_sets, r = subsets.shape
    n_t = targets.shape[1]
    cols = M.shape[1]
    W = np.zeros((n_sets, n_t, cols), dtype=np.int64)
    ok = np.ones((n_sets, n_t), dtype=np.bool_)
    for s in range(n_sets):
        # [M[subset] | unit columns at the target positions]
        A = np.zeros((r, cols + n_t), dtype=np.int64)
        for i in range(r):
            A[i, :cols] = M[subsets[s, i], :]
        for j in range(n_t):
            A[targets[s, j], cols + j] = 1
        piv = _eliminate(A, p, cols)
        rk = piv.shape[0]
        for j in range(n_t):
            for i in range(rk, r):
                if A[i, cols + j] != 0:
                    ok[s, j] = False
                    break
            if ok[s, j]:
                for i in range(rk):
                    W[s, j, piv[i]] = A[i, cols + j]
    return W, ok


def isolating_combinations(M, subsets, targets, field: GF = GF2):
    """Column weights that isolate one row of each row subset.

    For every subset ``s`` and target position ``j``, finds ``w`` with
    ``M[subsets[s]] @ w == e_{targets[s, j]}``; this is
    ``solve_left(M[subsets[s]].T, e)`` with the same free-variable
    convention. Returns ``(W, ok)`` with ``W`` of shape
    ``(n_sets, n_targets, M.shape[1])``; ``W[s, j]`` is meaningless where
    ``ok[s, j]`` is false.
    """
    M = np.ascontiguousarray(field.matrix(M))
    subsets = np.ascontiguousarray(subsets, dtype=np.int64)
    targets = np.ascontiguousarray(targets, dtype=np.int64)
    if subsets.ndim != 2 or targets.ndim != 2 or targets.shape[0] != subsets.shape[0]:
        raise ParameterError("subsets and targets must be 2-D with matching first dimension")
    if targets.size and (targets.min() < 0 or targets.max() >= subsets.shape[1]):
        raise ParameterError("target positions must index into the subset")
    return _isolating(M, subsets, targets, field.p)

