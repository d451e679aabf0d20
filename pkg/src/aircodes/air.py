"""Adjacent-row-independent (AIR) matrices.

An ``(g, h)`` AIR matrix is a binary ``g x h`` matrix in which any ``h``
cyclically adjacent rows are linearly independent over every field. It is
built by alternately tiling the unfilled part of the matrix with stacked
identities (a row block) and side-by-side identities (a column block),
like a Euclidean remainder sequence on the dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

import numpy as np

from .errors import ParameterError
from .field import GF, GF2, isolating_combinations


@dataclass(frozen=True)
class FillStep:
    """One tiling step: a ``rows x cols`` block of ``copies`` identities of size ``size``."""

    orientation: str  # "rows" (stacked I_size) or "cols" (I_size side by side)
    row_offset: int
    col_offset: int
    rows: int
    cols: int
    size: int
    copies: int

    @property
    def label(self) -> str:
        sep = ";" if self.orientation == "rows" else "|"
        return sep.join([f"I_{self.size}"] * self.copies)

    def as_dict(self) -> dict:
        return {
            "orientation": self.orientation,
            "row_offset": self.row_offset,
            "col_offset": self.col_offset,
            "shape": [self.rows, self.cols],
            "block": self.label,
        }


@dataclass(frozen=True)
class AirMatrix:
    g: int
    h: int
    matrix: np.ndarray = dc_field(repr=False)
    trace: tuple = ()

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def shape(self):
        return self.matrix.shape

    def row(self, k: int) -> np.ndarray:
        return self.matrix[k % self.g]

    def rows(self, indices) -> np.ndarray:
        return self.matrix[[i % self.g for i in indices]]


@dataclass(frozen=True)
class LambdaChain:
    """Remainder chain ``lambda_{-1} = h``, ``lambda_0 = g - h``, ...

    ``lambdas[i + 1]`` holds lambda_i, ending with the terminal zero.
    ``betas[i]`` holds beta_i.
    """

    lambdas: tuple
    betas: tuple

    def lam(self, i: int) -> int:
        return self.lambdas[i + 1]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.betas) - 1


def _check_dims(g: int, h: int):
    if h < 1 or g < h:
        raise ParameterError(f"AIR matrix needs g >= h >= 1, got g={g}, h={h}")


def _stacked_identity(c: int, d: int) -> np.ndarray:
    # I_{c x d}: c/d copies of I_d stacked vertically
    return np.tile(np.eye(d, dtype=np.int64), (c // d, 1))


def build_air(g: int, h: int) -> AirMatrix:
    """Construct the ``g x h`` AIR matrix."""
    _check_dims(g, h)
    L = np.zeros((g, h), dtype=np.int64)
    trace = []
    r0 = c0 = 0
    mm, nn = g, h
    while True:
        q, r = divmod(mm, nn)
        L[r0:r0 + q * nn, c0:c0 + nn] = _stacked_identity(q * nn, nn)
        trace.append(FillStep("rows", r0, c0, q * nn, nn, nn, q))
        r0 += q * nn
        if r == 0:
            break
        q2, r2 = divmod(nn, r)
        L[r0:r0 + r, c0:c0 + q2 * r] = _stacked_identity(q2 * r, r).T
        trace.append(FillStep("cols", r0, c0, r, q2 * r, r, q2))
        c0 += q2 * r
        if r2 == 0:
            break
        mm, nn = r, r2
    return AirMatrix(g, h, L, tuple(trace))


def lambda_chain(g: int, h: int) -> LambdaChain:
    _check_dims(g, h)
    lambdas = [h, g - h]
    betas = []
    if g == h:
        return LambdaChain(tuple(lambdas), ())
    while lambdas[-1] != 0:
        beta, rem = divmod(lambdas[-2], lambdas[-1])
        betas.append(beta)
        lambdas.append(rem)
    return LambdaChain(tuple(lambdas), tuple(betas))


def air_neighbourhood(g: int, h: int, k: int):
    """Row indices that row ``k`` must stay independent of.

    ``h - 1`` rows above and ``gcd(g, h) - 1`` rows below, cyclically.
    """
    above = [(k - s) % g for s in range(1, h)]
    below = [(k + s) % g for s in range(1, gcd(g, h))]
    return sorted(set(above + below) - {k})


def check_air_property(A, field: GF = GF2) -> bool:
    """Check the row-isolation property of an AIR matrix.

    Row ``k`` must lie outside the span of its :func:`air_neighbourhood`.
    Accepts an :class:`AirMatrix` or any 2-D array (``h`` is then the
    column count).
    """
    M = A.matrix if isinstance(A, AirMatrix) else field.matrix(A)
    g, h = M.shape
    if g == 0 or h == 0 or h > g:
        return False
    # row k sits first in its subset; isolating it means it is outside
    # the span of the rest
    subsets = np.array([[k, *air_neighbourhood(g, h, k)] for k in range(g)], dtype=np.int64)
    _, ok = isolating_combinations(M, subsets, np.zeros((g, 1), dtype=np.int64), field)
    return bool(ok.all())


def adjacent_windows_independent(A, field: GF = GF2) -> bool:
    """True iff every ``h`` cyclically adjacent rows have full rank ``h``."""
    M = A.matrix if isinstance(A, AirMatrix) else field.matrix(A)
    g, h = M.shape
    if h > g:
        return False
    # a set of rows is independent iff each of them can be isolated
    windows = (np.arange(g)[:, None] + np.arange(h)) % g
    _, ok = isolating_combinations(M, windows, np.tile(np.arange(h), (g, 1)), field)
    return bool(ok.all())
