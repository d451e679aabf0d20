"""Brute-force ground truth for tiny instances, scalar (t = 1) over GF(2).

Nothing here touches :mod:`aircodes.field`; spans are enumerated
explicitly so the results can cross-check the main pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import ParameterError
from .problem import SciInstance, interference_set

K_LIMIT = 6
N_LIMIT = 5
BLIND_LIMIT = 20


@dataclass(frozen=True)
class OracleResult:
    minimal_length: int
    witness: np.ndarray  # K x minimal_length, first decodable matrix in canonical order


@lru_cache(maxsize=None)
def _span_mask(rows: tuple) -> int:
    """Bitset over ``range(2**N)`` of every GF(2) combination of ``rows``."""
    span = {0}
    for r in rows:
        span |= {v ^ r for v in span}
    mask = 0
    for v in span:
        mask |= 1 << v
    return mask


def _first_code(inst: SciInstance, n: int):
    K = inst.K
    full = (1 << (1 << n)) - 1
    blind = [sorted(interference_set(inst, k)) for k in range(K)]
    rows = [0] * K

    def viable(depth):
        # spans only grow as rows are added, so a receiver that already
        # fails on the assigned rows fails in every completion
        for k in range(K):
            span = _span_mask(tuple(rows[i] for i in blind[k] if i <= depth))
            if span == full or (k <= depth and (span >> rows[k]) & 1):
                return False
        return True

    def search(depth):
        if depth == K:
            return True
        for value in range(1 << n):
            rows[depth] = value
            if viable(depth) and search(depth + 1):
                return True
        return False

    if not search(0):
        return None
    bits = [[(r >> (n - 1 - j)) & 1 for j in range(n)] for r in rows]
    return np.array(bits, dtype=np.int64)


def minimal_scalar_code(inst: SciInstance, n_max: int) -> OracleResult | None:
    """Smallest ``N <= n_max`` admitting a decodable ``K x N`` binary code.

    Matrices are ordered by their row-major bit string, row 0 most
    significant, and the first decodable one is returned. The depth-first
    search below visits them in exactly that order and only discards
    prefixes that no completion can rescue, so the witness is the one
    exhaustive enumeration would give.
    """
    if inst.K > K_LIMIT:
        raise ParameterError(f"oracle search needs K <= {K_LIMIT}, got {inst.K}")
    if not 1 <= n_max <= N_LIMIT:
        raise ParameterError(f"oracle search needs 1 <= n_max <= {N_LIMIT}, got {n_max}")
    for n in range(1, n_max + 1):
        witness = _first_code(inst, n)
        if witness is not None:
            return OracleResult(n, witness)
    return None


def check_decodable_bruteforce(encoding, inst: SciInstance) -> bool:
    """Every receiver's row lies outside the GF(2) span of its interference rows.

    The span is listed in full: all ``2**|I_k|`` subset sums.
    """
    L = np.asarray(encoding, dtype=np.int64) % 2
    if L.ndim != 2 or L.shape[0] != inst.K:
        raise ParameterError(f"need a {inst.K}-row matrix, got shape {L.shape}")
    for k in range(inst.K):
        blind = sorted(interference_set(inst, k))
        if len(blind) > BLIND_LIMIT:
            raise ParameterError(f"receiver {k} has {len(blind)} interferers; enumeration capped at {BLIND_LIMIT}")
        choices = np.array(list(product((0, 1), repeat=len(blind))), dtype=np.int64).reshape(1 << len(blind), len(blind))
        sums = choices @ L[blind] % 2
        if (sums == L[k]).all(axis=1).any():
            return False
    return True
