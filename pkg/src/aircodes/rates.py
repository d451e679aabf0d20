"""Achievable rate pairs, broadcast-rate bounds and capacity formulas.

All quantities are exact: integers and ``gmpy2.mpq`` rationals, which
compare and hash equal to :class:`fractions.Fraction`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

from .errors import ParameterError
from .problem import SciInstance

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatePair:
    """A candidate ``(a, b)`` with its gcd witness ``gcd(bK, b(D+2m+1)+a)``."""

    a: int
    b: int
    gcd_witness: int
    threshold: int
    member: bool
    length: int  # b(D+2m+1) + a, the number of broadcast symbols

    def __iter__(self):
        yield self.a
        yield self.b


@dataclass(frozen=True)
class OptimalPair:
    a_min: int
    b_min: int
    achieved_rate: mpq
    diagnostic: str | None = None

    def __iter__(self):
        yield self.a_min
        yield self.b_min


@dataclass(frozen=True)
class FallbackPair:
    alpha: int
    gamma: int

    def __iter__(self):
        yield self.alpha
        yield self.gamma


@dataclass(frozen=True)
class RateBound:
    lower: mpq
    upper: mpq
    capacity: mpq | None = None

    @property
    def gap(self) -> mpq:
        return self.upper - self.lower


def is_member(inst: SciInstance, a: int, b: int) -> RatePair:
    if b < 1 or a < 0:
        raise ParameterError(f"need a >= 0 and b >= 1, got a={a}, b={b}")
    witness = gcd(b * inst.K, b * inst.span + a)
    threshold = b * (inst.U + 2 * inst.m + 1)
    return RatePair(a, b, witness, threshold, witness >= threshold, b * inst.span + a)


def achieved_rate(inst: SciInstance, a: int, b: int) -> mpq:
    """``1 + (D + m + a/b)/(m + 1)``, i.e. code length over message dimension."""
    return mpq(b * inst.span + a, b * (inst.m + 1))


def fallback_pair(inst: SciInstance) -> FallbackPair:
    gamma, alpha = divmod(inst.K, inst.span)
    return FallbackPair(alpha, gamma)


@lru_cache(maxsize=1 << 18)
def _reduced_members(K: int, span: int, thr: int) -> tuple:
    """Every member pair is a multiple of one of these reduced pairs.

    ``(a, b)`` is a member iff ``(b*span + a)/(b*K)`` in lowest terms has a
    denominator ``k <= K // thr``. For each such ``k`` the smallest numerator
    ``n`` coprime to ``k`` with ``n/k >= span/K`` gives the smallest ``a``,
    namely ``(K*n - span*k)/gcd(K, k)`` with ``b = k/gcd(K, k)``; larger
    numerators only increase ``a`` at the same ``b``.
    """
    out = []
    for k in range(1, K // thr + 1):
        g = gcd(K, k)
        n = -(-span * k // K)
        while gcd(n, k) != 1:
            n += 1
        out.append(((K * n - span * k) // g, k // g))
    return tuple(out)


def _threshold(inst: SciInstance) -> int:
    return inst.U + 2 * inst.m + 1


def _fallback_result(inst: SciInstance, b_cap: int) -> OptimalPair:
    fb = fallback_pair(inst)
    msg = f"no member with b <= {b_cap} does better; using fallback (alpha, gamma) = ({fb.alpha}, {fb.gamma})"
    log.warning("%s for %s", msg, inst)
    return OptimalPair(fb.alpha, fb.gamma, achieved_rate(inst, fb.alpha, fb.gamma), msg)


@lru_cache(maxsize=1 << 18)
def _best_ratio_pair(K: int, span: int, thr: int, b_cap: int):
    best = None
    for a, b in _reduced_members(K, span, thr):
        if b > b_cap:
            continue
        # compare a/b, then (a, b), without building Fractions
        if best is None or (a * best[1], a, b) < (best[0] * b, best[0], best[1]):
            best = (a, b)
    return best


def find_optimal_pair(inst: SciInstance, b_cap: int | None = None) -> OptimalPair:
    """Member pair with the smallest ratio ``a/b`` (then smallest ``a``, ``b``).

    This is the pair giving the best achievable rate. Only ``b <= b_cap``
    (default ``K``) is considered; when the fallback pair lies beyond the
    cap and beats everything within it, the fallback is returned with a
    diagnostic. Runs in O(K / (U+2m+1)) gcd evaluations.
    """
    if b_cap is None:
        b_cap = inst.K
    if b_cap < 1:
        raise ParameterError(f"b_cap must be positive, got {b_cap}")
    best = _best_ratio_pair(inst.K, inst.span, _threshold(inst), b_cap)
    gamma, alpha = divmod(inst.K, inst.span)
    if best is None or (gamma > b_cap and alpha * best[1] < best[0] * gamma):
        return _fallback_result(inst, b_cap)
    a, b = best
    return OptimalPair(a, b, achieved_rate(inst, a, b))


def min_a_pair(inst: SciInstance, b_cap: int | None = None) -> OptimalPair:
    """Member pair with the smallest ``a`` (then smallest ``b``), ``a <= K mod (D+2m+1)``.

    Its rate can be worse than :func:`find_optimal_pair`'s, and even worse
    than the fallback pair's, e.g. for ``K=80, D=20, U=12, m=0``.
    """
    if b_cap is None:
        b_cap = inst.K
    if b_cap < 1:
        raise ParameterError(f"b_cap must be positive, got {b_cap}")
    alpha = fallback_pair(inst).alpha
    pairs = [p for p in _reduced_members(inst.K, inst.span, _threshold(inst)) if p[1] <= b_cap and p[0] <= alpha]
    if not pairs:
        return _fallback_result(inst, b_cap)
    a, b = min(pairs)
    return OptimalPair(a, b, achieved_rate(inst, a, b))


def lower_bound(inst: SciInstance) -> mpq:
    """``1 + (D + m)/(m + 1)``."""
    return mpq(inst.span, inst.m + 1)


def upper_bound(inst: SciInstance, b_cap: int | None = None) -> mpq:
    return find_optimal_pair(inst, b_cap).achieved_rate


def capacity_special(inst: SciInstance) -> mpq | None:
    """Capacity ``(m+1)/(D+2m+1)`` when ``gcd(K, D+2m+1) >= U+2m+1``, else ``None``."""
    if gcd(inst.K, inst.span) >= inst.U + 2 * inst.m + 1:
        return mpq(inst.m + 1, inst.span)
    return None


def gap_bound(inst: SciInstance) -> mpq:
    gamma, alpha = divmod(inst.K, inst.span)
    if gamma < 1:
        raise ParameterError(f"K={inst.K} is smaller than D+2m+1={inst.span}")
    return mpq(alpha, (inst.m + 1) * gamma)


def snc_capacity(K: int, D: int, U: int) -> mpq:
    """Capacity of the symmetric neighbouring side-information problem.

    Each receiver knows the ``U`` messages before and ``D`` after its own.
    """
    if not (0 <= U <= D and U + D <= K - 1):
        raise ParameterError(f"need 0 <= U <= D and U + D <= K - 1, got K={K}, D={D}, U={U}")
    if U + D == K - 1:
        return mpq(1)
    return mpq(U + 1, K - D + U)


def bounds(inst: SciInstance, b_cap: int | None = None) -> RateBound:
    return RateBound(lower_bound(inst), upper_bound(inst, b_cap), capacity_special(inst))


def enumerate_members(inst: SciInstance, a_max: int, b_max: int) -> list:
    """Member pairs with ``a <= a_max`` and ``b <= b_max``, sorted by rate then ``(a, b)``."""
    found = [
        is_member(inst, a, b)
        for a in range(a_max + 1)
        for b in range(1, b_max + 1)
    ]
    found = [p for p in found if p.member]
    found.sort(key=lambda p: (achieved_rate(inst, p.a, p.b), p.a, p.b))
    return found
