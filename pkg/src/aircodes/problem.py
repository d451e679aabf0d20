"""Symmetric consecutive interference (SCI) index coding instances.

Receiver ``k`` wants message ``k``, knows the ``m`` messages on either side
of it, is blind to ``U`` messages before that window and ``D`` after it,
and knows everything else. ``m = 0`` is the neighbouring-interference (SNI)
case.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError


@dataclass(frozen=True, slots=True)
class SciInstance:
    K: int
    D: int
    U: int
    m: int = 0

    def __post_init__(self):
        K, D, U, m = self.K, self.D, self.U, self.m
        if type(K) is not int or type(D) is not int or type(U) is not int or type(m) is not int:
            raise ParameterError(f"K, D, U, m must be integers, got {(K, D, U, m)!r}")
        if K < 1:
            raise ParameterError(f"K must be positive, got {K}")
        if m < 0 or U < 0 or D < 0:
            raise ParameterError(f"D, U, m must be non-negative, got D={D}, U={U}, m={m}")
        if U > D:
            raise ParameterError(f"need U <= D, got U={U}, D={D}")
        if U + D >= K - 2 * m:
            raise ParameterError(f"need U + D < K - 2m, got U+D={U + D}, K-2m={K - 2 * m}")

    @classmethod
    def parse(cls, text: str) -> "SciInstance":
        """Parse a literal such as ``K=18,D=7,U=1,m=2`` (``m`` optional)."""
        fields = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            match = re.fullmatch(r"([KDUm])\s*=\s*(-?\d+)", part)
            if not match:
                raise ParameterError(f"bad instance field {part!r} in {text!r}")
            fields[match.group(1)] = int(match.group(2))
        missing = {"K", "D", "U"} - fields.keys()
        if missing:
            raise ParameterError(f"instance {text!r} is missing {sorted(missing)}")
        return cls(**fields)

    def __str__(self):
        return f"K={self.K},D={self.D},U={self.U},m={self.m}"

    @property
    def span(self) -> int:
        """``D + 2m + 1``, the width that recurs in every rate formula."""
        return self.D + 2 * self.m + 1

    def mod(self, i: int) -> int:
        return i % self.K

    @property
    def is_sni(self) -> bool:
        return self.m == 0


@dataclass(frozen=True)
class ReceiverView:
    k: int
    interference: frozenset
    side_info: frozenset


@lru_cache(maxsize=1 << 16)
def interference_set(inst: SciInstance, k: int) -> frozenset:
    _check_receiver(inst, k)
    before = range(k - inst.U - inst.m, k - inst.m)
    after = range(k + inst.m + 1, k + inst.m + inst.D + 1)
    return frozenset(inst.mod(i) for i in (*before, *after))


@lru_cache(maxsize=1 << 16)
def side_info_set(inst: SciInstance, k: int) -> frozenset:
    blocked = interference_set(inst, k) | {k}
    return frozenset(range(inst.K)) - blocked


def receiver_view(inst: SciInstance, k: int) -> ReceiverView:
    return ReceiverView(k, interference_set(inst, k), side_info_set(inst, k))


def as_sni(inst: SciInstance) -> SciInstance:
    """The SNI instance seen by extended symbols: both widths grow by ``2m``.

    Raises :class:`ParameterError` when ``U + D + 4m >= K``, since those
    widths do not describe a valid SNI instance.
    """
    return SciInstance(inst.K, inst.D + 2 * inst.m, inst.U + 2 * inst.m, 0)


def _check_receiver(inst: SciInstance, k: int):
    if not 0 <= k < inst.K:
        raise ParameterError(f"receiver index {k} outside [0, {inst.K})")


def iter_instances(k_max: int, k_min: int = 1, m_values=None):
    """All valid instances with ``k_min <= K <= k_max`` in (K, m, D, U) order."""
    for K in range(k_min, k_max + 1):
        for m in range(0, (K - 1) // 2 + 1):
            if m_values is not None and m not in m_values:
                continue
            for D in range(0, K - 2 * m):
                for U in range(0, D + 1):
                    if U + D < K - 2 * m:
                        yield SciInstance(K, D, U, m)
