import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from math import gcd
from sympy import GF as SymGF
from sympy.polys.matrices import DomainMatrix

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def grid(text: str) -> np.ndarray:
    return np.array([[int(v) for v in line.split()] for line in text.strip().splitlines()], dtype=np.int64)


def sympy_rank(M, p: int) -> int:
    """Rank via sympy's exact domain matrices, independent of aircodes.field."""
    M = np.asarray(M, dtype=np.int64) % p
    if M.size == 0:
        return 0
    F = SymGF(p)
    dm = DomainMatrix([[F(int(v)) for v in row] for row in M], M.shape, F)
    return dm.rank()


def scan_members(K, span, thr, b_cap):
    """Every member (a, b) with b <= b_cap and a < bK, by direct gcd."""
    return [
        (a, b)
        for b in range(1, b_cap + 1)
        for a in range(b * K)
        if gcd(b * K, b * span + a) >= b * thr
    ]


def scan_min_ratio(inst, b_cap):
    found = scan_members(inst.K, inst.span, inst.U + 2 * inst.m + 1, b_cap)
    if not found:
        return None
    # smallest a/b, then smallest (a, b); cross-multiplied to stay exact
    best = found[0]
    for a, b in found[1:]:
        if (a * best[1], a, b) < (best[0] * b, best[0], best[1]):
            best = (a, b)
    return best


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240601)


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
