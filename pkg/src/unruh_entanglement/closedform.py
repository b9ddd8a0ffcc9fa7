"""Analytic reference values for the helicity-entangled state.

These are coded straight from the series, without building any matrix, so
they can be used to check the eigenvalue pipeline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

_EPS = 2.0**-52


@dataclass(frozen=True)
class ClosedFormResult:
    name: str
    q: float
    value: float
    series_terms_used: int
    certified_error: float


def _check_q(q: float) -> None:
    if not 0.0 <= q < 1.0:
        raise DomainError(f"q must lie in [0, 1), got {q}")


def weighted_geometric_sum(x: float) -> float:
    """``sum_{n>=0} (n+1) x**n = 1 / (1-x)**2``."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"sum of (n+1) x^n diverges or is undefined for x={x}")
    return 1.0 / (1.0 - x) ** 2


def helicity_log_negativity_exact(q: float) -> float:
    # log2(2 (1-x)^2 / (1-x)^2) cancels identically
    _check_q(q)
    return 1.0


def _joint_entropy_remainder(x: float, A: float, m: int) -> float:
    """Bound on ``sum_{n>=m} -lam_n log2 lam_n`` for ``lam_n = A (n+1) x^n``.

    ``-log2 lam_n <= log2(1/A) + n log2(1/x)`` since ``log2(n+1) >= 0``; the
    majorant is a pair of differentiated geometric series.
    """
    if x == 0.0:
        return 0.0
    y = 1.0 - x
    xm = x**m
    s1 = xm * ((m + 1) - m * x) / y**2  # sum (n+1) x^n
    s2 = xm * (2 * x / y**3 + 2 * m * x / y**2 + m * (m + 1) / y)  # sum n(n+1) x^n
    return A * (-math.log2(A) * s1 - math.log2(x) * s2)


def helicity_joint_entropy_exact(q: float, tol: float = 1e-12) -> ClosedFormResult:
    """``S(rho_AB) = -sum_n lam_n log2 lam_n`` with ``lam_n = (1-q^2)^2 q^(2n) (n+1)``."""
    _check_q(q)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if q == 0.0:
        return ClosedFormResult("S_AB", q, 0.0, 1, 0.0)
    x = q * q
    A = ((1.0 - q) * (1.0 + q)) ** 2
    log_a = math.log2(A)
    log_x = math.log2(x)
    terms = []
    n = 0
    while True:
        lam = A * (n + 1) * x**n
        if lam > 0.0:
            terms.append(-lam * (log_a + math.log2(n + 1) + n * log_x))
        n += 1
        remainder = _joint_entropy_remainder(x, A, n)
        if remainder <= tol:
            break
    value = math.fsum(terms)
    rounding = 4.0 * _EPS * n * max(abs(value), 1.0)
    return ClosedFormResult("S_AB", q, value, n, remainder + rounding)


def helicity_bob_entropy_exact(q: float, tol: float = 1e-12) -> ClosedFormResult:
    """Bob's spectrum is the joint one with every weight split in two halves."""
    joint = helicity_joint_entropy_exact(q, tol)
    return ClosedFormResult("S_B", q, joint.value + 1.0, joint.series_terms_used, joint.certified_error)


def helicity_alice_entropy_exact(q: float) -> float:
    _check_q(q)
    return 1.0


def helicity_mutual_info_exact(q: float) -> float:
    # S_A + S_B - S_AB = 1 + (S_AB + 1) - S_AB
    _check_q(q)
    return 2.0
