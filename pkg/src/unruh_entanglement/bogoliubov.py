"""Per-mode Bogoliubov data and the Rindler expansions of Minkowski states.

Everything is parameterised by ``q = exp(-pi * omega)``. The Minkowski vacuum
of one Unruh mode pair is the two-mode squeezed state

    sum_n sqrt(1 - q**2) * q**n |n>_R |n>_L

and one Minkowski excitation of the same mode is

    sum_n (1 - q**2) * q**n * sqrt(n + 1) |n+1>_R |n>_L.

Truncating either sum at ``n_max`` leaves a probability tail that is known in
closed form, so every cutoff here comes with an exact remainder.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

EPS = np.finfo(float).eps


class SeriesKind(str, Enum):
    VACUUM = "vacuum"
    ONE_PARTICLE = "one_particle"


@dataclass(frozen=True)
class ModeLabel:
    """Unruh mode tag. Transverse momenta are identity tags and never enter numerics."""

    omega: float
    py: object = 0
    pz: object = 0
    s: int = 1

    def __post_init__(self) -> None:
        if not self.omega > 0:
            raise DomainError(f"Unruh modes need omega > 0, got {self.omega}")
        if self.s not in (1, -1):
            raise DomainError(f"helicity must be +1 or -1, got {self.s}")

    def partner(self) -> "ModeLabel":
        """The opposite-wedge mode paired with this one in the squeezed vacuum."""
        return ModeLabel(self.omega, _negate(self.py), _negate(self.pz), self.s)


def _negate(tag: object) -> object:
    if isinstance(tag, (int, float)):
        return -tag
    text = str(tag)
    return text[1:] if text.startswith("-") else "-" + text


@dataclass(frozen=True)
class SqueezeParams:
    """Bogoliubov coefficients of one Unruh mode; ``q = s / c``.

    ``c = exp(pi w / 2) / sqrt(2 sinh(pi w))`` and ``s = exp(-pi w / 2) / sqrt(2 sinh(pi w))``,
    evaluated in the algebraically equal forms ``1/sqrt(1 - q^2)`` and ``q/sqrt(1 - q^2)``
    which stay finite for large ``omega``.
    """

    q: float
    c: float
    s: float

    @classmethod
    def from_q(cls, q: float) -> "SqueezeParams":
        if not 0.0 <= q < 1.0:
            raise DomainError(f"q must lie in [0, 1), got {q}")
        one_minus_x = (1.0 - q) * (1.0 + q)
        c = 1.0 / math.sqrt(one_minus_x)
        return cls(q=float(q), c=c, s=q * c)

    @property
    def x(self) -> float:
        """Squared ratio ``q**2 = exp(-2 pi omega)``; the Boltzmann factor of the Unruh bath."""
        return self.q * self.q

    @property
    def one_minus_x(self) -> float:
        return (1.0 - self.q) * (1.0 + self.q)

    @property
    def omega(self) -> float:
        return math.inf if self.q == 0.0 else -math.log(self.q) / math.pi


@dataclass(frozen=True)
class CoefficientSeries:
    kind: SeriesKind
    q: float
    coeffs: np.ndarray
    tail_bound: float

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    @property
    def norm_squared(self) -> float:
        return float(math.fsum(self.coeffs**2))


def omega_from_energy(E: float, a: float) -> float:
    if not (E > 0 and a > 0):
        raise DomainError(f"energy and acceleration must be positive, got E={E}, a={a}")
    return E / a


def squeeze_from_omega(omega: float) -> SqueezeParams:
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if not math.isfinite(omega):
        return SqueezeParams(q=0.0, c=1.0, s=0.0)
    q = math.exp(-math.pi * omega)
    one_minus_x = -math.expm1(-2.0 * math.pi * omega)
    if one_minus_x < sys.float_info.min:
        raise ConvergenceError(
            f"omega={omega!r} is too small: 2*sinh(pi*omega)={2 * math.sinh(math.pi * omega):.3g} "
            "underflows and c**2 overflows"
        )
    c = 1.0 / math.sqrt(one_minus_x)
    return SqueezeParams(q=q, c=c, s=q * c)


def vacuum_tail(q: float, n_max: int) -> float:
    """Probability beyond ``n_max`` in the vacuum expansion: ``q**(2(n_max+1))``."""
    return (q * q) ** (n_max + 1)


def one_particle_tail(q: float, n_max: int) -> float:
    """Probability beyond ``n_max`` in the one-particle expansion.

    ``(1-x)**2 * sum_{n>n_max} (n+1) x**n = x**m * (1 + m*(1-x))`` with ``m = n_max + 1``.
    """
    x = q * q
    m = n_max + 1
    return x**m * (1.0 + m * (1.0 - q) * (1.0 + q))


_TAILS: dict[SeriesKind, Callable[[float, int], float]] = {
    SeriesKind.VACUUM: vacuum_tail,
    SeriesKind.ONE_PARTICLE: one_particle_tail,
}


def vacuum_expansion(p: SqueezeParams, n_max: int) -> CoefficientSeries:
    _check_cutoff(n_max)
    n = np.arange(n_max + 1)
    coeffs = math.sqrt(p.one_minus_x) * p.q**n
    return CoefficientSeries(SeriesKind.VACUUM, p.q, coeffs, vacuum_tail(p.q, n_max))


def one_particle_expansion(p: SqueezeParams, n_max: int) -> CoefficientSeries:
    _check_cutoff(n_max)
    n = np.arange(n_max + 1)
    coeffs = p.one_minus_x * p.q**n * np.sqrt(n + 1.0)
    return CoefficientSeries(SeriesKind.ONE_PARTICLE, p.q, coeffs, one_particle_tail(p.q, n_max))


def _check_cutoff(n_max: int) -> None:
    if int(n_max) != n_max or n_max < 0:
        raise DomainError(f"n_max must be a nonnegative integer, got {n_max}")


def min_cutoff_for_tolerance(p: SqueezeParams, kind: SeriesKind | str, tol: float) -> int:
    """Smallest ``n_max`` whose analytic tail is at most ``tol``."""
    if not 0.0 < tol < 1.0:
        raise DomainError(f"tol must lie in (0, 1), got {tol}")
    if p.q >= 1.0 - EPS:
        raise ConvergenceError(f"q={p.q} is indistinguishable from 1; the series cannot be truncated")
    tail = _TAILS[SeriesKind(kind)]
    if tail(p.q, 0) <= tol:
        return 0
    lo, hi = 0, 1
    while tail(p.q, hi) > tol:
        lo, hi = hi, 2 * hi
    # invariant: tail(lo) > tol >= tail(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail(p.q, mid) > tol:
            lo = mid
        else:
            hi = mid
    return hi


@dataclass(frozen=True)
class GeometricBlockLaw:
    """Block weights of the form ``w_n = x**n * (c0 + c1*(n+1))`` for ``n >= 0``.

    Both state families studied here have block traces of this form, which
    gives closed-form remainders for the weights and a rigorous majorant for
    their entropy tails.
    """

    x: float
    c0: float
    c1: float

    def weight(self, n: int) -> float:
        return self.x**n * (self.c0 + self.c1 * (n + 1))

    def _moments(self, m: int) -> tuple[float, float, float, float]:
        # sum_{n>=m} of x^n, n x^n, (n+1) x^n, n(n+1) x^n
        x = self.x
        y = 1.0 - x
        xm = x**m
        p0 = xm / y
        p1 = xm * (x / y**2 + m / y)
        q1 = xm * (1.0 + m * y) / y**2
        q2 = xm * (2.0 * x / y**3 + 2.0 * m * x / y**2 + m * (m + 1) / y)
        return p0, p1, q1, q2

    def tail(self, m: int) -> float:
        """``sum_{n >= m} w_n``."""
        p0, _, q1, _ = self._moments(m)
        return self.c0 * p0 + self.c1 * q1

    def entropy_tail_bound(self, m: int, block_rank: int) -> float:
        """Upper bound on ``sum_{n>=m} w_n * log2(block_rank / w_n)``.

        Uses ``w_n >= x**n * (c0 + c1)`` inside the logarithm, which turns the
        sum into geometric moments with closed forms.
        """
        if self.x == 0.0:
            if m > 0:
                return 0.0
            w0 = self.c0 + self.c1
            return 0.0 if w0 == 0 else w0 * math.log2(block_rank / w0)
        floor = self.c0 + self.c1
        alpha = max(math.log2(block_rank / floor), 0.0)
        beta = -math.log2(self.x)
        p0, p1, q1, q2 = self._moments(m)
        return self.c0 * (alpha * p0 + beta * p1) + self.c1 * (alpha * q1 + beta * q2)
