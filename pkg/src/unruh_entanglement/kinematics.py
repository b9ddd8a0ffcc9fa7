"""Minkowski <-> Rindler coordinate maps for the four wedges R, L, F, P.

Only the (t, x) plane is modelled; y and z are untouched by every map here.
The Rindler radius ``rho`` carries the wedge sign: positive in R and F,
negative in L and P.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import HorizonError, SectorMismatchError


class Sector(str, Enum):
    R = "R"
    L = "L"
    F = "F"
    P = "P"


@dataclass(frozen=True)
class MinkowskiEvent:
    t: float
    x: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t) and math.isfinite(self.x)):
            raise ValueError(f"non-finite event ({self.t}, {self.x})")

    @property
    def interval(self) -> float:
        """x**2 - t**2, positive in R/L and negative in F/P."""
        return (self.x - self.t) * (self.x + self.t)


@dataclass(frozen=True)
class RindlerEvent:
    tau: float
    rho: float
    sector: Sector


@dataclass(frozen=True)
class ObserverParams:
    """Uniformly accelerated detector: proper acceleration ``a`` and detected energy ``E``."""

    a: float
    E: float

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.E > 0):
            raise ValueError(f"a and E must be positive, got a={self.a}, E={self.E}")

    @property
    def omega(self) -> float:
        return self.E / self.a


def classify_sector(e: MinkowskiEvent) -> Sector:
    t, x = e.t, e.x
    if abs(t) == abs(x):
        raise HorizonError(f"event (t={t}, x={x}) lies on a horizon")
    if x > abs(t):
        return Sector.R
    if x < -abs(t):
        return Sector.L
    return Sector.F if t > 0 else Sector.P


def to_rindler(e: MinkowskiEvent) -> RindlerEvent:
    sector = classify_sector(e)
    if sector in (Sector.R, Sector.L):
        radius = math.sqrt((e.x - e.t) * (e.x + e.t))
        # atanh(t/x) written so that t/x near +-1 keeps full precision
        tau = 0.5 * math.log((e.x + e.t) / (e.x - e.t))
        rho = radius if sector is Sector.R else -radius
    else:
        radius = math.sqrt((e.t - e.x) * (e.t + e.x))
        tau = 0.5 * math.log((e.t + e.x) / (e.t - e.x))
        rho = radius if sector is Sector.F else -radius
    return RindlerEvent(tau=tau, rho=rho, sector=sector)


def to_minkowski(r: RindlerEvent) -> MinkowskiEvent:
    if r.rho == 0 or not math.isfinite(r.rho):
        raise HorizonError("rho must be finite and nonzero")
    positive = r.sector in (Sector.R, Sector.F)
    if (r.rho > 0) != positive:
        raise SectorMismatchError(f"rho={r.rho} has the wrong sign for sector {r.sector.value}")
    if r.sector in (Sector.R, Sector.L):
        return MinkowskiEvent(t=r.rho * math.sinh(r.tau), x=r.rho * math.cosh(r.tau))
    return MinkowskiEvent(t=r.rho * math.cosh(r.tau), x=r.rho * math.sinh(r.tau))


def proper_acceleration(rho: float) -> float:
    """Acceleration of the boost orbit at Rindler radius ``rho``."""
    if rho == 0:
        raise HorizonError("the orbit at rho = 0 is the horizon")
    return 1.0 / abs(rho)


def boost(r: RindlerEvent, delta: float) -> RindlerEvent:
    """Shift Rindler time by ``delta`` along the boost Killing flow."""
    return RindlerEvent(tau=r.tau + delta, rho=r.rho, sector=r.sector)
