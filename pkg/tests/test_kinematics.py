import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from unruh_entanglement.errors import HorizonError, SectorMismatchError
from unruh_entanglement.kinematics import (
    MinkowskiEvent,
    ObserverParams,
    RindlerEvent,
    Sector,
    boost,
    classify_sector,
    proper_acceleration,
    to_minkowski,
    to_rindler,
)


@pytest.mark.parametrize(
    "t, x, sector",
    [(0, 1, Sector.R), (1, 0, Sector.F), (0.5, -2, Sector.L), (-3, 1, Sector.P)],
)
def test_classify_sector(t, x, sector):
    assert classify_sector(MinkowskiEvent(t, x)) is sector


@pytest.mark.parametrize("t, x", [(1, 1), (-2, 2), (0, 0), (3, -3)])
def test_horizon_points_rejected(t, x):
    with pytest.raises(HorizonError):
        classify_sector(MinkowskiEvent(t, x))
    with pytest.raises(HorizonError):
        to_rindler(MinkowskiEvent(t, x))


def test_to_rindler_examples():
    assert to_rindler(MinkowskiEvent(0, 2)) == RindlerEvent(0.0, 2.0, Sector.R)
    assert to_rindler(MinkowskiEvent(0, -2)) == RindlerEvent(0.0, -2.0, Sector.L)
    r = to_rindler(MinkowskiEvent(5 * math.sinh(0.3), 5 * math.cosh(0.3)))
    assert r.sector is Sector.R
    assert r.tau == pytest.approx(0.3, abs=1e-14)
    assert r.rho == pytest.approx(5.0, abs=1e-13)


def test_to_minkowski_examples():
    assert to_minkowski(RindlerEvent(0, 1, Sector.R)) == MinkowskiEvent(0.0, 1.0)
    e = to_minkowski(RindlerEvent(1, -1, Sector.L))
    assert (e.t, e.x) == (-math.sinh(1), -math.cosh(1))
    r = RindlerEvent(0.7, 3.2, Sector.R)
    back = to_rindler(to_minkowski(r))
    assert back.sector is Sector.R
    assert back.tau == pytest.approx(0.7, rel=1e-12)
    assert back.rho == pytest.approx(3.2, rel=1e-12)


def test_future_and_past_wedges():
    f = to_rindler(MinkowskiEvent(2, 1))
    assert f.sector is Sector.F and f.rho == pytest.approx(math.sqrt(3)) and f.tau == pytest.approx(math.atanh(0.5))
    p = to_rindler(MinkowskiEvent(-2, 1))
    assert p.sector is Sector.P and p.rho == pytest.approx(-math.sqrt(3))


@pytest.mark.parametrize("rho, sector", [(-1, Sector.R), (1, Sector.L), (-1, Sector.F), (1, Sector.P)])
def test_sign_sector_mismatch(rho, sector):
    with pytest.raises(SectorMismatchError):
        to_minkowski(RindlerEvent(0.1, rho, sector))


def test_zero_radius_is_horizon():
    with pytest.raises(HorizonError):
        to_minkowski(RindlerEvent(0.0, 0.0, Sector.R))


@pytest.mark.parametrize("rho, acc", [(1, 1), (2, 0.5), (0.1, 10), (-4, 0.25)])
def test_proper_acceleration(rho, acc):
    assert proper_acceleration(rho) == pytest.approx(acc, rel=1e-15)


def test_proper_acceleration_horizon():
    with pytest.raises(HorizonError):
        proper_acceleration(0.0)


def test_observer_params_ratio():
    obs = ObserverParams(a=4.0, E=2.0)
    assert obs.omega == 0.5
    with pytest.raises(ValueError):
        ObserverParams(a=0.0, E=1.0)


def off_horizon_events():
    coords = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
    return st.tuples(coords, coords).filter(lambda tx: abs(abs(tx[0]) - abs(tx[1])) > 1e-3 * max(1.0, abs(tx[1])))


@given(off_horizon_events())
def test_round_trip_and_sector_preservation(tx):
    e = MinkowskiEvent(*tx)
    r = to_rindler(e)
    assert r.sector is classify_sector(e)
    back = to_minkowski(r)
    scale = max(abs(e.t), abs(e.x))
    assert abs(back.t - e.t) <= 1e-12 * scale
    assert abs(back.x - e.x) <= 1e-12 * scale


@given(
    st.floats(-3, 3),
    st.floats(0.1, 20),
    st.sampled_from([Sector.R, Sector.L]),
    st.floats(-2, 2),
)
def test_boost_preserves_interval(tau, radius, sector, delta):
    rho = radius if sector is Sector.R else -radius
    r = RindlerEvent(tau, rho, sector)
    before = to_minkowski(r).interval
    after = to_minkowski(boost(r, delta)).interval
    assert after == pytest.approx(rho * rho, rel=1e-12)
    assert after == pytest.approx(before, rel=1e-12)
