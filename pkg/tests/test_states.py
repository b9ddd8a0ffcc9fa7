import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from unruh_entanglement.bogoliubov import SeriesKind, SqueezeParams, min_cutoff_for_tolerance
from unruh_entanglement.errors import UnsupportedFamilyError
from unruh_entanglement.fock import (
    ALICE_ONE,
    ALICE_ZERO,
    BasisVector,
    BobLabel,
    Helicity,
    block_trace,
    hermitian_eigenvalues,
)
from unruh_entanglement.states import (
    StateFamily,
    build_rho,
    helicity_bell_rho,
    helicity_block_weights,
    number_bell_rho,
    reduce_over_L,
    tripartite_pure_state,
)

BELL = np.full((2, 2), 0.5)


def test_family_parse():
    assert StateFamily.parse("helicity") is StateFamily.HELICITY
    assert StateFamily.parse("number_bell") is StateFamily.NUMBER
    with pytest.raises(UnsupportedFamilyError):
        StateFamily.parse("spin")


@pytest.mark.parametrize("q", [0.05, 0.5, 0.9, 0.99])
def test_block_weights_sum_to_one(q):
    p = SqueezeParams.from_q(q)
    n_max = min_cutoff_for_tolerance(p, SeriesKind.ONE_PARTICLE, 1e-14)
    lam = helicity_block_weights(p, n_max)
    rho = helicity_bell_rho(p, n_max)
    assert abs(math.fsum(lam) + rho.trace_deficit - 1) <= 1e-13
    partial = np.cumsum(lam)
    assert np.all(np.diff(partial) >= 0)


def test_helicity_inertial_is_bell_state():
    rho = helicity_bell_rho(SqueezeParams.from_q(0.0), 0)
    np.testing.assert_array_equal(rho.blocks[0].matrix, BELL)
    assert rho.trace_deficit == 0


def test_helicity_block_zero_at_q_half():
    rho = helicity_bell_rho(SqueezeParams.from_q(0.5), 10)
    np.testing.assert_allclose(rho.blocks[0].matrix, np.full((2, 2), 9 / 32), rtol=1e-15)
    assert [str(v) for v in rho.blocks[0].basis] == ["|up,1down>", "|down,1up>"]


@given(st.floats(0.0, 0.99), st.integers(0, 60))
def test_helicity_blocks_are_rank_one(q, n_max):
    p = SqueezeParams.from_q(q)
    lam = helicity_block_weights(p, n_max)
    for n, block in enumerate(helicity_bell_rho(p, n_max).blocks):
        w = hermitian_eigenvalues(block.matrix)
        assert w[0] == pytest.approx(lam[n], rel=1e-14, abs=1e-300)
        assert abs(w[1]) <= 1e-14


def test_number_inertial_is_bell_state():
    rho = number_bell_rho(SqueezeParams.from_q(0.0), 4)
    np.testing.assert_allclose(rho.blocks[0].matrix, BELL, atol=1e-16)
    assert rho.blocks[0].basis == (
        BasisVector(ALICE_ZERO, BobLabel(Helicity.NONE, 0)),
        BasisVector(ALICE_ONE, BobLabel(Helicity.NONE, 1)),
    )
    for block in rho.blocks[1:]:
        assert not block.matrix.any()


def test_number_block_zero_at_q_half():
    m = number_bell_rho(SqueezeParams.from_q(0.5), 5).blocks[0].matrix
    assert m[0, 0] == pytest.approx(3 / 8, rel=1e-15)
    assert m[1, 1] == pytest.approx(9 / 32, rel=1e-15)
    assert m[0, 1] == pytest.approx(0.75**1.5 / 2, rel=1e-15)


@pytest.mark.parametrize("q", [0.2, 0.7])
def test_number_blocks_closed_form(q):
    x = q * q
    rho = number_bell_rho(SqueezeParams.from_q(q), 30)
    for n, block in enumerate(rho.blocks):
        expected = np.array(
            [
                [(1 - x) * x**n / 2, (1 - x) ** 1.5 * x**n * math.sqrt(n + 1) / 2],
                [(1 - x) ** 1.5 * x**n * math.sqrt(n + 1) / 2, (1 - x) ** 2 * x**n * (n + 1) / 2],
            ]
        )
        np.testing.assert_allclose(block.matrix, expected, rtol=1e-13)


def test_number_trace_plus_deficit_q_09():
    p = SqueezeParams.from_q(0.9)
    n_max = max(
        min_cutoff_for_tolerance(p, SeriesKind.VACUUM, 1e-12),
        min_cutoff_for_tolerance(p, SeriesKind.ONE_PARTICLE, 1e-12),
    )
    rho = number_bell_rho(p, n_max)
    assert abs(block_trace(rho) + rho.trace_deficit - 1) <= 1e-13
    assert rho.trace_deficit <= 1e-12


def test_tripartite_inertial():
    sv = tripartite_pure_state(SqueezeParams.from_q(0.0), 3)
    nonzero = {k: v for k, v in sv.amplitudes.items() if v != 0}
    r = 1 / math.sqrt(2)
    assert nonzero == {(ALICE_ZERO, 0, 0): pytest.approx(r), (ALICE_ONE, 1, 0): pytest.approx(r)}


def test_tripartite_norm_q_07():
    sv = tripartite_pure_state(SqueezeParams.from_q(0.7), 120)
    assert abs(sv.norm_squared + sv.tail - 1) <= 1e-13


@given(st.floats(0.0, 0.99))
def test_tripartite_leading_ratio(q):
    sv = tripartite_pure_state(SqueezeParams.from_q(q), 2)
    a = sv.amplitudes
    assert a[(ALICE_ONE, 1, 0)] / a[(ALICE_ZERO, 0, 0)] == pytest.approx(math.sqrt(1 - q * q), rel=1e-14)


def test_tripartite_rejects_helicity():
    with pytest.raises(UnsupportedFamilyError):
        tripartite_pure_state(SqueezeParams.from_q(0.5), 3, family="helicity_bell")


def test_reduce_over_L_inertial():
    rho = reduce_over_L(tripartite_pure_state(SqueezeParams.from_q(0.0), 3))
    u = BasisVector(ALICE_ZERO, BobLabel(Helicity.NONE, 0))
    v = BasisVector(ALICE_ONE, BobLabel(Helicity.NONE, 1))
    np.testing.assert_allclose(rho.dense([u, v]), BELL, atol=1e-16)


@pytest.mark.parametrize("q", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_oracle_equivalence(q):
    p = SqueezeParams.from_q(q)
    sv = tripartite_pure_state(p, 30)
    oracle = reduce_over_L(sv)
    assert oracle.max_entry_difference(number_bell_rho(p, 30)) <= 1e-12
    assert abs(block_trace(oracle) - sv.norm_squared) <= 1e-14


@pytest.mark.parametrize("family", list(StateFamily))
def test_small_q_converges_to_bell(family):
    rho = build_rho(family, SqueezeParams.from_q(1e-6), 5)
    np.testing.assert_allclose(rho.blocks[0].matrix, BELL, atol=2e-12)
