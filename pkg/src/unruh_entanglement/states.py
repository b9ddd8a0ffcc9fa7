"""Alice-Bob density matrices for the two entangled photon states.

``helicity_bell``: ``(|1,+up>_A |1,-down>_B + |1,+down>_A |1,-up>_B) / sqrt(2)``.
``number_bell``:   ``(|0>_A |0>_B + |1>_A |1>_B) / sqrt(2)``.

Bob's Minkowski mode is rewritten in Rindler modes and the L wedge, which he
cannot access, is traced out. Both results are block diagonal in the L-wedge
occupation ``n`` that was traced.
"""
from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .bogoliubov import (
    GeometricBlockLaw,
    SqueezeParams,
    one_particle_expansion,
    vacuum_expansion,
)
from .errors import UnsupportedFamilyError
from .fock import (
    ALICE_DOWN,
    ALICE_ONE,
    ALICE_UP,
    ALICE_ZERO,
    BasisVector,
    Block,
    BlockDensityMatrix,
    BobLabel,
    Helicity,
    StateVector,
    assemble_blocks,
)


class StateFamily(str, Enum):
    HELICITY = "helicity_bell"
    NUMBER = "number_bell"

    @classmethod
    def parse(cls, value: "str | StateFamily") -> "StateFamily":
        if isinstance(value, cls):
            return value
        aliases = {"helicity": cls.HELICITY, "number": cls.NUMBER}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise UnsupportedFamilyError(f"unknown state family {value!r}") from None


def helicity_block_weights(p: SqueezeParams, n_max: int) -> np.ndarray:
    """``lambda_n = (1 - q^2)^2 q^(2n) (n + 1)`` for ``n = 0..n_max``; sums to 1 over all n."""
    return one_particle_expansion(p, n_max).coeffs ** 2


def helicity_law(p: SqueezeParams) -> GeometricBlockLaw:
    y = p.one_minus_x
    return GeometricBlockLaw(x=p.x, c0=0.0, c1=y * y)


def number_law(p: SqueezeParams) -> GeometricBlockLaw:
    y = p.one_minus_x
    return GeometricBlockLaw(x=p.x, c0=0.5 * y, c1=0.5 * y * y)


def helicity_bell_rho(p: SqueezeParams, n_max: int) -> BlockDensityMatrix:
    one = one_particle_expansion(p, n_max)
    blocks = []
    for n, amp in enumerate(one.coeffs):
        basis = (
            BasisVector(ALICE_UP, BobLabel(Helicity.DOWN, n + 1)),
            BasisVector(ALICE_DOWN, BobLabel(Helicity.UP, n + 1)),
        )
        blocks.append(Block(basis, np.full((2, 2), 0.5 * amp * amp)))
    return BlockDensityMatrix(
        blocks=tuple(blocks),
        family=StateFamily.HELICITY.value,
        q=p.q,
        n_max=n_max,
        trace_deficit=one.tail_bound,
        law=helicity_law(p),
    )


def number_bell_rho(p: SqueezeParams, n_max: int) -> BlockDensityMatrix:
    """Trace out the L wedge analytically: L occupation ``n`` selects the pure
    branch ``vac_n |0>_A|n>_B + one_n |1>_A|n+1>_B`` (times 1/sqrt 2)."""
    vac = vacuum_expansion(p, n_max)
    one = one_particle_expansion(p, n_max)
    blocks = []
    for n in range(n_max + 1):
        branch = np.array([vac.coeffs[n], one.coeffs[n]]) / math.sqrt(2.0)
        basis = (
            BasisVector(ALICE_ZERO, BobLabel(Helicity.NONE, n)),
            BasisVector(ALICE_ONE, BobLabel(Helicity.NONE, n + 1)),
        )
        blocks.append(Block(basis, np.outer(branch, branch)))
    return BlockDensityMatrix(
        blocks=tuple(blocks),
        family=StateFamily.NUMBER.value,
        q=p.q,
        n_max=n_max,
        trace_deficit=0.5 * (vac.tail_bound + one.tail_bound),
        law=number_law(p),
    )


def build_rho(family: StateFamily | str, p: SqueezeParams, n_max: int) -> BlockDensityMatrix:
    family = StateFamily.parse(family)
    if family is StateFamily.HELICITY:
        return helicity_bell_rho(p, n_max)
    return number_bell_rho(p, n_max)


def tripartite_pure_state(
    p: SqueezeParams, n_max: int, family: StateFamily | str = StateFamily.NUMBER
) -> StateVector:
    """The number-entangled state written over Alice (x) R (x) L before any trace."""
    if StateFamily.parse(family) is not StateFamily.NUMBER:
        # two Bob modes with distinct L partners; no unambiguous single-mode expansion
        raise UnsupportedFamilyError("the tripartite expansion is only defined for number_bell")
    vac = vacuum_expansion(p, n_max)
    one = one_particle_expansion(p, n_max)
    r2 = math.sqrt(2.0)
    amps: dict = {}
    for n in range(n_max + 1):
        amps[(ALICE_ZERO, n, n)] = float(vac.coeffs[n]) / r2
        amps[(ALICE_ONE, n + 1, n)] = float(one.coeffs[n]) / r2
    return StateVector(
        family=StateFamily.NUMBER.value,
        amplitudes=amps,
        n_max=n_max,
        tail=0.5 * (vac.tail_bound + one.tail_bound),
        q=p.q,
    )


def reduce_over_L(sv: StateVector) -> BlockDensityMatrix:
    """Brute-force trace over the L wedge: sum ``|psi><psi|`` over every pair of
    amplitudes whose L occupations agree."""
    acc: dict[tuple[BasisVector, BasisVector], float] = {}
    items = list(sv.amplitudes.items())
    for (a1, r1, l1), amp1 in items:
        u = BasisVector(a1, BobLabel(Helicity.NONE, r1))
        for (a2, r2, l2), amp2 in items:
            if l1 != l2:
                continue
            key = (u, BasisVector(a2, BobLabel(Helicity.NONE, r2)))
            acc[key] = acc.get(key, 0.0) + amp1 * amp2
    return BlockDensityMatrix(
        blocks=assemble_blocks(acc),
        family=sv.family,
        q=sv.q,
        n_max=sv.n_max,
        trace_deficit=sv.tail,
    )
