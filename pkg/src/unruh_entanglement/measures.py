"""Partial transpose, logarithmic negativity, entropies and mutual information.

All logarithms are base 2. Each measure is computed on the truncated matrix;
``entanglement_report`` also bounds how far the truncated value can sit from
the untruncated one, using the matrix's trace deficit and block-weight law.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import PSDViolationError
from .fock import (
    BasisVector,
    BlockDensityMatrix,
    BlockOperator,
    assemble_blocks,
    partial_trace_alice,
    partial_trace_bob,
)

PSD_CLIP = 1e-12
# floating-point allowance added to every certified bound, in bits
ROUNDING_SLACK = 64 * np.finfo(float).eps
# rank bound on every discarded block and on its Alice/Bob reductions
_TAIL_BLOCK_RANK = 2


@dataclass(frozen=True)
class EntanglementReport:
    family: str | None
    q: float
    n_max: int
    log_negativity: float
    S_A: float
    S_B: float
    S_AB: float
    mutual_information: float
    min_pt_eigenvalue: float
    trace_deficit: float
    tail_bound_measures: float
    negativity_bound: float
    entropy_bound: float


def partial_transpose_alice(m: BlockOperator) -> BlockOperator:
    """Transpose Alice's index: ``|a b><a' b'|  ->  |a' b><a b'|``.

    The result is regrouped into its own connected blocks, which need not
    coincide with the input blocks.
    """
    out: dict[tuple[BasisVector, BasisVector], float] = {}
    for (u, v), value in m.entries().items():
        out[(BasisVector(v.alice, u.bob), BasisVector(u.alice, v.bob))] = value
    return replace(m, blocks=assemble_blocks(out))


def trace_norm(op: BlockOperator) -> float:
    return math.fsum(float(np.sum(np.abs(w))) for w in op.eigenvalues())


def _pt_norm_and_min(m: BlockOperator) -> tuple[float, float]:
    spectra = partial_transpose_alice(m).eigenvalues()
    norm = math.fsum(float(np.sum(np.abs(w))) for w in spectra)
    lowest = min((float(np.min(w)) for w in spectra if len(w)), default=0.0)
    return norm, lowest


def log_negativity(m: BlockOperator) -> float:
    return math.log2(_pt_norm_and_min(m)[0])


def von_neumann_entropy(m: BlockOperator) -> float:
    """``-sum(lam * log2(lam))`` over the spectrum, with ``0 log 0 = 0``."""
    total = []
    for w in m.eigenvalues():
        if len(w) and w.min() < -PSD_CLIP:
            raise PSDViolationError(f"eigenvalue {w.min():.3e} is below -{PSD_CLIP:g}")
        pos = w[w > 0.0]
        total.extend((-pos * np.log2(pos)).tolist())
    return math.fsum(total)


def entropy_truncation_bound(m: BlockDensityMatrix) -> float:
    """Bound on |S(untruncated) - S(truncated)| for ``m`` or any of its reductions.

    For ``rho = kept + rest`` with ``tr rest = d``, the entropy lies between
    ``S(kept) + S(rest) - h(d)`` and ``S(kept) + S(rest)`` (unnormalised
    entropies), so the error is at most ``max(S(rest), -(1-d) log2(1-d))``.
    ``S(rest)`` is bounded through the block-weight law.
    """
    d = m.trace_deficit
    if d <= 0.0:
        return 0.0
    if m.law is None:
        return math.inf
    rest = m.law.entropy_tail_bound(m.n_max + 1, _TAIL_BLOCK_RANK)
    return max(rest, -(1.0 - d) * math.log2(1.0 - d) if d < 1.0 else math.inf)


def negativity_truncation_bound(m: BlockDensityMatrix, pt_norm: float) -> float:
    # the discarded PSD part has partial-transpose trace norm at most 2 * d
    slack = 2.0 * m.trace_deficit
    if slack == 0.0:
        return 0.0
    if pt_norm <= slack:
        return math.inf
    return slack / (math.log(2.0) * (pt_norm - slack))


def entanglement_report(m: BlockDensityMatrix) -> EntanglementReport:
    pt_norm, pt_min = _pt_norm_and_min(m)
    s_ab = von_neumann_entropy(m)
    s_a = von_neumann_entropy(partial_trace_bob(m))
    s_b = von_neumann_entropy(partial_trace_alice(m))
    neg_bound = negativity_truncation_bound(m, pt_norm) + ROUNDING_SLACK
    ent_bound = entropy_truncation_bound(m) + ROUNDING_SLACK * max(1.0, s_ab, s_b)
    return EntanglementReport(
        family=m.family,
        q=m.q,
        n_max=m.n_max,
        log_negativity=math.log2(pt_norm),
        S_A=s_a,
        S_B=s_b,
        S_AB=s_ab,
        mutual_information=s_a + s_b - s_ab,
        min_pt_eigenvalue=pt_min,
        trace_deficit=m.trace_deficit,
        tail_bound_measures=max(neg_bound, 3.0 * ent_bound),
        negativity_bound=neg_bound,
        entropy_bound=ent_bound,
    )


def mutual_information(m: BlockDensityMatrix) -> EntanglementReport:
    """Full report; ``report.mutual_information`` is ``S_A + S_B - S_AB``."""
    return entanglement_report(m)
