"""Labelled product bases and block-diagonal real symmetric operators.

A density matrix between Alice (one Minkowski qubit) and Bob (Rindler Fock
towers) is stored as a list of small dense blocks, each with the basis vectors
it acts on. Entries between different blocks are zero by construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .bogoliubov import GeometricBlockLaw
from .errors import NonHermitianError

HERMITIAN_ATOL = 1e-14
JACOBI_RTOL = 1e-15
JACOBI_MAX_SWEEPS = 60


class AliceKind(str, Enum):
    HELICITY = "helicity_qubit"
    NUMBER = "number_qubit"


class Helicity(str, Enum):
    UP = "up"
    DOWN = "down"
    NONE = "none"


_ALICE_VALUES = {AliceKind.HELICITY: ("up", "down"), AliceKind.NUMBER: ("zero", "one")}


@dataclass(frozen=True)
class AliceLabel:
    kind: AliceKind
    value: str

    def __post_init__(self) -> None:
        if self.value not in _ALICE_VALUES[self.kind]:
            raise ValueError(f"{self.value!r} is not a {self.kind.value} state")

    def __str__(self) -> str:
        return self.value


ALICE_UP = AliceLabel(AliceKind.HELICITY, "up")
ALICE_DOWN = AliceLabel(AliceKind.HELICITY, "down")
ALICE_ZERO = AliceLabel(AliceKind.NUMBER, "zero")
ALICE_ONE = AliceLabel(AliceKind.NUMBER, "one")


@dataclass(frozen=True)
class BobLabel:
    """Bob's Rindler occupation ``n`` in the tower of the given helicity."""

    helicity: Helicity
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"occupation must be nonnegative, got {self.n}")

    def __str__(self) -> str:
        if self.helicity is Helicity.NONE:
            return str(self.n)
        return f"{self.n}{self.helicity.value}"


@dataclass(frozen=True)
class BasisVector:
    """Product vector ``|alice> (x) |bob>``; a missing side means it was traced out."""

    alice: AliceLabel | None
    bob: BobLabel | None

    def __str__(self) -> str:
        parts = [str(p) for p in (self.alice, self.bob) if p is not None]
        return "|" + ",".join(parts) + ">"


@dataclass(frozen=True)
class Block:
    basis: tuple[BasisVector, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] != len(self.basis):
            raise ValueError(f"block matrix shape {m.shape} does not match {len(self.basis)} basis vectors")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("repeated basis vector inside a block")
        m.setflags(write=False)
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def asymmetry(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.T), initial=0.0))


@dataclass(frozen=True)
class BlockOperator:
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        seen: set[BasisVector] = set()
        for b in self.blocks:
            clash = seen.intersection(b.basis)
            if clash:
                raise ValueError(f"basis vector {next(iter(clash))} appears in two blocks")
            seen.update(b.basis)
            if b.asymmetry() > HERMITIAN_ATOL:
                raise NonHermitianError(f"block over {[str(v) for v in b.basis]} is not symmetric")

    @property
    def basis(self) -> list[BasisVector]:
        return [v for b in self.blocks for v in b.basis]

    def entries(self) -> dict[tuple[BasisVector, BasisVector], float]:
        out = {}
        for b in self.blocks:
            for i, u in enumerate(b.basis):
                for j, v in enumerate(b.basis):
                    out[(u, v)] = float(b.matrix[i, j])
        return out

    def trace(self) -> float:
        return math.fsum(float(np.trace(b.matrix)) for b in self.blocks)

    def scaled(self, factor: float):
        return replace(self, blocks=tuple(Block(b.basis, factor * b.matrix) for b in self.blocks))

    def eigenvalues(self) -> list[np.ndarray]:
        """Spectrum of each block, in block order."""
        return [hermitian_eigenvalues(b.matrix) for b in self.blocks]

    def spectrum(self) -> np.ndarray:
        """Full spectrum, descending."""
        if not self.blocks:
            return np.zeros(0)
        return np.sort(np.concatenate(self.eigenvalues()))[::-1]

    def dense(self, order: Iterable[BasisVector] | None = None) -> np.ndarray:
        order = list(self.basis if order is None else order)
        index = {v: i for i, v in enumerate(order)}
        out = np.zeros((len(order), len(order)))
        for (u, v), value in self.entries().items():
            if u in index and v in index:
                out[index[u], index[v]] = value
            elif value != 0.0:
                raise KeyError(f"nonzero entry on {u}, {v} outside the requested basis")
        return out

    def max_entry_difference(self, other: "BlockOperator") -> float:
        a, b = self.entries(), other.entries()
        return max((abs(a.get(k, 0.0) - b.get(k, 0.0)) for k in a.keys() | b.keys()), default=0.0)


@dataclass(frozen=True)
class BlockDensityMatrix(BlockOperator):
    """Block operator plus the bookkeeping of how it was truncated.

    ``trace_deficit`` is the exact probability weight of the discarded blocks,
    and ``law`` (when known) gives the trace of every block, kept or not.
    """

    family: str | None = None
    q: float = 0.0
    n_max: int = 0
    trace_deficit: float = 0.0
    law: GeometricBlockLaw | None = field(default=None, compare=False)


@dataclass(frozen=True)
class StateVector:
    """Truncated real pure state over (Alice label, R occupation, L occupation)."""

    family: str
    amplitudes: Mapping[tuple[AliceLabel, int, int], float]
    n_max: int
    tail: float = 0.0
    q: float = 0.0

    @property
    def norm_squared(self) -> float:
        return math.fsum(a * a for a in self.amplitudes.values())


def assemble_blocks(
    entries: Mapping[tuple[BasisVector, BasisVector], float],
) -> tuple[Block, ...]:
    """Group a sparse symmetric operator into its connected diagonal blocks.

    Connectivity is structural: any listed entry links its two vectors, even
    when its value is zero. Blocks and the vectors inside them keep the order
    in which the vectors first appear in ``entries``.
    """
    index: dict[BasisVector, int] = {}
    for u, v in entries:
        index.setdefault(u, len(index))
        index.setdefault(v, len(index))
    if not index:
        return ()
    rows = [index[u] for u, _ in entries]
    cols = [index[v] for _, v in entries]
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(index), len(index)))
    _, labels = connected_components(graph, directed=False)
    vectors = list(index)
    members: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        members.setdefault(lab, []).append(i)
    # position of every vector inside its own block
    local = {}
    for idx in members.values():
        for k, i in enumerate(idx):
            local[vectors[i]] = k
    mats = {lab: np.zeros((len(idx), len(idx))) for lab, idx in members.items()}
    for (u, v), value in entries.items():
        mats[labels[index[u]]][local[u], local[v]] = value
    return tuple(
        Block(tuple(vectors[i] for i in idx), mats[lab])
        for lab, idx in sorted(members.items(), key=lambda kv: kv[1][0])
    )


def block_trace(m: BlockOperator) -> float:
    return m.trace()


def _partial_trace(m: BlockDensityMatrix, keep: str) -> BlockDensityMatrix:
    acc: dict[tuple[BasisVector, BasisVector], float] = {}
    for b in m.blocks:
        for i, u in enumerate(b.basis):
            for j, v in enumerate(b.basis):
                if keep == "alice":
                    if u.bob != v.bob:
                        continue
                    key = (BasisVector(u.alice, None), BasisVector(v.alice, None))
                else:
                    if u.alice != v.alice:
                        continue
                    key = (BasisVector(None, u.bob), BasisVector(None, v.bob))
                acc[key] = acc.get(key, 0.0) + float(b.matrix[i, j])
    return replace(m, blocks=assemble_blocks(acc))


def partial_trace_bob(m: BlockDensityMatrix) -> BlockDensityMatrix:
    """Alice's reduced state."""
    return _partial_trace(m, keep="alice")


def partial_trace_alice(m: BlockDensityMatrix) -> BlockDensityMatrix:
    """Bob's reduced state."""
    return _partial_trace(m, keep="bob")


def _as_symmetric(matrix: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(matrix):
        raise NonHermitianError("complex matrices are not supported")
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
    if np.max(np.abs(a - a.T), initial=0.0) > HERMITIAN_ATOL * scale:
        raise NonHermitianError("matrix is not symmetric within tolerance")
    return 0.5 * (a + a.T)


def hermitian_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a small real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(w, V)`` with ``w`` descending and ``matrix = V @ diag(w) @ V.T``.
    """
    a = _as_symmetric(matrix)
    n = a.shape[0]
    v = np.eye(n)
    fro = float(np.linalg.norm(a))
    for _ in range(JACOBI_MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= JACOBI_RTOL * fro or fro == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                gap = a[q, q] - a[p, p]
                if abs(apq) <= 1e-150 * abs(gap) or apq == 0.0:
                    # shifts eigenvalues by at most apq**2 / gap
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = gap / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Real spectrum of a small symmetric matrix, descending.

    1x1 and 2x2 blocks use closed forms; larger ones fall back to Jacobi.
    """
    a = _as_symmetric(matrix)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return a[0].copy()
    if n == 2:
        mean = 0.5 * (a[0, 0] + a[1, 1])
        radius = math.hypot(0.5 * (a[0, 0] - a[1, 1]), a[0, 1])
        return np.array([mean + radius, mean - radius])
    return hermitian_eigh(a)[0]
