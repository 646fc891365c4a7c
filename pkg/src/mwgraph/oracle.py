"""Exact clustering from the Laplacian kernel."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadVertexId
from .graph import MwGraph, laplacian
from .linalg import rank_of
from .partition import Partition, Provenance, merge_passing_pairs
from .subspace import Subspace, kernel_of
from .tolerance import DEFAULT_TOL, TolerancePolicy

BLOCK_TOL = 1e-8


@dataclass(frozen=True)
class KernelReport:
    n: int
    d: int
    basis: Subspace       # ker L inside R^{dn}
    laplacian_rank: int

    @property
    def connected(self) -> bool:
        return self.laplacian_rank == self.d * (self.n - 1)

    def vertex_blocks(self) -> np.ndarray:
        """``out[i, :, c]`` is block ``x_{i+1}`` of basis vector ``c``."""
        return self.basis.basis.reshape(self.n, self.d, -1)


@dataclass(frozen=True)
class OracleResult:
    connected: bool
    partition: Partition
    rank: int
    kernel: np.ndarray  # dn x r orthonormal basis of ker L


def oracle_kernel(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> KernelReport:
    lap = laplacian(g, tol).laplacian
    return KernelReport(g.n, g.d, kernel_of(lap, tol), rank_of(lap, tol))


def kernel_basis(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    return oracle_kernel(g, tol).basis.basis


def _limits(report: KernelReport) -> np.ndarray:
    return BLOCK_TOL * (1 + np.linalg.norm(report.basis.basis, axis=0))


def oracle_same_cluster(report: KernelReport, i: int, j: int) -> bool:
    """True iff every kernel basis vector has (numerically) equal blocks at ``i`` and ``j``."""
    for v in (i, j):
        if not 1 <= v <= report.n:
            raise BadVertexId(f"vertex id {v} outside 1..{report.n}")
    blocks = report.vertex_blocks()
    diff = np.linalg.norm(blocks[i - 1] - blocks[j - 1], axis=0)
    return bool(np.all(diff <= _limits(report)))


def oracle_partition(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> OracleResult:
    """Vertices share a cluster iff every kernel vector agrees on their blocks.

    Agreement means ``||x_i - x_j|| <= 1e-8 (1 + ||x||)`` for each vector
    of an orthonormal kernel basis.
    """
    report = oracle_kernel(g, tol)
    n = g.n
    blocks = report.vertex_blocks()
    limit = _limits(report)
    pairs = []
    for i in range(n):
        diff = np.linalg.norm(blocks[i + 1:] - blocks[i], axis=1)  # (n-i-1, r)
        ok = np.all(diff <= limit, axis=1)
        pairs.extend((i + 1, i + 2 + k) for k in np.flatnonzero(ok))
    part = merge_passing_pairs(n, pairs, Provenance.ORACLE)
    return OracleResult(report.connected, part, report.laplacian_rank, report.basis.basis)


def is_connected(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    return oracle_kernel(g, tol).connected
