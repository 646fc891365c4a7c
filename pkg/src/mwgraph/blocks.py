"""Block matrices over PSD d x d blocks and the block-level operators."""

from __future__ import annotations

import numpy as np

from .linalg import DecisionTag, PsdMatrix, make_psd, stack_decide, stack_parallel_sum, stack_tags
from .tolerance import DEFAULT_TOL, TolerancePolicy


class BlockMatrix:
    """``n x n`` grid of ``d x d`` blocks stored as an array of shape ``(n, n, d, d)``.

    ``tags[i, j]`` records what the decision operator does (or did) to block
    ``(i, j)``. Array indices are 0-based; :meth:`block` and :meth:`tag` take
    1-based vertex ids.
    """

    __slots__ = ("_blocks", "_tags")

    def __init__(self, blocks: np.ndarray, tags: np.ndarray):
        blocks = np.array(blocks, dtype=float)
        tags = np.array(tags, dtype=np.int8)
        blocks.flags.writeable = False
        tags.flags.writeable = False
        self._blocks = blocks
        self._tags = tags

    @classmethod
    def from_blocks(cls, blocks: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> "BlockMatrix":
        return cls(blocks, stack_tags(blocks, tol))

    @property
    def blocks(self) -> np.ndarray:
        return self._blocks

    @property
    def tags(self) -> np.ndarray:
        return self._tags

    @property
    def n(self) -> int:
        return self._blocks.shape[0]

    @property
    def d(self) -> int:
        return self._blocks.shape[2]

    def block(self, i: int, j: int) -> np.ndarray:
        return self._blocks[i - 1, j - 1]

    def psd_block(self, i: int, j: int, tol: TolerancePolicy = DEFAULT_TOL) -> PsdMatrix:
        return make_psd(self.block(i, j), tol, clamp=True)

    def tag(self, i: int, j: int) -> DecisionTag:
        return DecisionTag(int(self._tags[i - 1, j - 1]))

    def all_identity(self) -> bool:
        return bool(np.all(self._tags == DecisionTag.IDENTITY.value))

    def dense(self) -> np.ndarray:
        n, d = self.n, self.d
        return self._blocks.transpose(0, 2, 1, 3).reshape(n * d, n * d)

    def tag_letters(self) -> list[str]:
        letters = {DecisionTag.ZERO.value: "0", DecisionTag.GENERAL.value: "G",
                   DecisionTag.IDENTITY.value: "I"}
        return ["".join(letters[int(t)] for t in row) for row in self._tags]

    def __repr__(self):
        return f"BlockMatrix(n={self.n}, d={self.d})"


def from_dense(m: np.ndarray, n: int, d: int, tol: TolerancePolicy = DEFAULT_TOL) -> BlockMatrix:
    blocks = np.asarray(m, dtype=float).reshape(n, d, n, d).transpose(0, 2, 1, 3)
    return BlockMatrix.from_blocks(blocks, tol)


def block_identity(n: int, d: int) -> BlockMatrix:
    """``I_{dn}``: identity blocks on the diagonal, zero elsewhere."""
    blocks = np.zeros((n, n, d, d))
    blocks[np.arange(n), np.arange(n)] = np.eye(d)
    tags = np.where(np.eye(n, dtype=bool), DecisionTag.IDENTITY.value, DecisionTag.ZERO.value)
    return BlockMatrix(blocks, tags)


def block_ones(n: int, d: int) -> BlockMatrix:
    """``1 1^T (x) I_d``, the closure of a connected graph."""
    return BlockMatrix(np.broadcast_to(np.eye(d), (n, n, d, d)),
                       np.full((n, n), DecisionTag.IDENTITY.value))


def block_vee(a: BlockMatrix, b: BlockMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> BlockMatrix:
    """Blockwise series sum."""
    return BlockMatrix.from_blocks(a.blocks + b.blocks, tol)


def _wedge_blocks(a: np.ndarray, b: np.ndarray, tol: TolerancePolicy) -> np.ndarray:
    n = a.shape[0]
    out = np.zeros_like(a)
    live_a = np.any(a != 0, axis=(0, 2, 3))  # column k of a has a nonzero block
    live_b = np.any(b != 0, axis=(1, 2, 3))  # row k of b has a nonzero block
    for k in range(n):
        if live_a[k] and live_b[k]:
            out += stack_parallel_sum(a[:, k, None], b[None, k], tol)
    return out


def block_wedge(a: BlockMatrix, b: BlockMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> BlockMatrix:
    """``C_ij = sum_k a_ik : b_kj`` with ``:`` the parallel sum, ``k`` ascending."""
    return BlockMatrix.from_blocks(_wedge_blocks(a.blocks, b.blocks, tol), tol)


def block_transpose(a: BlockMatrix) -> BlockMatrix:
    return BlockMatrix(a.blocks.transpose(1, 0, 3, 2), a.tags.T)


def symmetrized(a: BlockMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> BlockMatrix:
    """Average of ``a`` and its block transpose."""
    return BlockMatrix.from_blocks((a.blocks + a.blocks.transpose(1, 0, 3, 2)) / 2, tol)


def block_decision(a: BlockMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> BlockMatrix:
    decided, tags = stack_decide(a.blocks, tol)
    return BlockMatrix(decided, tags)
