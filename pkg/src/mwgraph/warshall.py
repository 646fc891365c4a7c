"""Warshall-style block closure over the series/parallel-sum algebra."""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import (BlockMatrix, block_decision, block_identity, block_vee, block_wedge,
                     symmetrized)
from .graph import MwGraph, block_adjacency
from .linalg import DecisionTag
from .partition import Partition, Provenance, merge_passing_pairs
from .tolerance import DEFAULT_TOL, TolerancePolicy

FORMS = ("powers", "compact")


@dataclass(frozen=True)
class WarshallResult:
    final: BlockMatrix
    steps: int
    connected: bool
    history: tuple[BlockMatrix, ...]   # M(G, 0) .. M(G, steps)
    powers: tuple[BlockMatrix, ...]    # A^1 .. A^steps (empty for the compact form)

    @property
    def partition(self) -> Partition:
        return identity_partition(self.final)


def identity_partition(m: BlockMatrix) -> Partition:
    """Merge ``i`` and ``j`` whenever block ``(i, j)`` is tagged Identity."""
    n = m.n
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if m.tag(i, j) is DecisionTag.IDENTITY]
    return merge_passing_pairs(n, pairs, Provenance.WARSHALL)


def next_power(prev: BlockMatrix | None, adj: BlockMatrix, tol: TolerancePolicy = DEFAULT_TOL,
               symmetrize: bool = True) -> BlockMatrix:
    """``A^1 = A : I`` and ``A^k = A^(k-1) : A``, left undecided.

    With ``symmetrize`` each power is averaged with its block transpose, which
    keeps the closure symmetric (the raw product is not). The averaged block
    has the intersection of both orientations' kernels.
    """
    if prev is None:
        return symmetrized(block_wedge(adj, block_identity(adj.n, adj.d), tol), tol)
    p = block_wedge(prev, adj, tol)
    return symmetrized(p, tol) if symmetrize else p


def walk_powers(g: MwGraph, kmax: int, tol: TolerancePolicy = DEFAULT_TOL,
                symmetrize: bool = True) -> list[BlockMatrix]:
    adj = block_adjacency(g, tol)
    out, p = [], None
    for _ in range(kmax):
        p = next_power(p, adj, tol, symmetrize)
        out.append(p)
    return out


def warshall_run(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL, form: str = "powers",
                 max_steps: int | None = None, symmetrize: bool = True) -> WarshallResult:
    """Iterate the closure until every block is Identity or ``n`` steps have run.

    ``form="powers"`` keeps the walk powers separately and sets
    ``M(k) = D(M(k-1) + A^k)``. ``form="compact"`` uses
    ``M(k) = D(M(k-1) + (M(k-1) : A))`` instead. Both are sound; the compact
    form can certify more pairs since it composes walks of mixed lengths.
    ``symmetrize=False`` drops the block-transpose averaging (see
    :func:`next_power`).
    """
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    n, d = g.n, g.d
    limit = n if max_steps is None else min(n, max_steps)
    adj = block_adjacency(g, tol)
    m = block_identity(n, d)
    history, powers = [m], []
    if n == 1:
        return WarshallResult(m, 0, True, tuple(history), ())
    p = None
    k = 0
    while k < limit:
        k += 1
        if form == "powers":
            p = next_power(p, adj, tol, symmetrize)
            powers.append(p)
            m = block_decision(block_vee(m, p, tol), tol)
        else:
            step = block_wedge(m, adj, tol)
            if symmetrize:
                step = symmetrized(step, tol)
            m = block_decision(block_vee(m, step, tol), tol)
        history.append(m)
        if m.all_identity():
            break
    return WarshallResult(m, k, m.all_identity(), tuple(history), tuple(powers))


def warshall_partition(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL, form: str = "powers") -> Partition:
    return warshall_run(g, tol, form).partition
