"""Matrix-weighted graphs and their Laplacians."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.linalg import block_diag

from .blocks import BlockMatrix
from .errors import BadVertexId, DuplicateEdge, MwGraphError, SelfLoop, WeightDimMismatch
from .linalg import PsdMatrix, make_psd, rank_of
from .partition import Partition, Provenance
from .tolerance import DEFAULT_TOL, TolerancePolicy


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: PsdMatrix


class MwGraph:
    """Undirected graph on vertices ``1..n`` with a PSD ``d x d`` weight per edge.

    Edges are stored with ``u < v`` and sorted lexicographically.
    """

    def __init__(self, n: int, d: int, edges: tuple[Edge, ...]):
        self.n = n
        self.d = d
        self.edges = edges
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        self._weights: dict[tuple[int, int], PsdMatrix] = {}
        for e in edges:
            nbrs[e.u].append(e.v)
            nbrs[e.v].append(e.u)
            self._weights[(e.u, e.v)] = e.weight
        self._neighbors = {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._weights

    def weight(self, u: int, v: int) -> PsdMatrix:
        try:
            return self._weights[(min(u, v), max(u, v))]
        except KeyError:
            raise MwGraphError(f"no edge ({u},{v})") from None

    def adjacency_blocks(self) -> np.ndarray:
        """Weights laid out as an ``(n, n, d, d)`` array with zero diagonal."""
        a = np.zeros((self.n, self.n, self.d, self.d))
        for e in self.edges:
            a[e.u - 1, e.v - 1] = e.weight.entries
            a[e.v - 1, e.u - 1] = e.weight.entries
        return a

    def __repr__(self):
        return f"MwGraph(n={self.n}, d={self.d}, m={self.m})"


def build_graph(n: int, d: int, edges: Iterable, tol: TolerancePolicy = DEFAULT_TOL) -> MwGraph:
    """Validate ``(u, v, weight)`` triples and build a graph.

    ``weight`` may be a :class:`PsdMatrix` or anything array-like.
    """
    if int(n) != n or n < 1:
        raise BadVertexId(f"vertex count must be a positive integer, got {n!r}")
    if int(d) != d or d < 1:
        raise WeightDimMismatch(f"weight dimension must be a positive integer, got {d!r}")
    seen: dict[tuple[int, int], int] = {}
    out = []
    for idx, (u, v, w) in enumerate(edges):
        label = f"edge {idx} ({u},{v})"
        for x in (u, v):
            if isinstance(x, bool) or int(x) != x or not 1 <= x <= n:
                raise BadVertexId(f"{label}: vertex id {x!r} outside 1..{n}")
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoop(f"{label}: self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"{label}: duplicates edge {seen[key]}")
        seen[key] = idx
        if not isinstance(w, PsdMatrix):
            try:
                w = make_psd(w, tol)
            except MwGraphError as exc:
                raise type(exc)(f"{label}: {exc}") from None
        if w.dim != d:
            raise WeightDimMismatch(f"{label}: weight is {w.dim}x{w.dim}, expected {d}x{d}")
        out.append(Edge(key[0], key[1], w))
    out.sort(key=lambda e: (e.u, e.v))
    return MwGraph(int(n), int(d), tuple(out))


@dataclass(frozen=True)
class GraphMatrices:
    incidence: np.ndarray      # m x n, +1 on the lower endpoint
    weight_block: np.ndarray   # dm x dm block diagonal
    laplacian: PsdMatrix       # dn x dn
    degree_blocks: tuple[PsdMatrix, ...]


def incidence_matrix(g: MwGraph) -> np.ndarray:
    h = np.zeros((g.m, g.n))
    for k, e in enumerate(g.edges):
        h[k, e.u - 1] = 1.0
        h[k, e.v - 1] = -1.0
    return h


def laplacian(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> GraphMatrices:
    """``L = D - A``, cross-checked against ``(H^T x I) W (H x I)``."""
    n, d = g.n, g.d
    a = g.adjacency_blocks()
    deg = a.sum(axis=1)
    lap_blocks = -a
    lap_blocks[np.arange(n), np.arange(n)] = deg
    lap = lap_blocks.transpose(0, 2, 1, 3).reshape(n * d, n * d)

    h = incidence_matrix(g)
    w = block_diag(*[e.weight.entries for e in g.edges]) if g.m else np.zeros((0, 0))
    hk = np.kron(h, np.eye(d))
    lap2 = hk.T @ w @ hk
    if np.max(np.abs(lap - lap2), initial=0.0) > 1e-9 * (1 + np.max(np.abs(lap), initial=0.0)):
        raise RuntimeError("Laplacian constructions disagree")
    degrees = tuple(make_psd(deg[i], tol, clamp=True) for i in range(n))
    return GraphMatrices(h, w, make_psd(lap, tol, clamp=True), degrees)


def laplacian_rank(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> int:
    return rank_of(laplacian(g, tol).laplacian, tol)


def block_adjacency(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL) -> BlockMatrix:
    return BlockMatrix.from_blocks(g.adjacency_blocks(), tol)


def topological_components(g: MwGraph) -> Partition:
    """Connected components of the underlying simple graph (zero weights still count)."""
    label = [0] * (g.n + 1)
    current = 0
    for start in range(1, g.n + 1):
        if label[start]:
            continue
        current += 1
        stack = [start]
        label[start] = current
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not label[w]:
                    label[w] = current
                    stack.append(w)
    return Partition.from_labels(label[1:], Provenance.TOPOLOGY)
