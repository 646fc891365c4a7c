"""Pairwise path-kernel test over all simple paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import BadVertexId, NotAPath, PathBudgetExceeded
from .graph import MwGraph
from .linalg import parallel_sum
from .partition import Partition, Provenance, merge_passing_pairs
from .subspace import Subspace, intersect, kernel_of, subspace_sum
from .tolerance import DEFAULT_TOL, TolerancePolicy

DEFAULT_PATH_BUDGET = 10**6


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def charge(self, pair):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise PathBudgetExceeded(self.limit, pair)


class _KernelCache:
    """Memoized subspace sums and intersections keyed on object identity.

    Operations that leave a subspace unchanged hand back the same object, so
    long runs of paths with repeated kernels hit the cache.
    """

    def __init__(self, g: MwGraph, tol: TolerancePolicy):
        self.tol = tol
        self.edge = {(e.u, e.v): kernel_of(e.weight, tol) for e in g.edges}
        self._sum: dict = {}
        self._cap: dict = {}
        self.zero = Subspace.zero(g.d)
        self.full = Subspace.full(g.d)

    def edge_kernel(self, u, v) -> Subspace:
        return self.edge[(u, v) if u < v else (v, u)]

    def add(self, a: Subspace, b: Subspace) -> Subspace:
        key = (id(a), id(b))
        hit = self._sum.get(key)
        if hit is None:
            if a.contains(b):
                res = a
            elif b.contains(a):
                res = b
            else:
                res = subspace_sum(a, b, self.tol)
            hit = self._sum[key] = (a, b, res)
        return hit[2]

    def meet(self, a: Subspace, b: Subspace) -> Subspace:
        key = (id(a), id(b))
        hit = self._cap.get(key)
        if hit is None:
            if b.contains(a):
                res = a
            elif a.contains(b):
                res = b
            else:
                res = intersect(a, b, self.tol)
            hit = self._cap[key] = (a, b, res)
        return hit[2]


def _check_pair(g: MwGraph, i: int, j: int):
    for v in (i, j):
        if isinstance(v, bool) or int(v) != v or not 1 <= v <= g.n:
            raise BadVertexId(f"vertex id {v!r} outside 1..{g.n}")
    if i == j:
        raise BadVertexId(f"pair ({i},{j}) needs two distinct vertices")


def _walk_paths(g: MwGraph, i: int, j: int, cache: _KernelCache | None):
    """Yield ``(path, kernel)`` for simple ``i -> j`` paths in nondecreasing length.

    Paths of one length are produced together, in lexicographic order (the
    order a depth-first search visiting neighbors by id would find them).
    ``kernel`` is None when no cache is given.
    """
    frontier = [((i,), cache.zero if cache else None)]
    while frontier:
        nxt = []
        for path, ker in frontier:
            last = path[-1]
            for w in g.neighbors(last):
                if w in path:
                    continue
                k = cache.add(ker, cache.edge_kernel(last, w)) if cache else None
                if w == j:
                    yield path + (w,), k
                else:
                    nxt.append((path + (w,), k))
        frontier = nxt


def enumerate_simple_paths(g: MwGraph, i: int, j: int, path_budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every simple path from ``i`` to ``j``, shortest first."""
    _check_pair(g, i, j)
    budget = _Budget(path_budget)
    for path, _ in _walk_paths(g, i, j, None):
        budget.charge((i, j))
        yield path


def path_kernel(g: MwGraph, path: Sequence[int], tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    """Sum of the edge kernels along ``path``."""
    if len(path) < 2 or len(set(path)) != len(path):
        raise NotAPath(f"{tuple(path)} is not a simple path with at least one edge")
    k = Subspace.zero(g.d)
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise NotAPath(f"{tuple(path)} uses missing edge ({u},{v})")
        k = subspace_sum(k, kernel_of(g.weight(u, v), tol), tol)
    return k


def path_chain_kernel(g: MwGraph, path: Sequence[int], tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    """Kernel of the parallel-sum chain of the path weights (independent check)."""
    acc = g.weight(path[0], path[1])
    for u, v in zip(path[1:], path[2:]):
        acc = parallel_sum(acc, g.weight(u, v), tol)
    return kernel_of(acc, tol)


@dataclass
class PathSet:
    source: int
    target: int
    paths: list
    accumulated_kernel: Subspace


def _pair(g, i, j, early_stop, budget, cache, keep_paths):
    _check_pair(g, i, j)
    acc = cache.full
    paths = []
    for path, ker in _walk_paths(g, i, j, cache):
        budget.charge((i, j))
        if keep_paths:
            paths.append(path)
        acc = cache.meet(acc, ker)
        if early_stop and acc.is_zero:
            break
    return acc, paths


def pair_kernel(g: MwGraph, i: int, j: int, early_stop: bool = True,
                path_budget: int | None = DEFAULT_PATH_BUDGET,
                tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    """Intersection of path kernels over all simple ``i -> j`` paths.

    With no path at all the result is the whole space.
    """
    acc, _ = _pair(g, i, j, early_stop, _Budget(path_budget), _KernelCache(g, tol), False)
    return acc


def path_set(g: MwGraph, i: int, j: int, path_budget: int | None = DEFAULT_PATH_BUDGET,
             tol: TolerancePolicy = DEFAULT_TOL) -> PathSet:
    acc, paths = _pair(g, i, j, False, _Budget(path_budget), _KernelCache(g, tol), True)
    return PathSet(i, j, paths, acc)


@dataclass(frozen=True)
class BruteForceResult:
    connected: bool
    partition: Partition
    passes: np.ndarray  # n x n boolean, True where the pair kernel is {0}
    paths_enumerated: int


def brute_force_partition(g: MwGraph, early_stop: bool = True,
                          path_budget: int | None = DEFAULT_PATH_BUDGET,
                          tol: TolerancePolicy = DEFAULT_TOL) -> BruteForceResult:
    """Merge every pair whose path-kernel intersection is {0}.

    ``path_budget`` caps the number of paths enumerated over the whole run.
    """
    n = g.n
    budget = _Budget(path_budget)
    cache = _KernelCache(g, tol)
    passes = np.eye(n, dtype=bool)
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            acc, _ = _pair(g, i, j, early_stop, budget, cache, False)
            if acc.is_zero:
                passes[i - 1, j - 1] = passes[j - 1, i - 1] = True
                pairs.append((i, j))
    part = merge_passing_pairs(n, pairs, Provenance.BRUTE_FORCE)
    return BruteForceResult(part.is_connected, part, passes, budget.used)
