"""Shared fixtures data and independent reference implementations for the tests."""

from __future__ import annotations

import numpy as np
from scipy.sparse.csgraph import connected_components

from mwgraph.generate import random_graph, random_psd
from mwgraph.linalg import decision, identity_matrix, make_psd, parallel_sum, series_sum, zero_matrix
from mwgraph.partition import Partition, Provenance
from mwgraph.subspace import Subspace, intersect, kernel_of, subspace_sum

CONTAIN_TOL = 1e-8
ACCEPTANCE_LINES: list[str] = []  # filled by test_acceptance, echoed in the run summary

# Printed closure values for the bundled examples (upper triangle, 1-based pairs).
X = np.array([[1.0, -1.0], [-1.0, 1.0]])
EX2_M4 = {
    (1, 2): np.diag([0.95, 0]), (2, 4): np.diag([0.95, 0]),
    (1, 3): np.diag([0, 1.125]), (3, 4): np.diag([0, 1.125]),
    (1, 4): np.eye(2), (3, 5): np.eye(2),
    (1, 5): np.diag([0, 0.7179]), (4, 5): np.diag([0, 0.7179]),
    (2, 3): 0.7 * X, (2, 5): 0.7 * X,
}
EX3_M3 = {
    (1, 2): np.diag([0, 0.75]), (2, 3): np.diag([0.9208, 0]), (2, 4): np.diag([0.3, 0]),
    (3, 4): np.eye(2), (1, 3): np.zeros((2, 2)), (1, 4): np.zeros((2, 2)),
}


def printed_dense(blocks: dict, n: int, d: int) -> np.ndarray:
    m = np.zeros((n * d, n * d))
    for i in range(n):
        m[i * d:(i + 1) * d, i * d:(i + 1) * d] = np.eye(d)
    for (i, j), b in blocks.items():
        m[(i - 1) * d:i * d, (j - 1) * d:j * d] = b
        m[(j - 1) * d:j * d, (i - 1) * d:i * d] = b.T
    return m


def span(*vectors) -> Subspace:
    return Subspace.from_vectors(np.array(vectors, dtype=float).T)


def same(u: Subspace, v: Subspace) -> bool:
    return u.equals(v, CONTAIN_TOL)


def random_psd_matrix(rng, d):
    """Random PSD matrix with random rank; a third of them use integer factors."""
    rank = int(rng.integers(0, d + 1))
    return make_psd(random_psd(rng, d, rank, integer=bool(rng.random() < 1 / 3)), clamp=True)


def psd_triples(count: int, seed: int = 0, dmax: int = 5):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        d = int(rng.integers(1, dmax + 1))
        yield tuple(random_psd_matrix(rng, d) for _ in range(3))


def graph_family(count: int = 200, nmax: int = 6, dmax: int = 3, profile: str = "mixed", offset: int = 0):
    """The random graph family used by the property and acceptance suites."""
    for s in range(offset, offset + count):
        rng = np.random.default_rng(s)
        n = int(rng.integers(2, nmax + 1))
        d = int(rng.integers(1, dmax + 1))
        p = float(rng.uniform(0.3, 0.9))
        yield s, random_graph(n, d, seed=s, edge_prob=p, rank_profile=profile)


def union_find_reference(n: int, passes: np.ndarray, provenance=Provenance.BRUTE_FORCE) -> Partition:
    _, labels = connected_components(np.asarray(passes, dtype=int), directed=False)
    return Partition.from_labels(list(labels), provenance)


def walk_kernels(g, t: int) -> dict:
    """Intersection of walk kernels over all length-``t`` walks, by explicit enumeration."""
    ek = {}
    for e in g.edges:
        k = kernel_of(e.weight)
        ek[(e.u, e.v)] = ek[(e.v, e.u)] = k
    out = {}
    for i in range(1, g.n + 1):
        walks = [((i,), Subspace.zero(g.d))]
        for _ in range(t):
            walks = [(w + (x,), subspace_sum(k, ek[(w[-1], x)])) for w, k in walks for x in g.neighbors(w[-1])]
        for j in range(1, g.n + 1):
            acc = Subspace.full(g.d)
            for w, k in walks:
                if w[-1] == j:
                    acc = intersect(acc, k)
            out[i, j] = acc
    return out


def literal_closure(g, kmax: int) -> list[dict]:
    """Per-block scalar evaluation of D(A^0 + ... + A^k), A^t = D(A^(t-1) : D(A)).

    Returns one dict per k = 1..kmax mapping (i, j) to a PsdMatrix.
    """
    n, d = g.n, g.d
    ids = range(1, n + 1)
    da = {(i, j): decision(g.weight(i, j))[0] if g.has_edge(i, j) else zero_matrix(d) for i in ids for j in ids}
    acc = {(i, j): identity_matrix(d) if i == j else zero_matrix(d) for i in ids for j in ids}
    power = dict(da)
    out = []
    for t in range(1, kmax + 1):
        if t > 1:
            new = {}
            for i in ids:
                for j in ids:
                    s = zero_matrix(d)
                    for k in ids:
                        s = series_sum(s, parallel_sum(power[i, k], da[k, j]))
                    new[i, j] = decision(s)[0]
            power = new
        acc = {key: series_sum(acc[key], power[key]) for key in acc}
        out.append({key: decision(v)[0] for key, v in acc.items()})
    return out
