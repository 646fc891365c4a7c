"""Seeded random graphs with PSD weights ``G^T G``."""

from __future__ import annotations

import numpy as np

from .errors import BadParams
from .graph import MwGraph, build_graph
from .tolerance import DEFAULT_TOL, TolerancePolicy

RANK_PROFILES = ("full", "mixed", "deficient", "integer")


def random_psd(rng: np.random.Generator, d: int, rank: int, integer: bool = False) -> np.ndarray:
    """``G^T G`` with ``G`` of shape ``(rank, d)``.

    Gaussian factors give rank exactly ``rank`` almost surely. Integer factors
    (entries in {-1, 0, 1}) give axis-aligned kernels and may lose rank.
    """
    if integer:
        f = rng.integers(-1, 2, size=(rank, d)).astype(float)
    else:
        f = rng.standard_normal((rank, d))
    return f.T @ f


def random_weight(rng: np.random.Generator, d: int, profile: str) -> np.ndarray:
    if profile == "full":
        while True:
            w = random_psd(rng, d, d)
            if np.linalg.eigvalsh(w)[0] > 1e-3:
                return w
    if profile == "mixed":
        return random_psd(rng, d, int(rng.integers(1, d + 1)))
    if profile == "deficient":
        return random_psd(rng, d, int(rng.integers(1, d)) if d > 1 else 0)
    if profile == "integer":
        return random_psd(rng, d, int(rng.integers(1, d + 1)), integer=True)
    raise BadParams(f"rank profile must be one of {RANK_PROFILES}, got {profile!r}")


def random_graph(n: int, d: int, seed=None, edge_prob: float = 0.5, rank_profile: str = "mixed",
                 tol: TolerancePolicy = DEFAULT_TOL) -> MwGraph:
    """Erdos-Renyi topology; each present edge gets an independent random weight."""
    if int(n) != n or n < 2 or int(d) != d or d < 1:
        raise BadParams(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    if not 0.0 <= edge_prob <= 1.0:
        raise BadParams("edge probability must lie in [0, 1]")
    if rank_profile not in RANK_PROFILES:
        raise BadParams(f"rank profile must be one of {RANK_PROFILES}, got {rank_profile!r}")
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < edge_prob:
                edges.append((u, v, random_weight(rng, d, rank_profile)))
    return build_graph(n, d, edges, tol)
