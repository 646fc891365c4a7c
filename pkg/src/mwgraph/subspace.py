"""Subspaces of R^d held as orthonormal bases, with the lattice operations."""

from __future__ import annotations

import numpy as np

from .errors import DimMismatch
from .linalg import PsdMatrix, _thresholds
from .tolerance import DEFAULT_TOL, TolerancePolicy

CONTAINMENT_RESIDUAL = 1e-9


class Subspace:
    """Subspace of R^d with an orthonormal basis of shape ``(d, r)``.

    ``r == 0`` is the zero subspace and ``r == d`` the whole space.
    The constructor trusts its input; use :meth:`from_vectors` for raw spans.
    """

    __slots__ = ("_basis",)

    def __init__(self, basis: np.ndarray):
        basis = np.array(basis, dtype=float)
        basis.flags.writeable = False
        self._basis = basis

    @classmethod
    def from_vectors(cls, vectors, tol: TolerancePolicy = DEFAULT_TOL) -> "Subspace":
        """Span of the columns of ``vectors``."""
        m = np.atleast_2d(np.asarray(vectors, dtype=float))
        if m.shape[1] == 0:
            return cls.zero(m.shape[0])
        u, s, _ = np.linalg.svd(m, full_matrices=False)
        keep = s > tol.threshold(s[0] if s.size else 0.0)
        return cls(u[:, keep])

    @classmethod
    def zero(cls, d: int) -> "Subspace":
        return cls(np.zeros((d, 0)))

    @classmethod
    def full(cls, d: int) -> "Subspace":
        return cls(np.eye(d))

    @property
    def basis(self) -> np.ndarray:
        return self._basis

    @property
    def ambient_dim(self) -> int:
        return self._basis.shape[0]

    @property
    def dim(self) -> int:
        return self._basis.shape[1]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def projector(self) -> np.ndarray:
        return self._basis @ self._basis.T

    def contains(self, other: "Subspace", residual: float = CONTAINMENT_RESIDUAL) -> bool:
        """True if every basis vector of ``other`` lies in ``self`` up to ``residual``."""
        _check(self, other)
        if other.dim == 0 or self.is_full:
            return True
        b = other.basis
        r = b - self._basis @ (self._basis.T @ b)
        return bool(np.all(np.linalg.norm(r, axis=0) <= residual))

    def equals(self, other: "Subspace", residual: float = CONTAINMENT_RESIDUAL) -> bool:
        return self.contains(other, residual) and other.contains(self, residual)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _check(u: Subspace, v: Subspace):
    if u.ambient_dim != v.ambient_dim:
        raise DimMismatch(f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")


def kernel_of(a: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    w, v = a.eigenvalues, a.eigenvectors
    if not w.size:
        return Subspace.zero(0)
    return Subspace(v[:, w <= _thresholds(w, tol)[0]])


def range_of(a: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    w, v = a.eigenvalues, a.eigenvectors
    if not w.size:
        return Subspace.zero(0)
    return Subspace(v[:, w > _thresholds(w, tol)[0]])


def intersect(u: Subspace, v: Subspace, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    """Null space of the stacked complement projectors."""
    _check(u, v)
    if u.is_zero or v.is_full:
        return u
    if v.is_zero or u.is_full:
        return v
    eye = np.eye(u.ambient_dim)
    stacked = np.vstack([eye - u.projector(), eye - v.projector()])
    _, s, vt = np.linalg.svd(stacked)
    return Subspace(vt[s <= tol.threshold(s[0])].T)


def subspace_sum(u: Subspace, v: Subspace, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    """Span of both bases, re-orthogonalized."""
    _check(u, v)
    if v.is_zero or u.is_full:
        return u
    if u.is_zero or v.is_full:
        return v
    return Subspace.from_vectors(np.hstack([u.basis, v.basis]), tol)


def complement(u: Subspace, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    d = u.ambient_dim
    if u.is_zero:
        return Subspace.full(d)
    if u.is_full:
        return Subspace.zero(d)
    full_q, _ = np.linalg.qr(np.hstack([u.basis, np.eye(d)]))
    return Subspace(full_q[:, u.dim:d])
