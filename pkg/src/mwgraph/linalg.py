"""PSD matrix algebra.

Scalar operations act on :class:`PsdMatrix` values. The ``stack_*`` helpers
apply the same arithmetic to arrays of shape ``(..., d, d)`` and are what the
block closure uses; tests check that both paths agree.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import DimMismatch, NonFinite, NotPsd, NotSquare
from .tolerance import DEFAULT_TOL, TolerancePolicy


class DecisionTag(enum.Enum):
    """What the decision operator does to a block."""

    ZERO = 0
    GENERAL = 1
    IDENTITY = 2


class PsdMatrix:
    """Immutable symmetric PSD matrix with a cached eigendecomposition.

    Build instances with :func:`make_psd`; eigenvalues are ascending and the
    ones under the zero threshold are stored as exact zeros.
    """

    __slots__ = ("_entries", "_eigenvalues", "_eigenvectors")

    def __init__(self, entries, eigenvalues, eigenvectors):
        for arr in (entries, eigenvalues, eigenvectors):
            arr.flags.writeable = False
        self._entries = entries
        self._eigenvalues = eigenvalues
        self._eigenvectors = eigenvectors

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._eigenvalues

    @property
    def eigenvectors(self) -> np.ndarray:
        return self._eigenvectors

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def lam_max(self) -> float:
        return float(self._eigenvalues[-1]) if self.dim else 0.0

    def __array__(self, dtype=None, copy=None):
        return np.array(self._entries, dtype=dtype)

    def __repr__(self):
        return f"PsdMatrix({np.array2string(self._entries, precision=4)})"


def _sym(a: np.ndarray) -> np.ndarray:
    return (a + np.swapaxes(a, -1, -2)) / 2


def _thresholds(w: np.ndarray, tol: TolerancePolicy) -> np.ndarray:
    """Per-matrix zero threshold for ascending eigenvalue arrays ``(..., d)``."""
    lam_max = w[..., -1] if w.shape[-1] else np.zeros(w.shape[:-1])
    return np.maximum(tol.rel * np.maximum(lam_max, 1.0), tol.abs)[..., None]


def make_psd(raw, tol: TolerancePolicy = DEFAULT_TOL, *, clamp: bool = False) -> PsdMatrix:
    """Validate and symmetrize ``raw``.

    Eigenvalues at or below the zero threshold become exact zeros (the entries
    are rebuilt from the clamped spectrum when that changes anything).
    Negative eigenvalues beyond the threshold raise :class:`NotPsd` unless
    ``clamp`` is set, in which case they are zeroed too.
    """
    a = np.array(raw, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has NaN or infinite entries")
    s = _sym(a)
    w, v = np.linalg.eigh(s)
    if w.size:
        thr = _thresholds(w, tol)[0]
        if not clamp and w[0] < -thr:
            raise NotPsd(f"eigenvalue {w[0]:.6g} is below -{thr:.3g}")
        small = w <= thr
        if np.any(small & (w != 0)):
            w = np.where(small, 0.0, w)
            s = _sym((v * w) @ v.T)
    return PsdMatrix(s, w, v)


def zero_matrix(d: int) -> PsdMatrix:
    return PsdMatrix(np.zeros((d, d)), np.zeros(d), np.eye(d))


def identity_matrix(d: int) -> PsdMatrix:
    return PsdMatrix(np.eye(d), np.ones(d), np.eye(d))


def _check_dims(a: PsdMatrix, b: PsdMatrix):
    if a.dim != b.dim:
        raise DimMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


def rank_of(a: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> int:
    w = a.eigenvalues
    if not w.size:
        return 0
    return int(np.count_nonzero(w > _thresholds(w, tol)[0]))


def pinv(a: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> PsdMatrix:
    """Moore-Penrose pseudo-inverse via the cached spectrum."""
    w, v = a.eigenvalues, a.eigenvectors
    keep = w > _thresholds(w, tol)[0] if w.size else w > 0
    inv = np.divide(1.0, w, out=np.zeros_like(w), where=keep)
    order = np.argsort(inv, kind="stable")
    entries = _sym((v * inv) @ v.T)
    return PsdMatrix(entries, inv[order], v[:, order])


def series_sum(a: PsdMatrix, b: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> PsdMatrix:
    """``a + b``; its kernel is the intersection of the kernels."""
    _check_dims(a, b)
    return make_psd(a.entries + b.entries, tol, clamp=True)


def parallel_sum(a: PsdMatrix, b: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> PsdMatrix:
    """``a (a+b)^+ b``, symmetrized; its kernel is the sum of the kernels."""
    _check_dims(a, b)
    return make_psd(stack_parallel_sum(a.entries, b.entries, tol, clamp=False), tol, clamp=True)


def is_zero(a: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    if a.dim == 0:
        return True
    return bool(np.max(np.abs(a.entries)) <= tol.abs * a.dim or rank_of(a, tol) == 0)


def decision(a: PsdMatrix, tol: TolerancePolicy = DEFAULT_TOL) -> tuple[PsdMatrix, DecisionTag]:
    """Snap full-rank matrices to I and (numerically) zero ones to 0."""
    if is_zero(a, tol):
        return zero_matrix(a.dim), DecisionTag.ZERO
    if rank_of(a, tol) == a.dim:
        return identity_matrix(a.dim), DecisionTag.IDENTITY
    return a, DecisionTag.GENERAL


# --- stacked variants -------------------------------------------------------

def stack_rank(x: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    w = np.linalg.eigvalsh(_sym(x))
    return np.count_nonzero(w > _thresholds(w, tol), axis=-1)


def stack_tags(x: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Integer tag codes (``DecisionTag.value``) for every matrix in the stack."""
    d = x.shape[-1]
    r = stack_rank(x, tol)
    zero = (np.max(np.abs(x), axis=(-1, -2)) <= tol.abs * d) | (r == 0)
    return np.where(zero, DecisionTag.ZERO.value,
                    np.where(r == d, DecisionTag.IDENTITY.value, DecisionTag.GENERAL.value))


def stack_decide(x: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL):
    """Apply the decision operator to each matrix; returns ``(decided, tags)``."""
    tags = stack_tags(x, tol)
    out = np.array(x, dtype=float)
    out[tags == DecisionTag.ZERO.value] = 0.0
    out[tags == DecisionTag.IDENTITY.value] = np.eye(x.shape[-1])
    return out, tags


def stack_pinv(x: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    w, v = np.linalg.eigh(_sym(x))
    keep = w > _thresholds(w, tol)
    inv = np.divide(1.0, w, out=np.zeros_like(w), where=keep)
    return _sym((v * inv[..., None, :]) @ np.swapaxes(v, -1, -2))


def stack_parallel_sum(a: np.ndarray, b: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL,
                       *, clamp: bool = True) -> np.ndarray:
    """Parallel sum of matching stacks, symmetrized and eigenvalue-clamped."""
    c = _sym(a @ stack_pinv(a + b, tol) @ b)
    if not clamp:
        return c
    w, v = np.linalg.eigh(c)
    small = w <= _thresholds(w, tol)
    redo = np.any(small & (w != 0), axis=-1)
    if np.any(redo):
        wc = np.where(small[redo], 0.0, w[redo])
        vr = v[redo]
        c[redo] = _sym((vr * wc[..., None, :]) @ np.swapaxes(vr, -1, -2))
    return c
