"""Numerical tolerances shared by every rank and kernel decision."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TolerancePolicy:
    """Zero-threshold settings.

    An eigenvalue (or singular value) ``lam`` of a matrix whose largest
    eigenvalue is ``lam_max`` counts as zero iff
    ``lam <= max(rel * max(lam_max, 1), abs)``.
    """

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if not (self.rel >= 0 and self.abs >= 0):
            raise ValueError("tolerances must be non-negative")

    def threshold(self, lam_max: float) -> float:
        return max(self.rel * max(float(lam_max), 1.0), self.abs)


DEFAULT_TOL = TolerancePolicy()
