"""Numerical tolerances used across the library.

Every function that compares floating-point results takes an optional
``tol: Tolerances`` argument defaulting to :data:`DEFAULT_TOLERANCES`, so a
whole verification run can be tightened or loosened from one place.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace
from math import isfinite
from typing import Any, Dict, Final

from .errors import ConfigError


@dataclass(frozen=True)
class Tolerances:
    """Immutable record of numeric thresholds.

    Attributes:
        eig: Eigenpair residual bound, relative to ``||A||_F``.
        herm: Hermiticity check, relative to ``||S||``.
        sqrt: Square-root re-squaring bound, relative to ``||S||``.
        max_dim: Largest matrix the eigensolver accepts.
        max_iter_factor: QR sweeps allowed per unit of dimension.
        ep: Discriminant band treated as an exceptional point.
        cluster: Eigenvalue clustering radius, relative to scale.
        rank: Singular-value cutoff relative to the largest one.
        real: Imaginary parts below ``real * scale`` count as real.
        pairing: Conjugate-pair matching tolerance.
        commutation: Algebra relation residual bound.
        algebra: Casimir, Hopf and adjoint-identity residual bound.
        series_tail: Scalar tail bound for truncated sin/cos series.
        binormal_cond: Largest admissible eigenvector-basis condition.
    """

    eig: float = 1e-10
    herm: float = 1e-12
    sqrt: float = 1e-10
    max_dim: int = 256
    max_iter_factor: int = 30
    ep: float = 1e-9
    cluster: float = 1e-7
    rank: float = 1e-9
    real: float = 1e-9
    pairing: float = 1e-9
    commutation: float = 1e-11
    algebra: float = 1e-10
    series_tail: float = 1e-12
    binormal_cond: float = 1e8

    def __post_init__(self) -> None:
        for f in fields(self):
            value: Any = getattr(self, f.name)
            if not isfinite(value) or value <= 0:
                raise ConfigError("must be a positive finite number",
                                  path=f"tolerances.{f.name}")

    def updated(self, **overrides: Any) -> Tolerances:
        """Return a validated copy with ``overrides`` applied.

        Raises:
            ConfigError: On unknown names or non-positive values.
        """
        known: set[str] = {f.name for f in fields(self)}
        for name in overrides:
            if name not in known:
                raise ConfigError("unknown tolerance",
                                  path=f"tolerances.{name}")
        return replace(self, **overrides)

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


DEFAULT_TOLERANCES: Final[Tolerances] = Tolerances()
