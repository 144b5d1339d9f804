"""Exception hierarchy shared by every uzspectra module.

All library failures derive from :class:`UzSpectraError`, and most also
derive from the builtin they specialise (``ValueError`` for bad inputs,
``ArithmeticError`` for numerical breakdown) so callers can catch either.
"""

from __future__ import annotations

from typing import Optional, Tuple


class UzSpectraError(Exception):
    """Base class for all uzspectra errors."""


class ShapeError(UzSpectraError, ValueError):
    """Operand has the wrong shape (non-square, empty, mismatched)."""


class NonFiniteError(UzSpectraError, ValueError):
    """Matrix contains NaN or infinite entries."""


class ConvergenceError(UzSpectraError, ArithmeticError):
    """Iterative eigensolver did not converge.

    Attributes:
        iterations: Number of QR sweeps performed before giving up.
        dimension: Dimension of the matrix being decomposed.
    """

    def __init__(self, message: str, *, iterations: int,
                 dimension: int) -> None:
        super().__init__(message)
        self.iterations: int = iterations
        self.dimension: int = dimension


class NotHermitianError(UzSpectraError, ValueError):
    """Matrix expected to be Hermitian is not, within tolerance."""


class NotPositiveDefiniteError(UzSpectraError, ArithmeticError):
    """Hermitian matrix has a non-positive eigenvalue.

    Attributes:
        eigenvalue: The offending (smallest) eigenvalue.
    """

    def __init__(self, message: str, *, eigenvalue: float) -> None:
        super().__init__(message)
        self.eigenvalue: float = eigenvalue


class NotDiagonalizableError(UzSpectraError, ArithmeticError):
    """Eigenvector basis is (numerically) defective.

    Attributes:
        condition: Condition-number estimate of the eigenvector basis.
    """

    def __init__(self, message: str, *, condition: float) -> None:
        super().__init__(message)
        self.condition: float = condition


class DomainError(UzSpectraError, ValueError):
    """Parameter outside the domain where a construction is defined.

    Attributes:
        quantity: Name of the offending quantity (``"mu"``, ``"R1"``...).
        value: Its value.
    """

    def __init__(self, message: str, *, quantity: str,
                 value: complex) -> None:
        super().__init__(message)
        self.quantity: str = quantity
        self.value: complex = value


class ConfigError(UzSpectraError, ValueError):
    """Invalid configuration document or override.

    Attributes:
        path: Dotted path of the offending field, when known.
        detail: The message without the path prefix.
    """

    def __init__(self, message: str, *, path: Optional[str] = None) -> None:
        super().__init__(f"{path}: {message}" if path else message)
        self.path: Optional[str] = path
        self.detail: str = message

    def under(self, prefix: str) -> ConfigError:
        """The same error with its path placed below ``prefix``."""
        if not prefix or (self.path or "").startswith(prefix):
            return self
        return ConfigError(self.detail,
                           path=f"{prefix}.{self.path}" if self.path
                           else prefix)


class GridPointError(UzSpectraError):
    """Numerical failure at a specific sweep grid point.

    Attributes:
        point: Parameter values of the failing grid point.
    """

    def __init__(self, message: str, *,
                 point: Tuple[Tuple[str, float], ...]) -> None:
        where: str = ", ".join(f"{k}={v!r}" for k, v in point)
        super().__init__(f"{message} at grid point ({where})")
        self.point: Tuple[Tuple[str, float], ...] = point
