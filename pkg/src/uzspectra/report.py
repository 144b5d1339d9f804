"""Pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True)
class Check:
    """One matrix identity evaluated numerically.

    Attributes:
        name: Human-readable identity, e.g. ``"[J0,J+] = (e^{2zJ+}-1)/z"``.
        residual: Frobenius norm of ``lhs - rhs``.
        bound: Largest residual accepted.
        residual_map: Entrywise ``|lhs - rhs|``, kept for failed checks.
    """

    name: str
    residual: float
    bound: float
    residual_map: Optional[NDArray[np.float64]] = field(default=None,
                                                        compare=False,
                                                        repr=False)

    @property
    def passed(self) -> bool:
        return self.residual <= self.bound

    def line(self) -> str:
        status: str = "ok  " if self.passed else "FAIL"
        return (f"{status} {self.name:48s} residual={self.residual:.3e} "
                f"bound={self.bound:.1e}")


def check(name: str, difference: NDArray[np.complex128], bound: float,
          *, keep_map: bool = False) -> Check:
    """Build a :class:`Check` from ``lhs - rhs``.

    The entrywise residual map is attached when the check fails or when
    ``keep_map`` is set.
    """
    residual: float = float(np.linalg.norm(difference))
    keep: bool = keep_map or residual > bound
    return Check(name=name,
                 residual=residual,
                 bound=bound,
                 residual_map=np.abs(difference) if keep else None)


@dataclass(frozen=True)
class Report:
    """Ordered collection of checks from one verification suite."""

    title: str
    checks: Tuple[Check, ...]

    @classmethod
    def of(cls, title: str, checks: Iterable[Check]) -> Report:
        return cls(title=title, checks=tuple(checks))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def residuals(self) -> Dict[str, float]:
        return {c.name: c.residual for c in self.checks}

    def render(self) -> str:
        lines: list[str] = [f"== {self.title}"]
        lines.extend(c.line() for c in self.checks)
        return "\n".join(lines)
