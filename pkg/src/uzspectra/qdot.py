"""Double-quantum-dot hybrid qubit and its deformed effective model.

All energies are in GHz. The 4x4 Hamiltonian ``H_e`` is compared with
the large-detuning pairs ``E1+-`` and ``E2+-`` and with an effective
block Hamiltonian built from the two-dimensional deformed irrep at
deformation ``z = epsilon``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from math import isfinite, sqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DomainError
from .linalg import (
    ComplexMatrix,
    PolynomialCoefficients,
    eigen_decompose,
    polynomial_roots,
)
from .reps import GeneratorTriple, RepSpec, build_deformed_generators

logger: logging.Logger = logging.getLogger(__name__)

LEVELS: int = 4


@dataclass(frozen=True)
class QdotParams:
    """Level offsets, tunnel couplings and detuning.

    Defaults are the published GaAs asymmetric double-dot values.
    """

    deltaL: float = 3.0
    deltaR: float = 95.8
    t1: float = 1.8
    t2: float = 7.1
    t3: float = 11.5
    t4: float = 6.3
    epsilon: float = 0.0

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if not isfinite(value):
                raise DomainError(f"{name} must be finite", quantity=name,
                                  value=value)

    def at(self, epsilon: float) -> QdotParams:
        return replace(self, epsilon=epsilon)

    @property
    def tunnel_sum(self) -> float:
        return self.t1**2 + self.t2**2 + self.t3**2 + self.t4**2


def build_He(p: QdotParams) -> ComplexMatrix:
    """The real symmetric 4x4 hybrid-qubit Hamiltonian."""
    e: float = p.epsilon / 2.0
    return np.array([
        [p.deltaL + e, -p.t3, 0.0, p.t4],
        [-p.t3, -e, p.t1, 0.0],
        [0.0, p.t1, e, -p.t2],
        [p.t4, 0.0, -p.t2, p.deltaR - e],
    ], dtype=np.complex128)


def charpoly_coeffs(p: QdotParams) -> PolynomialCoefficients:
    """Closed-form ``(c0, c1, c2, c3)`` of ``det(lambda - H_e)``.

    The ``epsilon^2`` term of ``c0`` carries ``-deltaL deltaR``, as
    required by ``c0 = det(H_e)``.
    """
    eps: float = p.epsilon
    dl: float = p.deltaL
    dr: float = p.deltaR
    t1s, t2s, t3s = p.t1**2, p.t2**2, p.t3**2
    c3: float = -dl - dr
    c2: float = 0.5 * (eps * (dr - dl) - 2.0 * (p.tunnel_sum - dl * dr)
                       - eps * eps)
    c1: float = (0.25 * eps * eps * (dl + dr) + t1s * (dl + dr) + dl * t2s
                 + dr * t3s)
    c0: float = (eps**4 + 2.0 * eps**3 * (dl - dr)
                 + 4.0 * eps**2 * (p.tunnel_sum - dl * dr)
                 + 8.0 * eps * (dl * (t1s + t2s) - dr * (t1s + t3s))
                 + 16.0 * ((p.t2 * p.t3 - p.t1 * p.t4)**2 - dl * dr * t1s)
                 ) / 16.0
    return PolynomialCoefficients((c0, c1, c2, c3))


def exact_eigenvalues(p: QdotParams,
                      tol: Tolerances = DEFAULT_TOLERANCES
                      ) -> NDArray[np.float64]:
    """Ascending roots of the characteristic quartic.

    Cross-checked against the eigensolver on ``H_e``; a disagreement
    above ``1e-8`` relative is logged.
    """
    roots: NDArray[np.complex128] = polynomial_roots(charpoly_coeffs(p), tol)
    values: NDArray[np.float64] = np.sort(roots.real)
    direct: NDArray[np.float64] = np.sort(
        eigen_decompose(build_He(p), tol=tol).values.real)
    scale: float = max(1.0, float(np.abs(direct).max()))
    gap: float = float(np.abs(values - direct).max())
    if gap > 1e-8 * scale:
        logger.warning("quartic roots and eigensolver differ by %.3g at "
                       "epsilon=%r", gap, p.epsilon)
    return values


def approx_eigenvalues(p: QdotParams) -> Dict[str, float]:
    """``E1+- = (dL +- sqrt((dL + eps)^2 + 4 t3^2))/2`` and
    ``E2+- = (dR +- sqrt((dR - eps)^2 + 4 t2^2))/2``."""
    r1: float = sqrt((p.deltaL + p.epsilon)**2 + 4.0 * p.t3**2)
    r2: float = sqrt((p.deltaR - p.epsilon)**2 + 4.0 * p.t2**2)
    return {
        "E1+": 0.5 * (p.deltaL + r1),
        "E1-": 0.5 * (p.deltaL - r1),
        "E2+": 0.5 * (p.deltaR + r2),
        "E2-": 0.5 * (p.deltaR - r2),
    }


def _require_epsilon(p: QdotParams) -> None:
    if p.epsilon == 0:
        raise DomainError("effective model is singular at epsilon = 0",
                          quantity="epsilon", value=0.0)


def _irrep(p: QdotParams) -> GeneratorTriple:
    return build_deformed_generators(RepSpec.irrep(2, p.epsilon))


def effective_blocks(p: QdotParams) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``H1`` and ``H2`` on the two-dimensional irrep at ``z = epsilon``::

        H1 = (eps + dL)/2 J0 + t3^2 eps/dL J+ + dL/eps J-
        H2 = (eps - dR)/2 J0 + t2^2 eps/dR J+ + dR/eps J-

    Raises:
        DomainError: If ``epsilon == 0``.
    """
    _require_epsilon(p)
    j: GeneratorTriple = _irrep(p)
    eps: float = p.epsilon
    h1: ComplexMatrix = (0.5 * (eps + p.deltaL) * j.j0
                         + p.t3**2 * eps / p.deltaL * j.jplus
                         + p.deltaL / eps * j.jminus)
    h2: ComplexMatrix = (0.5 * (eps - p.deltaR) * j.j0
                         + p.t2**2 * eps / p.deltaR * j.jplus
                         + p.deltaR / eps * j.jminus)
    return h1, h2


def _block_diag(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    out: ComplexMatrix = np.zeros((4, 4), dtype=np.complex128)
    out[:2, :2] = a
    out[2:, 2:] = b
    return out


def build_Heff(p: QdotParams) -> ComplexMatrix:
    """``diag(1, 0) (x) H1 + diag(0, 1) (x) H2``."""
    h1, h2 = effective_blocks(p)
    return (np.kron(np.diag([1.0, 0.0]), h1)
            + np.kron(np.diag([0.0, 1.0]), h2))


def radicands(p: QdotParams) -> Tuple[float, float]:
    """``R1 = -3dL^2 - 2 eps dL + 4t3^2`` and ``R2 = dR^2 - 2 eps dR +
    4t2^2``; the real similarity transforms need both positive."""
    r1: float = (-3.0 * p.deltaL**2 - 2.0 * p.epsilon * p.deltaL
                 + 4.0 * p.t3**2)
    r2: float = p.deltaR**2 - 2.0 * p.epsilon * p.deltaR + 4.0 * p.t2**2
    return r1, r2


def _checked_radicands(p: QdotParams) -> Tuple[float, float]:
    _require_epsilon(p)
    r1, r2 = radicands(p)
    if r1 <= 0:
        raise DomainError(
            f"R1 = -3dL^2 - 2 eps dL + 4t3^2 = {r1!r} <= 0 at "
            f"epsilon={p.epsilon!r}", quantity="R1", value=r1)
    if r2 <= 0:
        raise DomainError(
            f"R2 = dR^2 - 2 eps dR + 4t2^2 = {r2!r} <= 0 at "
            f"epsilon={p.epsilon!r}", quantity="R2", value=r2)
    return r1, r2


def metric_roots(p: QdotParams) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``s1 = diag(eps sqrt(R1)/(2dL), 1)``, ``s2 = diag(eps sqrt(R2)/(2dR),
    1)``: the blocks of ``S^{1/2}``."""
    r1, r2 = _checked_radicands(p)
    eps: float = p.epsilon
    s1: ComplexMatrix = np.diag([eps * sqrt(r1) / (2 * p.deltaL), 1.0])
    s2: ComplexMatrix = np.diag([eps * sqrt(r2) / (2 * p.deltaR), 1.0])
    return s1.astype(np.complex128), s2.astype(np.complex128)


def hermitize_blocks(p: QdotParams) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``h1 = s1 H1 s1^-1`` and ``h2 = s2 H2 s2^-1``.

    Raises:
        DomainError: If ``epsilon == 0`` or a radicand is not positive.
    """
    s1, s2 = metric_roots(p)
    h1, h2 = effective_blocks(p)
    return (s1 @ h1 @ np.linalg.inv(s1), s2 @ h2 @ np.linalg.inv(s2))


def hermitian_blocks_closed_form(
        p: QdotParams) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``h1`` and ``h2`` written out entrywise."""
    r1, r2 = _checked_radicands(p)
    eps: float = p.epsilon
    h1: ComplexMatrix = np.array(
        [[-(p.deltaL + eps) / 2, 0.5j * sqrt(r1)],
         [-0.5j * sqrt(r1), (3 * p.deltaL + eps) / 2]], dtype=np.complex128)
    h2: ComplexMatrix = np.array(
        [[(p.deltaR - eps) / 2, 0.5j * sqrt(r2)],
         [-0.5j * sqrt(r2), (p.deltaR + eps) / 2]], dtype=np.complex128)
    return h1, h2


def decoupling_transforms(
        p: QdotParams) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``p1``, ``p2`` mapping ``h1``, ``h2`` onto the decoupled blocks::

        p1 = [[i sqrt(R1)/(2t3), -(3dL + 2eps)/(2t3)], [0, 1]]
        p2 = [[i sqrt(R2)/(2t2),  (dR - 2eps)/(2t2)], [0, 1]]

    Raises:
        DomainError: On radicand violations or ``t2 == 0``/``t3 == 0``.
    """
    r1, r2 = _checked_radicands(p)
    for name, value in (("t2", p.t2), ("t3", p.t3)):
        if value == 0:
            raise DomainError(f"{name} must be non-zero", quantity=name,
                              value=0.0)
    eps: float = p.epsilon
    p1: ComplexMatrix = np.array(
        [[1j * sqrt(r1) / (2 * p.t3), -(3 * p.deltaL + 2 * eps) / (2 * p.t3)],
         [0.0, 1.0]], dtype=np.complex128)
    p2: ComplexMatrix = np.array(
        [[1j * sqrt(r2) / (2 * p.t2), (p.deltaR - 2 * eps) / (2 * p.t2)],
         [0.0, 1.0]], dtype=np.complex128)
    return p1, p2


def decoupled_target(p: QdotParams) -> ComplexMatrix:
    """``H_e`` with the inter-dot couplings ``t1`` and ``t4`` removed."""
    e: float = p.epsilon / 2.0
    return _block_diag(
        np.array([[p.deltaL + e, -p.t3], [-p.t3, -e]], dtype=np.complex128),
        np.array([[e, -p.t2], [-p.t2, p.deltaR - e]], dtype=np.complex128))


def block_diagonalize(p: QdotParams) -> ComplexMatrix:
    """``P h_eff P^-1`` with ``h_eff = diag(h1, h2)`` and
    ``P = diag(p1, p2)``; equals :func:`decoupled_target`."""
    h1, h2 = hermitize_blocks(p)
    p1, p2 = decoupling_transforms(p)
    big_p: ComplexMatrix = _block_diag(p1, p2)
    return big_p @ _block_diag(h1, h2) @ np.linalg.inv(big_p)


@dataclass(frozen=True)
class QdotSpectrum:
    """Exact and approximate levels at one detuning.

    Attributes:
        epsilon: Detuning.
        exact: Ascending eigenvalues of ``H_e``.
        approx: Ascending ``{E1+-, E2+-}``.
        deviations: ``|exact - approx|`` per level in units of the
            level's normaliser.
        effective: Ascending spectrum of ``H_eff`` (None at ``eps = 0``).
    """

    epsilon: float
    exact: NDArray[np.float64]
    approx: NDArray[np.float64]
    deviations: NDArray[np.float64]
    effective: Optional[NDArray[np.float64]] = None


@dataclass(frozen=True)
class QdotRow:
    eps: float
    level: int
    exact: float
    approx: float
    deviation: float


@dataclass(frozen=True)
class AvoidedCrossing:
    """Closest approach of two adjacent exact levels over a grid."""

    levels: Tuple[int, int]
    index: int
    epsilon: float
    gap: float


def partner(level: int) -> int:
    """Band partner of a sorted level: 0 <-> 1 and 2 <-> 3."""
    return level ^ 1


def _crossings(levels: NDArray[np.float64], eps_grid: Sequence[float]
               ) -> Dict[Tuple[int, int], AvoidedCrossing]:
    found: Dict[Tuple[int, int], AvoidedCrossing] = {}
    for pair in ((0, 1), (2, 3)):
        gaps: NDArray[np.float64] = np.abs(levels[:, pair[1]]
                                           - levels[:, pair[0]])
        k: int = int(np.argmin(gaps))
        found[pair] = AvoidedCrossing(levels=pair,
                                      index=k,
                                      epsilon=float(eps_grid[k]),
                                      gap=float(gaps[k]))
    return found


def avoided_crossings(p: QdotParams, eps_grid: Sequence[float],
                      tol: Tolerances = DEFAULT_TOLERANCES
                      ) -> Dict[Tuple[int, int], AvoidedCrossing]:
    """Grid point of minimal gap for each band pair ``(0, 1)``, ``(2, 3)``.

    Raises:
        DomainError: If ``eps_grid`` is empty.
    """
    if not eps_grid:
        raise DomainError("empty detuning grid", quantity="eps_grid",
                          value=0.0)
    levels: NDArray[np.float64] = np.array(
        [exact_eigenvalues(p.at(float(e)), tol) for e in eps_grid])
    return _crossings(levels, eps_grid)


def normalisers(exact: Sequence[NDArray[np.float64]],
                eps_grid: Sequence[float]) -> NDArray[np.float64]:
    """``|exact_k|`` at the avoided crossing of level ``k``'s band pair.

    Falls back to 1 where that value is zero.
    """
    levels: NDArray[np.float64] = np.asarray(exact)
    crossings: Dict[Tuple[int, int], AvoidedCrossing] = _crossings(
        levels, eps_grid)
    out: NDArray[np.float64] = np.ones(LEVELS)
    for k in range(LEVELS):
        pair: Tuple[int, int] = (min(k, partner(k)), max(k, partner(k)))
        value: float = abs(float(levels[crossings[pair].index, k]))
        out[k] = value if value > 0 else 1.0
    return out


def sweep_compare(p: QdotParams, eps_grid: Sequence[float],
                  with_effective: bool = False,
                  tol: Tolerances = DEFAULT_TOLERANCES
                  ) -> Tuple[QdotSpectrum, ...]:
    """Exact against approximate levels over a detuning grid.

    Levels are matched in ascending order. Deviations are normalised per
    level by :func:`normalisers`. With ``with_effective`` the spectrum of
    ``H_eff`` is attached; ``epsilon = 0`` is skipped for it and the
    exclusion logged.
    """
    grid: List[float] = [float(e) for e in eps_grid]
    exact: List[NDArray[np.float64]] = [
        exact_eigenvalues(p.at(e), tol) for e in grid
    ]
    approx: List[NDArray[np.float64]] = [
        np.sort(np.fromiter(approx_eigenvalues(p.at(e)).values(), float))
        for e in grid
    ]
    norm: NDArray[np.float64] = normalisers(exact, grid)
    out: List[QdotSpectrum] = []
    for e, ex, ap in zip(grid, exact, approx):
        effective: Optional[NDArray[np.float64]] = None
        if with_effective:
            if e == 0:
                logger.warning("epsilon = 0 excluded from H_eff spectrum")
            else:
                effective = np.sort(
                    eigen_decompose(build_Heff(p.at(e)),
                                    tol=tol).values.real)
        out.append(QdotSpectrum(epsilon=e,
                                exact=ex,
                                approx=ap,
                                deviations=np.abs(ex - ap) / norm,
                                effective=effective))
    return tuple(out)


def comparison_rows(spectra: Sequence[QdotSpectrum]) -> List[QdotRow]:
    """Flatten a sweep into ``(eps, level, exact, approx, deviation)``."""
    return [
        QdotRow(eps=s.epsilon,
                level=k,
                exact=float(s.exact[k]),
                approx=float(s.approx[k]),
                deviation=float(s.deviations[k])) for s in spectra
        for k in range(LEVELS)
    ]
