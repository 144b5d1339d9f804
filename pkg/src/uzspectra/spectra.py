"""PT-symmetric Hamiltonian families and their spectra.

Builds the linear Hamiltonian ``H_mu = mu J- + J+``, the three-parameter
family ``H = mu- J- + mu+ [J0, J+] + mu0 J0``, its triangular limit and
the polynomial family ``mu- J- + sum_n a_n J0^n``; computes their spectra
analytically and numerically and classifies the PT phase.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import factorial, isfinite, sqrt
from typing import Dict, Final, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DomainError
from .linalg import (
    ComplexMatrix,
    eigen_decompose,
    frobenius,
    identity,
    matrix_rank,
    sort_spectrum,
    triangular_function,
)
from .reps import (
    GeneratorTriple,
    RepSpec,
    build_deformed_generators,
    half_commutator,
)

logger: logging.Logger = logging.getLogger(__name__)

PLUS: Final[int] = 1
MINUS: Final[int] = -1


class Phase(str, Enum):
    """PT phase of a spectrum."""

    EXACT = "ExactPT"
    BROKEN = "BrokenPT"
    EXCEPTIONAL = "ExceptionalPoint"


@dataclass(frozen=True)
class FamilyParams:
    """Couplings ``(mu+, mu-, mu0)`` of the three-parameter family.

    Attributes:
        mu_plus: Coefficient of ``[J0, J+]``.
        mu_minus: Coefficient of ``J-``.
        mu_0: Coefficient of ``J0`` (or of ``g(J0)``).
        g: Optional ascending power-series coefficients replacing ``J0``
            by ``g(J0)``.
    """

    mu_plus: float
    mu_minus: float
    mu_0: float
    g: Optional[Tuple[float, ...]] = None

    def __post_init__(self) -> None:
        for name in ("mu_plus", "mu_minus", "mu_0"):
            value: float = getattr(self, name)
            if not isfinite(value):
                raise DomainError(f"{name} must be finite", quantity=name,
                                  value=value)

    @property
    def discriminant(self) -> float:
        """``mu0^2 + 2 mu+ mu-``; its sign decides the PT phase."""
        return self.mu_0 * self.mu_0 + 2.0 * self.mu_plus * self.mu_minus

    def discriminant_scale(self) -> float:
        return max(1.0, self.mu_0 * self.mu_0,
                   abs(2.0 * self.mu_plus * self.mu_minus))

    @classmethod
    def h_minus(cls, mu: float, nu: float) -> FamilyParams:
        """``(mu+, mu-, mu0) = (-mu, mu, mu nu)``; EPs at ``nu = +-sqrt 2``."""
        return cls(mu_plus=-mu, mu_minus=mu, mu_0=mu * nu)

    @classmethod
    def h_plus(cls, mu: float, nu: float) -> FamilyParams:
        """``(mu+, mu-, mu0) = (mu, mu, mu nu)``; always PT-exact."""
        return cls(mu_plus=mu, mu_minus=mu, mu_0=mu * nu)

    def interpolate(self, other: FamilyParams, t: float) -> FamilyParams:
        """Point ``(1 - t) self + t other`` on the segment to ``other``."""
        return FamilyParams(
            mu_plus=(1 - t) * self.mu_plus + t * other.mu_plus,
            mu_minus=(1 - t) * self.mu_minus + t * other.mu_minus,
            mu_0=(1 - t) * self.mu_0 + t * other.mu_0,
            g=self.g)


@dataclass(frozen=True)
class EPCluster:
    """Group of coalescing eigenvalues.

    Attributes:
        indices: Positions in the sorted spectrum.
        value: Cluster centre.
        algebraic: Number of eigenvalues in the cluster.
        geometric: ``d - rank(H - value)``, or None without a matrix.
    """

    indices: Tuple[int, ...]
    value: complex
    algebraic: int
    geometric: Optional[int] = None

    @property
    def defective(self) -> bool:
        return self.geometric is not None and self.geometric < self.algebraic


@dataclass(frozen=True)
class SpectrumResult:
    """Sorted eigenvalues with their PT phase.

    Attributes:
        eigenvalues: Sorted by (real, imaginary) part.
        discriminant: ``mu0^2 + 2 mu+ mu-`` when the family defines one.
        phase: PT phase.
        ep_clusters: Coalescing groups (only at exceptional points).
    """

    eigenvalues: NDArray[np.complex128]
    discriminant: Optional[float]
    phase: Phase
    ep_clusters: Tuple[EPCluster, ...] = field(default=())

    def scale(self) -> float:
        return max(1.0, float(np.abs(self.eigenvalues).max()))

    def respects_pt_dichotomy(self,
                              tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        """Spectrum entirely real or closed under conjugation."""
        return (is_real_spectrum(self.eigenvalues, tol)
                or is_conjugate_closed(self.eigenvalues, tol))


def is_real_spectrum(values: NDArray[np.complex128],
                     tol: Tolerances = DEFAULT_TOLERANCES,
                     scale: Optional[float] = None) -> bool:
    ref: float = scale if scale is not None else max(
        1.0, float(np.abs(values).max()))
    return bool(np.all(np.abs(values.imag) <= tol.real * ref))


def is_conjugate_closed(values: NDArray[np.complex128],
                        tol: Tolerances = DEFAULT_TOLERANCES,
                        scale: Optional[float] = None) -> bool:
    """Every value has a conjugate partner (greedy one-to-one matching)."""
    ref: float = scale if scale is not None else max(
        1.0, float(np.abs(values).max()))
    remaining: List[complex] = list(np.conj(values))
    for v in values:
        dist: NDArray[np.float64] = np.abs(np.asarray(remaining) - v)
        k: int = int(np.argmin(dist))
        if dist[k] > tol.pairing * ref:
            return False
        remaining.pop(k)
    return True


def classify_spectrum(values: NDArray[np.complex128],
                      tol: Tolerances = DEFAULT_TOLERANCES,
                      scale: Optional[float] = None) -> Phase:
    """Phase of a computed spectrum without a discriminant.

    Real within ``tol.real * scale`` is PT-exact; anything else is
    reported broken, with a warning when conjugate pairing fails.
    """
    if is_real_spectrum(values, tol, scale):
        return Phase.EXACT
    if not is_conjugate_closed(values, tol, scale):
        logger.warning("spectrum is neither real nor conjugate-closed")
    return Phase.BROKEN


def phase_from_discriminant(params: FamilyParams,
                            tol: Tolerances = DEFAULT_TOLERANCES) -> Phase:
    delta: float = params.discriminant
    band: float = tol.ep * params.discriminant_scale()
    if delta > band:
        return Phase.EXACT
    if delta < -band:
        return Phase.BROKEN
    return Phase.EXCEPTIONAL


def root_discriminant(params: FamilyParams,
                      tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Principal ``sqrt(delta)``, forced to 0 inside the EP band."""
    if phase_from_discriminant(params, tol) is Phase.EXCEPTIONAL:
        return 0j
    return cmath.sqrt(params.discriminant)


def build_linear_H(mu: float, triple: GeneratorTriple) -> ComplexMatrix:
    """``H_mu = mu J- + J+``."""
    return mu * triple.jminus + triple.jplus


def linear_spectrum_d2(mu: float, z: float) -> NDArray[np.complex128]:
    """Closed-form ``{mu z/2 +- sqrt(mu)}`` of the two-dimensional ``H_mu``."""
    root: complex = cmath.sqrt(mu)
    return sort_spectrum((mu * z / 2 + root, mu * z / 2 - root))


def rescale_to_unit(mu: float, z: float) -> Tuple[float, int]:
    """Map ``H_mu`` at deformation ``z`` to ``H_{+-1}`` at ``lambda``.

    Returns ``(lambda, sign)`` with ``lambda = sqrt|mu| z`` and
    ``sign = sign(mu)``, such that
    ``sigma(H_mu(z)) = sqrt|mu| * sigma(H_sign(lambda))``.

    Raises:
        DomainError: If ``mu == 0``.
    """
    if mu == 0:
        raise DomainError("mu must be non-zero", quantity="mu", value=mu)
    return sqrt(abs(mu)) * z, 1 if mu > 0 else -1


def _function_of_j0(triple: GeneratorTriple,
                    coefficients: Sequence[float]) -> ComplexMatrix:
    """``sum_k coefficients[k] J0^k`` via the Parlett recurrence."""
    poly: np.polynomial.Polynomial = np.polynomial.Polynomial(
        np.asarray(coefficients, dtype=float))
    return triangular_function(triple.j0, poly)


def build_family_H(params: FamilyParams,
                   triple: GeneratorTriple) -> ComplexMatrix:
    """``mu- J- + mu+ [J0, J+] + mu0 J0``.

    The commutator is evaluated as ``(e^{2zJ+} - 1)/z``. With
    ``params.g`` the last term becomes ``mu0 g(J0)``.
    """
    diag_term: ComplexMatrix = (np.asarray(triple.j0) if params.g is None
                                else _function_of_j0(triple, params.g))
    return (params.mu_minus * triple.jminus
            + 2.0 * params.mu_plus * half_commutator(triple)
            + params.mu_0 * diag_term)


def limit_hamiltonian_family(params: FamilyParams, triple: GeneratorTriple,
                             branch: int = PLUS,
                             tol: Tolerances = DEFAULT_TOLERANCES
                             ) -> ComplexMatrix:
    """Lower-triangular limit ``(z/2) mu- J0^2 +- sqrt(delta) J0``.

    Raises:
        DomainError: If ``mu- == 0``.
    """
    if params.mu_minus == 0:
        raise DomainError("mu_minus must be non-zero", quantity="mu_minus",
                          value=0.0)
    j0: ComplexMatrix = triple.j0
    return (triple.z / 2.0 * params.mu_minus * j0 @ j0
            + branch * root_discriminant(params, tol) * j0)


def weights(dim: int, beta: Optional[float] = None) -> NDArray[np.float64]:
    """Diagonal ``2m + beta`` of ``J0``; ``beta`` defaults to ``1 - dim``."""
    b: float = float(1 - dim) if beta is None else beta
    return 2.0 * np.arange(dim) + b


def _group(values: NDArray[np.complex128],
           radius: float) -> List[List[int]]:
    """Connected groups of sorted values within ``radius`` of a neighbour."""
    groups: List[List[int]] = []
    for i, v in enumerate(values):
        for grp in groups:
            if any(abs(v - values[j]) <= radius for j in grp):
                grp.append(i)
                break
        else:
            groups.append([i])
    return groups


def ep_clusters(values: NDArray[np.complex128],
                h: Optional[ComplexMatrix] = None,
                tol: Tolerances = DEFAULT_TOLERANCES
                ) -> Tuple[EPCluster, ...]:
    """Clusters of coalescing eigenvalues.

    Args:
        values: Sorted eigenvalue estimates (analytic values at the EP
            resolve the coalescence; QR output does not).
        h: The matrix; when given, each cluster gets its geometric
            multiplicity ``d - rank(h - value)``.
        tol: Tolerance record (``cluster`` radius, ``rank`` cutoff).
    """
    scale: float = max(1.0, float(np.abs(values).max()))
    clusters: List[EPCluster] = []
    for grp in _group(values, tol.cluster * scale):
        if len(grp) < 2:
            continue
        centre: complex = complex(np.mean(values[grp]))
        geometric: Optional[int] = None
        if h is not None:
            d: int = h.shape[0]
            geometric = d - matrix_rank(h - centre * identity(d), tol)
        clusters.append(EPCluster(indices=tuple(grp),
                                  value=centre,
                                  algebraic=len(grp),
                                  geometric=geometric))
    return tuple(clusters)


def analytic_spectrum_family(params: FamilyParams, dim: int, z: float,
                             tol: Tolerances = DEFAULT_TOLERANCES
                             ) -> SpectrumResult:
    """Exact spectrum of the family on the ``dim``-dimensional irrep.

    The eigenvalues are ``(z/2) mu- n^2 + n sqrt(delta)`` for
    ``n = 1 - dim, 3 - dim, ..., dim - 1``: pairs ``+-(2k+1)`` for even
    ``dim``, pairs ``+-2k`` plus a single ``0`` for odd ``dim``.
    """
    n: NDArray[np.float64] = weights(dim)
    root: complex = root_discriminant(params, tol)
    values: NDArray[np.complex128] = sort_spectrum(
        z / 2.0 * params.mu_minus * n * n + n * root)
    phase: Phase = phase_from_discriminant(params, tol)
    clusters: Tuple[EPCluster, ...] = (ep_clusters(values, tol=tol)
                                       if phase is Phase.EXCEPTIONAL else ())
    return SpectrumResult(eigenvalues=values,
                          discriminant=params.discriminant,
                          phase=phase,
                          ep_clusters=clusters)


def numeric_spectrum(h: ComplexMatrix,
                     discriminant: Optional[float] = None,
                     phase: Optional[Phase] = None,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> SpectrumResult:
    """Spectrum of ``h`` from the in-repo eigensolver.

    The phase is taken from ``phase`` when given, otherwise classified
    from the computed values with ``max(1, ||h||_F)`` as scale.
    """
    values: NDArray[np.complex128] = eigen_decompose(h, tol=tol).values
    resolved: Phase = phase or classify_spectrum(
        values, tol, scale=max(1.0, frobenius(h)))
    return SpectrumResult(eigenvalues=values,
                          discriminant=discriminant,
                          phase=resolved)


@dataclass(frozen=True)
class PhasePoint:
    """Phase data at one grid point."""

    index: int
    params: FamilyParams
    discriminant: float
    phase: Phase
    spectrum: SpectrumResult


@dataclass(frozen=True)
class EPLocation:
    """Exceptional point bracketed between grid points.

    Attributes:
        after_index: Grid index preceding the EP.
        fraction: Position in ``[0, 1]`` between ``after_index`` and the
            next grid point.
        params: Interpolated couplings at the EP.
    """

    after_index: int
    fraction: float
    params: FamilyParams


@dataclass(frozen=True)
class PhaseScan:
    points: Tuple[PhasePoint, ...]
    ep_locus: Tuple[EPLocation, ...]

    def phases(self) -> Tuple[Phase, ...]:
        return tuple(p.phase for p in self.points)


def _bisect_ep(left: FamilyParams, right: FamilyParams,
               iterations: int = 80) -> Tuple[float, FamilyParams]:
    lo: float = 0.0
    hi: float = 1.0
    sign_lo: bool = left.discriminant > 0
    for _ in range(iterations):
        mid: float = (lo + hi) / 2.0
        if (left.interpolate(right, mid).discriminant > 0) == sign_lo:
            lo = mid
        else:
            hi = mid
    t: float = (lo + hi) / 2.0
    return t, left.interpolate(right, t)


def classify_phase_and_scan(params_grid: Sequence[FamilyParams], dim: int,
                            z: float, triple: Optional[GeneratorTriple] = None,
                            matrix: str = "full",
                            tol: Tolerances = DEFAULT_TOLERANCES
                            ) -> PhaseScan:
    """Phase map over a grid and the EP locus.

    Each point's phase comes from the discriminant. At EP points the
    coalescence is confirmed on the matrix (``"full"`` family or
    ``"limit"`` triangular form): clusters of the analytic spectrum get
    their geometric multiplicity from a rank test. Sign changes of the
    discriminant between neighbours are refined by bisection along the
    segment joining them.

    Args:
        params_grid: Couplings, in scan order.
        dim: Irrep dimension.
        z: Deformation.
        triple: Generators to use; built from ``(dim, z)`` if omitted.
        matrix: ``"full"`` or ``"limit"``.
        tol: Tolerance record.
    """
    gens: GeneratorTriple = triple or build_deformed_generators(
        RepSpec.irrep(dim, z))
    points: List[PhasePoint] = []
    for index, params in enumerate(params_grid):
        spectrum: SpectrumResult = analytic_spectrum_family(
            params, dim, z, tol)
        if spectrum.phase is Phase.EXCEPTIONAL:
            h: ComplexMatrix = (build_family_H(params, gens)
                                if matrix == "full" else
                                limit_hamiltonian_family(params, gens,
                                                         tol=tol))
            spectrum = SpectrumResult(
                eigenvalues=spectrum.eigenvalues,
                discriminant=spectrum.discriminant,
                phase=spectrum.phase,
                ep_clusters=ep_clusters(spectrum.eigenvalues, h, tol))
        points.append(PhasePoint(index=index,
                                 params=params,
                                 discriminant=params.discriminant,
                                 phase=spectrum.phase,
                                 spectrum=spectrum))

    locus: List[EPLocation] = []
    for left, right in zip(points, points[1:]):
        if left.phase is Phase.EXCEPTIONAL:
            locus.append(EPLocation(left.index, 0.0, left.params))
            continue
        if right.phase is Phase.EXCEPTIONAL:
            continue
        if (left.discriminant > 0) != (right.discriminant > 0):
            t, at = _bisect_ep(left.params, right.params)
            locus.append(EPLocation(left.index, t, at))
    if points and points[-1].phase is Phase.EXCEPTIONAL:
        locus.append(EPLocation(points[-1].index, 0.0, points[-1].params))
    logger.debug("phase scan: %d points, %d EPs", len(points), len(locus))
    return PhaseScan(points=tuple(points), ep_locus=tuple(locus))


@dataclass(frozen=True)
class PolyHamiltonianSpec:
    """``mu- J- + a_0 + sum_{n>=1} a_n J0^n``.

    Attributes:
        mu_minus: Coefficient of ``J-``.
        coefficients: ``(a_1, ..., a_N)``.
        constant: ``a_0``, a multiple of the identity (1 for cosine).
        label: Name of the realised function (``"sin"``, ``"cos"``...).
    """

    mu_minus: float
    coefficients: Tuple[float, ...] = ()
    constant: float = 0.0
    label: str = "coefficients"

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def ascending(self) -> Tuple[float, ...]:
        return (self.constant, ) + tuple(self.coefficients)

    def diagonal_polynomial(self, n: NDArray[np.float64]
                            ) -> NDArray[np.float64]:
        """``a_0 + sum_k a_k n^k`` evaluated elementwise."""
        return np.polynomial.polynomial.polyval(n, self.ascending())


def _taylor_order(x_max: float, parity: int, tail: float) -> int:
    """Smallest order ``N`` with matching parity whose next term is small.

    The next term ``x^(N+2)/(N+2)!`` must lie past the peak of the term
    sequence and below ``tail``.
    """
    n: int = parity
    while True:
        nxt: int = n + 2
        if nxt > x_max and x_max**nxt / factorial(nxt) <= tail:
            return n
        n = nxt


def sin_spec(mu_minus: float, lam: float, dim: int,
             tol: Tolerances = DEFAULT_TOLERANCES) -> PolyHamiltonianSpec:
    """Truncated Taylor series of ``sin(lam J0)``.

    The order is chosen so the scalar tail at ``|lam| (dim - 1)``, the
    largest ``|2m + beta|`` on the irrep, is below ``tol.series_tail``.
    """
    x_max: float = abs(lam) * max(dim - 1, 1)
    order: int = _taylor_order(x_max, 1, tol.series_tail)
    coeffs: List[float] = [0.0] * order
    for n in range(1, order + 1, 2):
        coeffs[n - 1] = (-1)**((n - 1) // 2) * lam**n / factorial(n)
    logger.debug("sin series order %d for x_max=%.3g", order, x_max)
    return PolyHamiltonianSpec(mu_minus=mu_minus,
                               coefficients=tuple(coeffs),
                               label="sin")


def cos_spec(mu_minus: float, lam: float, dim: int,
             tol: Tolerances = DEFAULT_TOLERANCES) -> PolyHamiltonianSpec:
    """Truncated Taylor series of ``cos(lam J0)``."""
    x_max: float = abs(lam) * max(dim - 1, 1)
    order: int = _taylor_order(x_max, 0, tol.series_tail)
    coeffs: List[float] = [0.0] * order
    for n in range(2, order + 1, 2):
        coeffs[n - 1] = (-1)**(n // 2) * lam**n / factorial(n)
    logger.debug("cos series order %d for x_max=%.3g", order, x_max)
    return PolyHamiltonianSpec(mu_minus=mu_minus,
                               coefficients=tuple(coeffs),
                               constant=1.0,
                               label="cos")


def baseline_spec(mu_minus: float) -> PolyHamiltonianSpec:
    """All ``a_n = 0``: degenerate pairs ``(z/2) mu- n^2``."""
    return PolyHamiltonianSpec(mu_minus=mu_minus, label="baseline")


def build_polynomial_H(spec: PolyHamiltonianSpec,
                       triple: GeneratorTriple) -> ComplexMatrix:
    """``mu- J- + p(J0)``, the polynomial evaluated by Parlett recurrence."""
    h: ComplexMatrix = spec.mu_minus * triple.jminus
    if spec.coefficients or spec.constant:
        h = h + _function_of_j0(triple, spec.ascending())
    return h


def analytic_spectrum_polynomial(spec: PolyHamiltonianSpec, dim: int,
                                 z: float,
                                 tol: Tolerances = DEFAULT_TOLERANCES
                                 ) -> SpectrumResult:
    """``{(z/2) mu- n^2 + p(n)}`` over ``n = 2m + beta``, ``beta = 1 - dim``.

    Equivalent to reading the diagonal of the triangular limit form.
    """
    n: NDArray[np.float64] = weights(dim)
    diagonal: NDArray[np.float64] = (z / 2.0 * spec.mu_minus * n * n
                                     + spec.diagonal_polynomial(n))
    values: NDArray[np.complex128] = sort_spectrum(diagonal)
    return SpectrumResult(eigenvalues=values,
                          discriminant=None,
                          phase=classify_spectrum(values, tol))


def band_gaps(spec: PolyHamiltonianSpec, dim: int) -> Dict[int, float]:
    """Splitting ``p(k) - p(-k)`` of each ``+-k`` band pair.

    The ``(z/2) mu- n^2`` term is even in ``n`` and drops out, so the gaps
    do not depend on ``z``. Keys are ``k = |2m + beta|`` (zero excluded).
    """
    ks: List[int] = sorted({int(abs(v)) for v in weights(dim) if v != 0})
    up: NDArray[np.float64] = spec.diagonal_polynomial(
        np.asarray(ks, dtype=float))
    down: NDArray[np.float64] = spec.diagonal_polynomial(
        -np.asarray(ks, dtype=float))
    return {k: float(u - d) for k, u, d in zip(ks, up, down)}
