"""Similarity transforms, conjugation identities and metric operators.

Covers the sl(2,R) hermitisation ``eta = e^{a L+} e^{b L-} e^{g L0}``,
the ``Upsilon = e^{eta J0} e^{kappa J+}`` maps that carry the
three-parameter family towards its triangular limit, the closed-form
adjoint actions of the generators, and the biorthogonal construction of
a metric ``S`` with ``S H = H^dagger S``.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from math import exp, sinh
from typing import List, Optional, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    DomainError,
    NotDiagonalizableError,
    NotHermitianError,
)
from .linalg import (
    ComplexMatrix,
    as_matrix,
    dagger,
    eigen_decompose,
    frobenius,
    hermitian_sqrt,
    identity,
    is_positive_definite,
    matrix_exponential,
)
from .reps import (
    GeneratorTriple,
    build_sl2_generators,
    exp_jplus,
    half_commutator,
)
from .report import Check, Report, check
from .spectra import PLUS, FamilyParams, build_linear_H, root_discriminant

logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimilarityPlan:
    """Parameters of a similarity transform.

    Attributes:
        alpha0: ``L+`` exponent of the sl(2,R) hermitiser.
        b0: ``L-`` exponent of the sl(2,R) hermitiser.
        gamma0: ``L0`` exponent of the sl(2,R) hermitiser (free).
        eta: ``J0`` exponent of ``Upsilon``.
        kappa_plus: ``J+`` exponent of ``Upsilon_+``.
        kappa_minus: ``J+`` exponent of ``Upsilon_-``.
    """

    alpha0: Optional[complex] = None
    b0: Optional[complex] = None
    gamma0: Optional[float] = None
    eta: Optional[float] = None
    kappa_plus: Optional[complex] = None
    kappa_minus: Optional[complex] = None


def _check_mu(mu: float) -> complex:
    if mu == 0:
        raise DomainError("mu must be non-zero", quantity="mu", value=mu)
    return cmath.sqrt(mu)


def sl2_exponents(mu: float, gamma0: float) -> Tuple[complex, complex]:
    """``alpha0 = e^{2 gamma0}/(2 sqrt mu)``, ``b0 = -e^{-2 gamma0} sqrt mu``.

    This branch sends ``mu L- + L+`` to ``+sqrt(mu) L0``; ``sqrt`` is
    complex for ``mu < 0``.
    """
    root: complex = _check_mu(mu)
    return exp(2 * gamma0) / (2 * root), -exp(-2 * gamma0) * root


def sl2_plan(mu: float, gamma0: float) -> SimilarityPlan:
    alpha0, b0 = sl2_exponents(mu, gamma0)
    return SimilarityPlan(alpha0=alpha0, b0=b0, gamma0=gamma0)


def sl2_similarity(alpha: complex, b: complex, gamma: float,
                   triple: GeneratorTriple
                   ) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``eta = e^{alpha L+} e^{b L-} e^{gamma L0}`` and its inverse.

    Every factor is exact: ``L+`` and ``L-`` are nilpotent and ``L0`` is
    diagonal.
    """
    ep: ComplexMatrix = matrix_exponential(alpha * triple.jplus)
    em: ComplexMatrix = matrix_exponential(b * triple.jminus)
    e0: ComplexMatrix = matrix_exponential(gamma * triple.j0)
    ep_inv: ComplexMatrix = matrix_exponential(-alpha * triple.jplus)
    em_inv: ComplexMatrix = matrix_exponential(-b * triple.jminus)
    e0_inv: ComplexMatrix = matrix_exponential(-gamma * triple.j0)
    return ep @ em @ e0, e0_inv @ em_inv @ ep_inv


def sl2_conjugation_coefficients(
        mu: complex, alpha: complex, b: complex,
        gamma: float) -> Tuple[complex, complex, complex]:
    """Coefficients of ``eta (mu L- + L+) eta^-1 = c- L- + c+ L+ + c0 L0``.

    Returns:
        ``(c-, c+, c0)`` with
        ``c- = e^{-2g} (mu - b^2 e^{4g})``,
        ``c+ = e^{2g} (a b + 1)^2 - a^2 e^{-2g} mu``,
        ``c0 = a e^{-2g} mu - b e^{2g} (a b + 1)``.
    """
    up: float = exp(2 * gamma)
    down: float = exp(-2 * gamma)
    c_minus: complex = down * (mu - b * b * up * up)
    c_plus: complex = up * (alpha * b + 1)**2 - alpha * alpha * down * mu
    c_zero: complex = alpha * down * mu - b * up * (alpha * b + 1)
    return c_minus, c_plus, c_zero


def sl2_hermitize(mu: float, gamma0: float, triple: GeneratorTriple
                  ) -> Tuple[complex, complex, ComplexMatrix]:
    """Conjugate ``H_mu = mu L- + L+`` into ``sqrt(mu) L0``.

    Args:
        mu: Non-zero coupling; ``mu < 0`` gives ``i sqrt|mu| L0`` with
            conjugate-pair eigenvalues.
        gamma0: Free ``L0`` exponent; the result does not depend on it.
        triple: Undeformed generators.

    Returns:
        ``(alpha0, b0, eta H_mu eta^-1)`` by explicit matrix conjugation.

    Raises:
        DomainError: If ``mu == 0`` or ``triple`` is deformed.
    """
    if triple.deformed:
        raise DomainError("sl(2,R) hermitisation needs z = 0",
                          quantity="z", value=triple.z)
    alpha0, b0 = sl2_exponents(mu, gamma0)
    eta, eta_inv = sl2_similarity(alpha0, b0, gamma0, triple)
    h: ComplexMatrix = eta @ build_linear_H(mu, triple) @ eta_inv
    return alpha0, b0, h


def _require_mu_minus(params: FamilyParams) -> None:
    if params.mu_minus == 0:
        raise DomainError("mu_minus must be non-zero", quantity="mu_minus",
                          value=0.0)


def kappa(params: FamilyParams, branch: int = PLUS,
          tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Root ``(-mu0 +- sqrt(delta))/mu-`` of ``mu- k^2 + 2 mu0 k - 2 mu+``.

    Raises:
        DomainError: If ``mu- == 0``.
    """
    _require_mu_minus(params)
    return ((-params.mu_0 + branch * root_discriminant(params, tol))
            / params.mu_minus)


def family_plan(params: FamilyParams, eta: float,
                tol: Tolerances = DEFAULT_TOLERANCES) -> SimilarityPlan:
    return SimilarityPlan(eta=eta,
                          kappa_plus=kappa(params, 1, tol),
                          kappa_minus=kappa(params, -1, tol))


def upsilon(params: FamilyParams, triple: GeneratorTriple, eta: float,
            branch: int = PLUS, tol: Tolerances = DEFAULT_TOLERANCES
            ) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """``Upsilon = e^{eta J0} e^{kappa J+}`` and its inverse."""
    k: complex = kappa(params, branch, tol)
    up: ComplexMatrix = matrix_exponential(eta * triple.j0)
    down: ComplexMatrix = matrix_exponential(-eta * triple.j0)
    return (up @ matrix_exponential(k * triple.jplus),
            matrix_exponential(-k * triple.jplus) @ down)


def transformed_family_H(params: FamilyParams, triple: GeneratorTriple,
                         eta: float, branch: int = PLUS,
                         tol: Tolerances = DEFAULT_TOLERANCES
                         ) -> ComplexMatrix:
    """Closed form of ``Upsilon H Upsilon^-1`` at finite ``eta``::

        mu- e^{-2 eta} J- + z mu- e^{-eta} sinh(eta) J0^2 +- sqrt(delta) J0

    Tends to the triangular limit as ``e^{-2 eta}``.
    """
    _require_mu_minus(params)
    j0: ComplexMatrix = triple.j0
    return (params.mu_minus * exp(-2 * eta) * triple.jminus
            + triple.z * params.mu_minus * exp(-eta) * sinh(eta) * j0 @ j0
            + branch * root_discriminant(params, tol) * j0)


def conjugate(x: ComplexMatrix, y: ComplexMatrix,
              alpha: complex) -> Tuple[ComplexMatrix, float]:
    """``e^{alpha x} y e^{-alpha x}`` with its amplification factor.

    Returns:
        The conjugated matrix and ``||e^{alpha x}|| ||e^{-alpha x}||``,
        the factor by which rounding in either exponential can grow.
    """
    forward: ComplexMatrix = matrix_exponential(alpha * x)
    backward: ComplexMatrix = matrix_exponential(-alpha * x)
    return (forward @ y @ backward,
            frobenius(forward) * frobenius(backward))


def _conjugation_check(name: str, x: ComplexMatrix, y: ComplexMatrix,
                       alpha: float, expected: ComplexMatrix, bound: float,
                       unit: float) -> Check:
    """``bound`` widened to ``unit`` times the conditioning when larger."""
    value, condition = conjugate(x, y, alpha)
    return check(name, value - expected, max(bound, unit * condition))


def _sl2_identities(l: GeneratorTriple, alpha: float, tol: Tolerances,
                    label: str) -> List[Check]:
    l0, lp, lm = l.j0, l.jplus, l.jminus
    bound: float = tol.algebra * l.scale()
    e2: float = exp(2 * alpha)
    return [
        _conjugation_check(f"{label} e^aL0 L+ e^-aL0 = e^2a L+",
                           l0, lp, alpha, e2 * lp, bound * e2, bound),
        _conjugation_check(f"{label} e^aL0 L- e^-aL0 = e^-2a L-",
                           l0, lm, alpha, lm / e2, bound * e2, bound),
        _conjugation_check(f"{label} e^aL+ L- e^-aL+ = L- + aL0 - a^2L+",
                           lp, lm, alpha,
                           lm + alpha * l0 - alpha**2 * lp, bound, bound),
        _conjugation_check(f"{label} e^aL+ L0 e^-aL+ = L0 - 2aL+",
                           lp, l0, alpha, l0 - 2 * alpha * lp, bound,
                           bound),
        _conjugation_check(f"{label} e^aL- L+ e^-aL- = L+ - aL0 - a^2L-",
                           lm, lp, alpha,
                           lp - alpha * l0 - alpha**2 * lm, bound, bound),
        _conjugation_check(f"{label} e^aL- L0 e^-aL- = L0 + 2aL-",
                           lm, l0, alpha, l0 + 2 * alpha * lm, bound,
                           bound),
    ]


def _log_series(m: ComplexMatrix, power: bool) -> ComplexMatrix:
    """``sum_{n>=1} m^n / n`` or ``sum_{n>=1} m^n`` for nilpotent ``m``."""
    total: ComplexMatrix = np.zeros_like(m)
    term: ComplexMatrix = identity(m.shape[0])
    for n in range(1, m.shape[0] + 1):
        term = term @ m
        total = total + (term if power else term / n)
    return total


def _deformed_identities(t: GeneratorTriple, alpha: float, tol: Tolerances,
                         label: str) -> List[Check]:
    j0, jp, jm = t.j0, t.jplus, t.jminus
    z: float = t.z
    f: ComplexMatrix = half_commutator(t)
    scale: float = t.scale() * max(1.0, frobenius(j0))
    unit: float = tol.algebra * scale
    bound: float = unit * exp(2 * abs(alpha))
    # M = 1 - e^{-2zJ+}, scaled by e^{2 alpha} under conjugation by J0
    m: ComplexMatrix = identity(t.dim) - exp_jplus(t, -2.0)
    me: ComplexMatrix = exp(2 * alpha) * m
    # both sides of the last identity carry the rounding of e^{aJ-}
    x, x_condition = conjugate(jm, jp, alpha)
    bracket_bound: float = 2 * unit * t.scale() * x_condition
    return [
        check(f"{label} f = [J0,J+]/2",
              (j0 @ jp - jp @ j0) / 2 - f, bound),
        _conjugation_check(f"{label} e^aJ+ J- e^-aJ+ = J- + a(J0 - af)",
                           jp, jm, alpha,
                           jm + alpha * (j0 - alpha * f), bound, unit),
        _conjugation_check(f"{label} e^aJ+ J0 e^-aJ+ = J0 - 2af",
                           jp, j0, alpha, j0 - 2 * alpha * f, bound, unit),
        _conjugation_check(
            f"{label} e^aJ0 J- e^-aJ0 = e^-2aJ- + z e^-a sinh(a) J0^2",
            j0, jm, alpha,
            exp(-2 * alpha) * jm + z * exp(-alpha) * sinh(alpha) * j0 @ j0,
            bound, unit),
        _conjugation_check(f"{label} e^aJ0 J+ e^-aJ0 = sum (e^2a M)^n/(2zn)",
                           j0, jp, alpha, _log_series(me, False) / (2 * z),
                           bound, unit),
        _conjugation_check(f"{label} e^aJ0 f e^-aJ0 = sum (e^2a M)^n/(2z)",
                           j0, f, alpha, _log_series(me, True) / (2 * z),
                           bound, unit),
        _conjugation_check(
            f"{label} e^aJ- J0 e^-aJ- = [X, J-], X = e^aJ- J+ e^-aJ-",
            jm, j0, alpha, x @ jm - jm @ x, max(bound, bracket_bound),
            unit),
    ]


def verify_adjoint_identities(triple: GeneratorTriple, alpha: float,
                              tol: Tolerances = DEFAULT_TOLERANCES
                              ) -> Report:
    """Closed-form adjoint actions against explicit exponentials.

    The undeformed set is always checked on the ``z = 0`` triple of the
    same weight and dimension; the deformed set is added for ``z != 0``.
    """
    undeformed: GeneratorTriple = (triple if not triple.deformed else
                                   build_sl2_generators(triple.spec))
    checks: List[Check] = _sl2_identities(undeformed, alpha, tol, "sl2:")
    if triple.deformed:
        checks.extend(_deformed_identities(triple, alpha, tol, "Uz:"))
    return Report.of(
        f"adjoint d={triple.dim} z={triple.z} alpha={alpha}", checks)


@dataclass(frozen=True)
class BiorthogonalSystem:
    """Biorthonormal eigenbases and the metric they define.

    Attributes:
        values: Eigenvalues, sorted.
        right_vectors: ``phi_j`` as columns.
        left_vectors: ``psi_j`` as columns, ``psi_i^dagger phi_j = delta``.
        s_matrix: ``sum_j |psi_j><psi_j|``.
        positive_definite: ``s_matrix`` is positive definite.
        pseudo_hermitian: ``S H = H^dagger S`` holds (real spectrum).
        condition: Condition number of the right eigenvector basis.
    """

    values: NDArray[np.complex128]
    right_vectors: ComplexMatrix
    left_vectors: ComplexMatrix
    s_matrix: ComplexMatrix
    positive_definite: bool
    pseudo_hermitian: bool
    condition: float


def intertwining_residual(h: ComplexMatrix, s: ComplexMatrix) -> float:
    """``||S H - H^dagger S||`` relative to ``||S|| ||H||``."""
    denom: float = max(frobenius(s) * frobenius(h), 1e-300)
    return frobenius(s @ h - dagger(h) @ s) / denom


def biorthogonal_system(h: ComplexMatrix,
                        tol: Tolerances = DEFAULT_TOLERANCES
                        ) -> BiorthogonalSystem:
    """Left and right eigenbases of ``h`` and ``S = sum |psi><psi|``.

    Left vectors are the columns of ``(Phi^-1)^dagger``, which makes the
    pairing exact; each is an eigenvector of ``h^dagger``.

    Raises:
        NotDiagonalizableError: If the eigenvector basis has condition
            number above ``tol.binormal_cond`` (exceptional point).
    """
    m: ComplexMatrix = as_matrix(h, name="H")
    eig = eigen_decompose(m, tol=tol)
    phi: ComplexMatrix = eig.right_vectors
    condition: float = float(np.linalg.cond(phi))
    if not np.isfinite(condition) or condition > tol.binormal_cond:
        raise NotDiagonalizableError(
            f"eigenvector basis condition {condition:.3g} exceeds "
            f"{tol.binormal_cond:.1g}; H is (nearly) defective",
            condition=condition)
    psi: ComplexMatrix = dagger(np.linalg.inv(phi))
    s: ComplexMatrix = psi @ dagger(psi)
    residual: float = intertwining_residual(m, s)
    logger.debug("biorthogonal: cond=%.3g intertwining=%.3g", condition,
                 residual)
    return BiorthogonalSystem(values=eig.values,
                              right_vectors=phi,
                              left_vectors=psi,
                              s_matrix=s,
                              positive_definite=is_positive_definite(s),
                              pseudo_hermitian=residual <= tol.pairing,
                              condition=condition)


Metric = Union[ComplexMatrix, BiorthogonalSystem]


def hermitize(h: ComplexMatrix, metric: Metric,
              tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexMatrix:
    """``S^{1/2} H S^{-1/2}`` for a positive-definite metric ``S``.

    Raises:
        NotPositiveDefiniteError: If ``S`` is not positive definite.
        NotHermitianError: If ``S H != H^dagger S`` or the result is not
            Hermitian within ``tol.sqrt`` relative to its norm.
    """
    s: ComplexMatrix = (metric.s_matrix
                        if isinstance(metric, BiorthogonalSystem) else
                        as_matrix(metric, name="S"))
    if intertwining_residual(h, s) > tol.pairing:
        raise NotHermitianError("S H != H^dagger S; no real spectrum to "
                                "hermitise")
    root: ComplexMatrix = hermitian_sqrt(s, tol)
    out: ComplexMatrix = root @ h @ np.linalg.inv(root)
    scale: float = max(1.0, frobenius(out))
    if frobenius(out - dagger(out)) > tol.sqrt * scale:
        raise NotHermitianError("hermitised matrix is not Hermitian")
    return out


def metric_flags(h: ComplexMatrix, s: ComplexMatrix,
                 tol: Tolerances = DEFAULT_TOLERANCES) -> Tuple[bool, bool]:
    """``(positive_definite, pseudo_hermitian)`` of an explicit metric."""
    hermitian: bool = (frobenius(s - dagger(s))
                       <= tol.herm * max(1.0, frobenius(s)))
    return (hermitian and is_positive_definite(s),
            intertwining_residual(h, s) <= tol.pairing)


def linear_metric_d2(mu: float, z: float) -> ComplexMatrix:
    """Metric ``[[z^2/2 + 2/mu, -iz], [iz, 2]]`` of the 2-dim ``H_mu``.

    Positive definite exactly when ``mu > 0`` (``det = 4/mu``).
    """
    if mu == 0:
        raise DomainError("mu must be non-zero", quantity="mu", value=mu)
    return np.array([[z * z / 2 + 2 / mu, -1j * z], [1j * z, 2.0]],
                    dtype=np.complex128)


def linear_hermitian_d2(mu: float, z: float) -> ComplexMatrix:
    """Closed-form Hermitian partner of the 2-dim ``H_mu`` for ``mu > 0``.

    Raises:
        DomainError: If ``mu <= 0``.
    """
    if mu <= 0:
        raise DomainError("closed form needs mu > 0", quantity="mu",
                          value=mu)
    r: float = mu**0.5
    d: float = (z * z + 4) * mu + 8 * r + 4
    h00: float = z * mu * ((z * z + 4) * mu - 4) / (2 * d)
    h11: float = z * mu * ((z * z + 4) * mu + 16 * r + 12) / (2 * d)
    h01: complex = -1j * r * ((z * z - 4) * mu - 8 * r - 4) / d
    return np.array([[h00, h01], [np.conj(h01), h11]], dtype=np.complex128)
