from math import sqrt
from typing import Tuple

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from numpy.typing import NDArray

from uzspectra.errors import (
    DomainError,
    NotDiagonalizableError,
    NotHermitianError,
)
from uzspectra.linalg import dagger, eigenvalues, frobenius
from uzspectra.report import Report
from uzspectra.reps import (
    GeneratorTriple,
    RepSpec,
    build_deformed_generators,
    build_sl2_generators,
)
from uzspectra.similarity import (
    BiorthogonalSystem,
    SimilarityPlan,
    biorthogonal_system,
    conjugate,
    family_plan,
    hermitize,
    kappa,
    linear_hermitian_d2,
    linear_metric_d2,
    metric_flags,
    sl2_conjugation_coefficients,
    sl2_exponents,
    sl2_hermitize,
    sl2_plan,
    transformed_family_H,
    upsilon,
    verify_adjoint_identities,
)
from uzspectra.spectra import (
    MINUS,
    PLUS,
    FamilyParams,
    analytic_spectrum_family,
    build_family_H,
    build_linear_H,
    limit_hamiltonian_family,
    linear_spectrum_d2,
)


@pytest.mark.parametrize("dim", [2, 3, 4])
@pytest.mark.parametrize("gamma0", [0.0, 0.3])
def test_sl2_hermitisation(dim: int, gamma0: float) -> None:
    """``eta (mu L- + L+) eta^-1 = sqrt(mu) L0`` for any ``gamma0``."""
    triple: GeneratorTriple = build_sl2_generators(RepSpec.irrep(dim))
    for mu in (2.0, 0.5, -1.5):
        root: complex = complex(np.emath.sqrt(mu))
        alpha0, b0, h = sl2_hermitize(mu, gamma0, triple)
        target: NDArray[np.complex128] = root * triple.j0
        assert frobenius(h - target) <= 1e-9 * max(1.0, frobenius(target))
        c_minus, c_plus, c_zero = sl2_conjugation_coefficients(
            mu, alpha0, b0, gamma0)
        assert abs(c_minus) < 1e-12 and abs(c_plus) < 1e-12
        assert c_zero == pytest.approx(root)


def test_sl2_plan_and_errors(triple_d2: GeneratorTriple) -> None:
    """The plan records the exponents; bad input is refused."""
    plan: SimilarityPlan = sl2_plan(4.0, 0.0)
    assert plan.alpha0 == pytest.approx(0.25)
    assert plan.b0 == pytest.approx(-2.0)
    assert sl2_exponents(4.0, 0.5)[0] == pytest.approx(np.e / 4)
    with pytest.raises(DomainError):
        sl2_exponents(0.0, 0.0)
    with pytest.raises(DomainError):
        sl2_hermitize(1.0, 0.0, triple_d2)


@pytest.mark.parametrize("dim", range(2, 13))
@pytest.mark.parametrize("z", [0.0, 0.1, 1.0, 2.5])
def test_adjoint_identities(dim: int, z: float) -> None:
    """Closed-form conjugations agree with explicit exponentials."""
    triple: GeneratorTriple = build_deformed_generators(
        RepSpec.irrep(dim, z))
    report: Report = verify_adjoint_identities(triple, 0.5)
    assert report.passed, report.render()
    assert len(report.checks) == (13 if z else 6)


def test_conjugation_reports_amplification() -> None:
    """The factor is ``||e^{aL0}|| ||e^{-aL0}||`` for diagonal ``L0``."""
    triple: GeneratorTriple = build_sl2_generators(RepSpec.irrep(3))
    value, condition = conjugate(triple.j0, triple.jplus, 0.5)
    assert np.allclose(value, np.e * triple.jplus)
    assert condition == pytest.approx(1.0 + 2.0 * np.cosh(2.0))


def test_kappa_solves_its_quadratic() -> None:
    """Both roots satisfy ``mu- k^2 + 2 mu0 k - 2 mu+ = 0``."""
    params: FamilyParams = FamilyParams(mu_plus=0.4, mu_minus=1.1, mu_0=0.9)
    for branch in (PLUS, MINUS):
        k: complex = kappa(params, branch)
        assert abs(params.mu_minus * k * k + 2 * params.mu_0 * k
                   - 2 * params.mu_plus) < 1e-12
    plan: SimilarityPlan = family_plan(params, 1.0)
    assert plan.kappa_plus != plan.kappa_minus
    with pytest.raises(DomainError):
        kappa(FamilyParams(mu_plus=1.0, mu_minus=0.0, mu_0=1.0))


@pytest.mark.parametrize("eta", [0.5, 1.5, 3.0])
def test_upsilon_transform_closed_form(eta: float) -> None:
    """``Upsilon H Upsilon^-1`` matches its closed form up to eta = 3."""
    params: FamilyParams = FamilyParams(mu_plus=0.4, mu_minus=1.1, mu_0=0.9)
    triple: GeneratorTriple = build_deformed_generators(
        RepSpec.irrep(3, 0.4))
    forward, backward = upsilon(params, triple, eta)
    assert np.allclose(forward @ backward, np.eye(3), atol=1e-9)
    explicit: NDArray[np.complex128] = (forward
                                        @ build_family_H(params, triple)
                                        @ backward)
    closed: NDArray[np.complex128] = transformed_family_H(
        params, triple, eta)
    assert frobenius(explicit - closed) <= 1e-7 * max(1.0, frobenius(closed))


def test_transform_approaches_triangular_limit() -> None:
    """The distance to the limit form shrinks as ``eta`` grows."""
    params: FamilyParams = FamilyParams(mu_plus=0.4, mu_minus=1.1, mu_0=0.9)
    triple: GeneratorTriple = build_deformed_generators(
        RepSpec.irrep(3, 0.4))
    limit: NDArray[np.complex128] = limit_hamiltonian_family(params, triple)
    gaps: Tuple[float, ...] = tuple(
        frobenius(transformed_family_H(params, triple, eta) - limit)
        for eta in (1.0, 3.0, 6.0))
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-4


@settings(deadline=None, max_examples=30)
@given(mu_0=st.floats(2.0, 3.0),
       z=st.floats(0.0, 1.0),
       noise=arrays(np.float64, (3, 3),
                    elements=st.floats(-1, 1, allow_nan=False)))
def test_similarity_preserves_family_spectrum(
        mu_0: float, z: float, noise: NDArray[np.float64]) -> None:
    """``P H P^-1`` keeps the closed-form spectrum of ``H``."""
    params: FamilyParams = FamilyParams(mu_plus=-1.0, mu_minus=1.0,
                                        mu_0=mu_0)
    h: NDArray[np.complex128] = build_family_H(
        params, build_deformed_generators(RepSpec.irrep(3, z)))
    p: NDArray[np.complex128] = np.eye(3) + 0.2 * noise
    moved: NDArray[np.complex128] = p @ h @ np.linalg.inv(p)
    expected: NDArray[np.complex128] = analytic_spectrum_family(
        params, 3, z).eigenvalues
    got: NDArray[np.complex128] = eigenvalues(moved)
    scale: float = max(1.0, float(np.abs(expected).max()))
    assert np.allclose(np.sort(got.real), np.sort(expected.real),
                       atol=1e-8 * scale)
    assert np.abs(got.imag).max() <= 1e-8 * scale


def test_biorthogonal_metric_in_exact_phase() -> None:
    """A real spectrum gives a positive-definite intertwining metric."""
    h: NDArray[np.complex128] = build_linear_H(
        2.0, build_deformed_generators(RepSpec.irrep(3, 0.5)))
    system: BiorthogonalSystem = biorthogonal_system(h)
    assert system.positive_definite
    assert system.pseudo_hermitian
    pairing: NDArray[np.complex128] = (dagger(system.left_vectors)
                                       @ system.right_vectors)
    assert np.allclose(pairing, np.eye(3), atol=1e-10)
    partner: NDArray[np.complex128] = hermitize(h, system)
    assert np.allclose(partner, dagger(partner), atol=1e-9)
    assert np.allclose(eigenvalues(partner), system.values, atol=1e-8)


def test_biorthogonal_metric_in_broken_phase() -> None:
    """Complex eigenvalues break ``S H = H^dagger S``."""
    h: NDArray[np.complex128] = build_linear_H(
        -1.0, build_deformed_generators(RepSpec.irrep(2, 0.5)))
    system: BiorthogonalSystem = biorthogonal_system(h)
    assert not system.pseudo_hermitian
    with pytest.raises(NotHermitianError):
        hermitize(h, system)


def test_biorthogonal_refuses_defective_matrix() -> None:
    """A Jordan block has no eigenvector basis."""
    with pytest.raises(NotDiagonalizableError):
        biorthogonal_system(np.array([[1.0, 1.0], [0.0, 1.0]]))


@pytest.mark.parametrize("z", [0.0, 0.8])
def test_linear_metric_sign_of_mu(z: float) -> None:
    """The 2-dim metric intertwines for both signs but is positive for
    ``mu > 0`` only."""
    triple: GeneratorTriple = build_deformed_generators(RepSpec.irrep(2, z))
    for mu, positive in ((1.5, True), (-1.5, False)):
        h: NDArray[np.complex128] = build_linear_H(mu, triple)
        flags: Tuple[bool, bool] = metric_flags(h, linear_metric_d2(mu, z))
        assert flags == (positive, True)
    with pytest.raises(DomainError):
        linear_metric_d2(0.0, z)


@pytest.mark.parametrize("mu", [0.5, 1.0, 3.0])
@pytest.mark.parametrize("z", [0.0, 1.0, 2.0])
def test_linear_hermitian_partner(mu: float, z: float) -> None:
    """The closed-form partner is Hermitian and isospectral."""
    h: NDArray[np.complex128] = linear_hermitian_d2(mu, z)
    assert np.allclose(h, dagger(h))
    assert np.allclose(np.sort(np.linalg.eigvalsh(h)),
                       linear_spectrum_d2(mu, z).real, atol=1e-12)
    assert np.trace(h).real == pytest.approx(mu * z)
    partner: NDArray[np.complex128] = hermitize(
        build_linear_H(mu, build_deformed_generators(RepSpec.irrep(2, z))),
        linear_metric_d2(mu, z))
    assert np.allclose(eigenvalues(partner), eigenvalues(h), atol=1e-10)
    with pytest.raises(DomainError):
        linear_hermitian_d2(-1.0, z)


def test_closed_form_matches_two_dimensional_root() -> None:
    """At z = 0 the partner is ``sqrt(mu)`` times a Pauli matrix."""
    h: NDArray[np.complex128] = linear_hermitian_d2(4.0, 0.0)
    assert np.allclose(np.abs(h), [[0, sqrt(4.0)], [sqrt(4.0), 0]])
