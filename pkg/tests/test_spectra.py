from math import sin, sqrt
from typing import Dict, List

import numpy as np
import pytest
import scipy.linalg
from numpy.typing import NDArray

from uzspectra.errors import DomainError
from uzspectra.linalg import eigenvalues, frobenius, sort_spectrum
from uzspectra.reps import (
    GeneratorTriple,
    RepSpec,
    build_deformed_generators,
    half_commutator,
)
from uzspectra.spectra import (
    MINUS,
    FamilyParams,
    Phase,
    PhaseScan,
    PolyHamiltonianSpec,
    SpectrumResult,
    analytic_spectrum_family,
    analytic_spectrum_polynomial,
    band_gaps,
    baseline_spec,
    build_family_H,
    build_linear_H,
    build_polynomial_H,
    classify_phase_and_scan,
    classify_spectrum,
    cos_spec,
    is_conjugate_closed,
    limit_hamiltonian_family,
    linear_spectrum_d2,
    numeric_spectrum,
    phase_from_discriminant,
    rescale_to_unit,
    sin_spec,
    weights,
)


def _matched(computed: NDArray[np.complex128],
             expected: NDArray[np.complex128], bound: float) -> bool:
    """Greedy one-to-one matching of two spectra within ``bound``."""
    remaining: List[complex] = list(expected)
    for v in computed:
        dist: NDArray[np.float64] = np.abs(np.asarray(remaining) - v)
        k: int = int(np.argmin(dist))
        if dist[k] > bound:
            return False
        remaining.pop(k)
    return not remaining


def _irrep(dim: int, z: float) -> GeneratorTriple:
    return build_deformed_generators(RepSpec.irrep(dim, z))


@pytest.mark.parametrize("mu", [2.0, 0.3, -3.0])
@pytest.mark.parametrize("z", [0.0, 0.7, 1.5])
def test_linear_two_dimensional_spectrum(mu: float, z: float) -> None:
    """``H_mu`` on the 2-dim irrep has ``mu z/2 +- sqrt(mu)``."""
    h: NDArray[np.complex128] = build_linear_H(mu, _irrep(2, z))
    expected: NDArray[np.complex128] = linear_spectrum_d2(mu, z)
    assert _matched(eigenvalues(h), expected, 1e-10)
    if mu > 0:
        assert np.allclose(expected.imag, 0.0)
    else:
        assert np.allclose(expected.real, mu * z / 2)


def test_rescaling_to_unit_coupling() -> None:
    """``sigma(H_mu(z)) = sqrt|mu| sigma(H_{+-1}(lambda))``."""
    lam, sign = rescale_to_unit(2.25, 0.8)
    assert (lam, sign) == (pytest.approx(1.2), 1)
    lhs: NDArray[np.complex128] = eigenvalues(
        build_linear_H(2.25, _irrep(3, 0.8)))
    rhs: NDArray[np.complex128] = 1.5 * eigenvalues(
        build_linear_H(sign, _irrep(3, lam)))
    assert _matched(lhs, rhs, 1e-8)

    lam, sign = rescale_to_unit(-4.0, 0.5)
    assert sign == -1
    assert _matched(linear_spectrum_d2(-4.0, 0.5),
                    2.0 * linear_spectrum_d2(sign, lam), 1e-12)
    with pytest.raises(DomainError):
        rescale_to_unit(0.0, 1.0)


def test_family_spectrum_matches_numerics(rng: np.random.Generator) -> None:
    """Closed-form family eigenvalues agree with the eigensolver."""
    checked: int = 0
    while checked < 24:
        mu_plus, mu_minus, mu_0 = rng.uniform(-2.0, 2.0, size=3)
        params: FamilyParams = FamilyParams(mu_plus=float(mu_plus),
                                            mu_minus=float(mu_minus),
                                            mu_0=float(mu_0))
        if abs(params.discriminant) < 0.5:
            continue
        dim: int = int(rng.integers(2, 6))
        z: float = float(rng.uniform(0.0, 1.0))
        analytic: SpectrumResult = analytic_spectrum_family(params, dim, z)
        h: NDArray[np.complex128] = build_family_H(params, _irrep(dim, z))
        assert _matched(eigenvalues(h), analytic.eigenvalues,
                        1e-7 * analytic.scale())
        expected: Phase = (Phase.EXACT
                           if params.discriminant > 0 else Phase.BROKEN)
        assert analytic.phase is expected
        assert analytic.respects_pt_dichotomy()
        checked += 1


def test_spectrum_structure_by_parity() -> None:
    """Odd dimensions carry a zero weight, even ones do not."""
    assert list(weights(3)) == [-2.0, 0.0, 2.0]
    assert list(weights(4)) == [-3.0, -1.0, 1.0, 3.0]
    params: FamilyParams = FamilyParams.h_plus(1.0, 1.0)
    result: SpectrumResult = analytic_spectrum_family(params, 3, 0.0)
    assert np.allclose(result.eigenvalues, [-2 * sqrt(3), 0, 2 * sqrt(3)])


def test_h_minus_phases_and_eps() -> None:
    """``h_-`` is exact for ``nu^2 > 2``, broken below, EP at ``+-sqrt 2``."""
    assert phase_from_discriminant(FamilyParams.h_minus(1.0, 2.0)) \
        is Phase.EXACT
    assert phase_from_discriminant(FamilyParams.h_minus(1.0, 1.0)) \
        is Phase.BROKEN
    assert phase_from_discriminant(FamilyParams.h_minus(1.0, sqrt(2.0))) \
        is Phase.EXCEPTIONAL

    nus: NDArray[np.float64] = np.linspace(-3.0, 3.0, 61)
    grid: List[FamilyParams] = [FamilyParams.h_minus(1.0, nu) for nu in nus]
    scan: PhaseScan = classify_phase_and_scan(grid, dim=3, z=0.5)
    phases = scan.phases()
    assert phases[0] is Phase.EXACT and phases[-1] is Phase.EXACT
    assert phases[30] is Phase.BROKEN
    assert len(scan.ep_locus) == 2
    located: List[float] = sorted(ep.params.mu_0 for ep in scan.ep_locus)
    assert np.allclose(located, [-sqrt(2.0), sqrt(2.0)], atol=1e-9)
    for point in scan.points:
        values: NDArray[np.complex128] = point.spectrum.eigenvalues
        if point.phase is Phase.BROKEN:
            assert np.abs(values.imag).max() > 0.0
            assert is_conjugate_closed(values)
        else:
            assert np.all(values.imag == 0.0)


def test_classify_computed_spectrum(caplog: pytest.LogCaptureFixture) -> None:
    """Real spectra are exact; complex ones broken, unpaired ones logged."""
    real: NDArray[np.complex128] = np.array([-2.0, 0.5 + 1e-13j, 3.0])
    paired: NDArray[np.complex128] = np.array([1 + 2j, 1 - 2j, 4.0])
    unpaired: NDArray[np.complex128] = np.array([1 + 2j, 4.0])
    assert classify_spectrum(real) is Phase.EXACT
    assert classify_spectrum(paired) is Phase.BROKEN
    assert not caplog.records
    with caplog.at_level("WARNING", logger="uzspectra.spectra"):
        assert classify_spectrum(unpaired) is Phase.BROKEN
    assert "conjugate-closed" in caplog.text


def test_exceptional_point_is_defective() -> None:
    """At the EP the 2-dim family coalesces into one Jordan block."""
    params: FamilyParams = FamilyParams.h_minus(1.0, sqrt(2.0))
    scan: PhaseScan = classify_phase_and_scan([params], dim=2, z=0.5)
    spectrum: SpectrumResult = scan.points[0].spectrum
    assert spectrum.phase is Phase.EXCEPTIONAL
    assert len(spectrum.ep_clusters) == 1
    cluster = spectrum.ep_clusters[0]
    assert cluster.indices == (0, 1)
    assert cluster.algebraic == 2
    assert cluster.geometric == 1
    assert cluster.defective
    assert np.isclose(cluster.value, 0.25)
    assert len(scan.ep_locus) == 1


def test_h_plus_is_always_exact() -> None:
    """``h_+`` has a positive discriminant for every ``nu``."""
    for nu in np.linspace(-3.0, 3.0, 13):
        result: SpectrumResult = analytic_spectrum_family(
            FamilyParams.h_plus(0.8, float(nu)), 4, 0.6)
        assert result.phase is Phase.EXACT
        assert np.all(result.eigenvalues.imag == 0.0)


def test_limit_form_shares_the_spectrum() -> None:
    """The triangular limit carries the analytic values on its diagonal."""
    params: FamilyParams = FamilyParams(mu_plus=0.4, mu_minus=1.1, mu_0=0.9)
    triple: GeneratorTriple = _irrep(4, 0.3)
    limit: NDArray[np.complex128] = limit_hamiltonian_family(params, triple)
    assert np.allclose(np.triu(limit, k=1), 0.0)
    assert np.allclose(sort_spectrum(np.diag(limit)),
                       analytic_spectrum_family(params, 4, 0.3).eigenvalues)
    flipped: NDArray[np.complex128] = limit_hamiltonian_family(
        params, triple, branch=MINUS)
    assert np.allclose(np.diag(flipped)[::-1], np.diag(limit))
    with pytest.raises(DomainError):
        limit_hamiltonian_family(
            FamilyParams(mu_plus=1.0, mu_minus=0.0, mu_0=1.0), triple)


def test_numeric_spectrum_classifies() -> None:
    """Without a discriminant the phase comes from the values."""
    h: NDArray[np.complex128] = build_linear_H(-1.0, _irrep(2, 0.0))
    result: SpectrumResult = numeric_spectrum(h)
    assert result.phase is Phase.BROKEN
    assert result.discriminant is None


@pytest.mark.parametrize("z", [0.0, 0.5])
def test_sine_and_cosine_spectra(z: float) -> None:
    """``{(z/2) n^2 + f(n)}`` over ``n = -5, ..., 5`` for d=6, lambda=1."""
    n: NDArray[np.float64] = weights(6)
    sine: PolyHamiltonianSpec = sin_spec(1.0, 1.0, 6)
    cosine: PolyHamiltonianSpec = cos_spec(1.0, 1.0, 6)
    assert sine.order % 2 == 1 and cosine.order % 2 == 0
    for spec, f in ((sine, np.sin), (cosine, np.cos)):
        result: SpectrumResult = analytic_spectrum_polynomial(spec, 6, z)
        expected: NDArray[np.complex128] = sort_spectrum(z / 2 * n * n
                                                         + f(n))
        assert np.allclose(result.eigenvalues, expected, atol=1e-10)
        assert result.phase is Phase.EXACT
    h: NDArray[np.complex128] = build_polynomial_H(sine, _irrep(6, 0.5))
    assert _matched(eigenvalues(h),
                    analytic_spectrum_polynomial(sine, 6, 0.5).eigenvalues,
                    1e-7)


@pytest.mark.parametrize("z", [0.5, 1.0, 2.5])
def test_polynomial_part_is_the_matrix_function(z: float) -> None:
    """``H - mu- J-`` is the full matrix ``sin(J0)`` or ``cos(J0)``."""
    triple: GeneratorTriple = _irrep(6, z)
    j0: NDArray[np.complex128] = np.asarray(triple.j0)
    for spec, ref in ((sin_spec(1.0, 1.0, 6), scipy.linalg.sinm(j0)),
                      (cos_spec(1.0, 1.0, 6), scipy.linalg.cosm(j0))):
        part: NDArray[np.complex128] = (build_polynomial_H(spec, triple)
                                        - triple.jminus)
        assert frobenius(part - ref) <= 1e-8 * max(1.0, frobenius(ref))


def test_family_power_series_matches_literal_square() -> None:
    """``g = (0, 0, 1)`` replaces ``mu0 J0`` by ``mu0 J0^2``."""
    triple: GeneratorTriple = _irrep(4, 1.0)
    j0: NDArray[np.complex128] = np.asarray(triple.j0)
    params: FamilyParams = FamilyParams(mu_plus=0.3, mu_minus=0.7,
                                        mu_0=1.5, g=(0.0, 0.0, 1.0))
    literal: NDArray[np.complex128] = (0.7 * triple.jminus
                                       + 0.6 * half_commutator(triple)
                                       + 1.5 * j0 @ j0)
    h: NDArray[np.complex128] = build_family_H(params, triple)
    assert frobenius(h - literal) <= 1e-10 * frobenius(literal)


def test_band_gaps() -> None:
    """The sine splits each ``+-k`` pair by ``2 sin k``; cosine does not."""
    gaps: Dict[int, float] = band_gaps(sin_spec(1.0, 1.0, 6), 6)
    assert list(gaps) == [1, 3, 5]
    for k, gap in gaps.items():
        assert gap == pytest.approx(2 * sin(k), abs=1e-10)
    flat: Dict[int, float] = band_gaps(cos_spec(1.0, 1.0, 6), 6)
    assert all(abs(g) < 1e-12 for g in flat.values())
    assert list(band_gaps(baseline_spec(1.0), 5)) == [2, 4]


def test_baseline_is_degenerate_in_pairs() -> None:
    """With no polynomial the levels ``(z/2) n^2`` pair up."""
    result: SpectrumResult = analytic_spectrum_polynomial(
        baseline_spec(2.0), 4, 0.5)
    assert np.allclose(result.eigenvalues, [0.5, 0.5, 4.5, 4.5])
