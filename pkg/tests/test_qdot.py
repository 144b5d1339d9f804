from math import sqrt
from typing import Dict, List, Tuple

import numpy as np
import pytest
from numpy.typing import NDArray

from uzspectra.errors import DomainError
from uzspectra.linalg import dagger, eigenvalues
from uzspectra.qdot import (
    LEVELS,
    AvoidedCrossing,
    QdotParams,
    QdotRow,
    QdotSpectrum,
    approx_eigenvalues,
    avoided_crossings,
    block_diagonalize,
    build_He,
    build_Heff,
    charpoly_coeffs,
    comparison_rows,
    decoupled_target,
    decoupling_transforms,
    effective_blocks,
    exact_eigenvalues,
    hermitian_blocks_closed_form,
    hermitize_blocks,
    metric_roots,
    partner,
    radicands,
    sweep_compare,
)

DEFAULTS: QdotParams = QdotParams()


def test_default_parameters() -> None:
    """Published GaAs values, epsilon starting at zero."""
    assert (DEFAULTS.deltaL, DEFAULTS.deltaR) == (3.0, 95.8)
    assert (DEFAULTS.t1, DEFAULTS.t2, DEFAULTS.t3, DEFAULTS.t4) == (1.8, 7.1,
                                                                    11.5, 6.3)
    assert DEFAULTS.at(20.0).epsilon == 20.0
    assert DEFAULTS.epsilon == 0.0
    with pytest.raises(DomainError):
        QdotParams(t1=float("nan"))


def test_hamiltonian_is_real_symmetric() -> None:
    """``H_e`` is symmetric with trace ``dL + dR``."""
    h: NDArray[np.complex128] = build_He(DEFAULTS.at(37.0))
    assert np.array_equal(h, h.T)
    assert np.all(h.imag == 0.0)
    assert np.trace(h).real == pytest.approx(98.8)


@pytest.mark.parametrize("eps", [-50.0, 0.0, 50.0, 100.0])
def test_closed_form_characteristic_polynomial(eps: float) -> None:
    """Closed-form coefficients equal those of ``det(lambda - H_e)``."""
    p: QdotParams = DEFAULTS.at(eps)
    coeffs: Tuple[float, ...] = charpoly_coeffs(p).coefficients
    assert coeffs[3] == pytest.approx(-98.8)
    reference: NDArray[np.float64] = np.poly(build_He(p).real)[::-1][:-1]
    assert np.allclose(coeffs, reference, rtol=1e-10, atol=1e-8)


@pytest.mark.parametrize("eps", [-50.0, 0.0, 50.0, 100.0])
def test_quartic_roots_match_eigensolver(eps: float) -> None:
    """The four real roots are the eigenvalues of ``H_e``."""
    p: QdotParams = DEFAULTS.at(eps)
    roots: NDArray[np.float64] = exact_eigenvalues(p)
    reference: NDArray[np.float64] = np.linalg.eigvalsh(build_He(p).real)
    assert np.all(np.diff(roots) >= 0)
    assert np.allclose(roots, reference, rtol=1e-9, atol=1e-8)


def test_approximate_levels_at_zero_detuning() -> None:
    """``E1+- = (3 +- sqrt 538)/2`` at epsilon = 0."""
    levels: Dict[str, float] = approx_eigenvalues(DEFAULTS)
    assert levels["E1+"] == pytest.approx((3 + sqrt(538)) / 2)
    assert levels["E1-"] == pytest.approx((3 - sqrt(538)) / 2)
    assert set(levels) == {"E1+", "E1-", "E2+", "E2-"}


def test_approximation_exact_without_cross_coupling() -> None:
    """With ``t1 = t4 = 0`` the dots decouple and the pairs are exact."""
    p: QdotParams = QdotParams(t1=0.0, t4=0.0)
    grid: List[float] = [-60.0, 0.0, 25.0, 80.0]
    for spectrum in sweep_compare(p, grid):
        assert np.allclose(spectrum.exact, spectrum.approx, atol=1e-9)
        assert spectrum.deviations.max() < 1e-9


@pytest.mark.parametrize("eps", [5.0, 20.0, 60.0])
def test_effective_model_reproduces_pairs(eps: float) -> None:
    """``H_eff`` blocks carry exactly the ``E1+-`` and ``E2+-`` levels."""
    p: QdotParams = DEFAULTS.at(eps)
    h1, h2 = effective_blocks(p)
    levels: Dict[str, float] = approx_eigenvalues(p)
    assert np.allclose(eigenvalues(h1), [levels["E1-"], levels["E1+"]],
                       rtol=1e-9, atol=1e-8)
    assert np.allclose(eigenvalues(h2), [levels["E2-"], levels["E2+"]],
                       rtol=1e-9, atol=1e-8)
    big: NDArray[np.complex128] = build_Heff(p)
    assert np.array_equal(big[:2, :2], h1)
    assert np.array_equal(big[2:, 2:], h2)
    assert not np.any(big[:2, 2:])


def test_effective_model_is_singular_at_zero() -> None:
    """The ``1/epsilon`` couplings are undefined at zero detuning."""
    with pytest.raises(DomainError):
        build_Heff(DEFAULTS)


@pytest.mark.parametrize("eps", [5.0, 20.0])
def test_hermitised_blocks(eps: float) -> None:
    """``s H s^-1`` is Hermitian and matches the entrywise form."""
    p: QdotParams = DEFAULTS.at(eps)
    numeric: Tuple[NDArray[np.complex128], ...] = hermitize_blocks(p)
    closed: Tuple[NDArray[np.complex128], ...] = hermitian_blocks_closed_form(
        p)
    for h, c in zip(numeric, closed):
        assert np.allclose(h, dagger(h), atol=1e-10)
        assert np.allclose(h, c, atol=1e-10)
    s1, _ = metric_roots(p)
    assert s1[1, 1] == 1.0
    assert s1[0, 0].real > 0


def test_radicand_violations_are_named() -> None:
    """Negative radicands raise a DomainError naming the offender."""
    assert radicands(DEFAULTS.at(5.0))[0] == pytest.approx(472.0)
    with pytest.raises(DomainError) as r1:
        hermitize_blocks(DEFAULTS.at(90.0))
    assert r1.value.quantity == "R1"
    with pytest.raises(DomainError) as r2:
        hermitize_blocks(DEFAULTS.at(60.0))
    assert r2.value.quantity == "R2"
    with pytest.raises(DomainError):
        decoupling_transforms(QdotParams(t2=0.0, epsilon=5.0))


@pytest.mark.parametrize("eps", [5.0, 20.0])
def test_block_diagonalisation_recovers_decoupled_dots(eps: float) -> None:
    """``P h_eff P^-1`` is ``H_e`` without ``t1`` and ``t4``."""
    p: QdotParams = DEFAULTS.at(eps)
    target: NDArray[np.complex128] = decoupled_target(p)
    assert np.allclose(block_diagonalize(p), target, atol=1e-9)
    stripped: NDArray[np.complex128] = build_He(QdotParams(t1=0.0,
                                                           t4=0.0,
                                                           epsilon=eps))
    assert np.array_equal(target, stripped)


def test_sweep_produces_four_rows_per_point() -> None:
    """Comparison rows flatten ``LEVELS`` values per detuning."""
    grid: List[float] = list(np.linspace(-100.0, 150.0, 11))
    spectra: Tuple[QdotSpectrum, ...] = sweep_compare(DEFAULTS, grid)
    rows: List[QdotRow] = comparison_rows(spectra)
    assert len(rows) == LEVELS * len(grid)
    assert [r.level for r in rows[:4]] == [0, 1, 2, 3]
    assert all(r.deviation >= 0 for r in rows)
    assert all(s.effective is None for s in spectra)


def test_sweep_with_effective_skips_zero() -> None:
    """``H_eff`` is evaluated everywhere except epsilon = 0."""
    spectra: Tuple[QdotSpectrum, ...] = sweep_compare(
        DEFAULTS, [-20.0, 0.0, 20.0], with_effective=True)
    assert spectra[1].effective is None
    for s in (spectra[0], spectra[2]):
        assert s.effective is not None
        assert np.allclose(s.effective, s.approx, rtol=1e-9, atol=1e-8)


def test_deviation_decays_at_large_detuning() -> None:
    """The approximation is better at epsilon = 1000 than at 300."""
    near, far = sweep_compare(DEFAULTS, [300.0, 1000.0])
    assert far.deviations.sum() < near.deviations.sum()
    assert far.deviations.max() < near.deviations.max()


def test_avoided_crossings() -> None:
    """Each band pair gets its minimal-gap grid point."""
    grid: List[float] = list(np.linspace(-150.0, 150.0, 31))
    found: Dict[Tuple[int, int], AvoidedCrossing] = avoided_crossings(
        DEFAULTS, grid)
    assert set(found) == {(0, 1), (2, 3)}
    for pair, crossing in found.items():
        assert crossing.levels == pair
        assert crossing.epsilon == grid[crossing.index]
        assert crossing.gap > 0
    assert partner(0) == 1 and partner(3) == 2
    with pytest.raises(DomainError):
        avoided_crossings(DEFAULTS, [])
