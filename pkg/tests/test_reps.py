import json
from typing import Dict, List

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from numpy.typing import NDArray

from uzspectra.errors import DomainError, ShapeError
from uzspectra.linalg import frobenius, identity
from uzspectra.report import Report
from uzspectra.reps import (
    GeneratorTriple,
    PTOperator,
    RepSpec,
    boson_operators,
    boson_realisation,
    build_deformed_generators,
    build_sl2_generators,
    casimir_matrix,
    casimir_value,
    check_pt_symmetric,
    expm1_quotient,
    half_commutator,
    number_operator,
    pt_transform,
    triple_document,
    triple_from_document,
    undeformed_casimir,
    verify_casimir,
    verify_commutation,
)


def test_two_dimensional_deformed_matrices(
        triple_d2: GeneratorTriple) -> None:
    """The d=2 irrep has closed-form entries in z."""
    z: float = 0.7
    assert np.allclose(triple_d2.jplus, [[0, 0], [-1j, 0]])
    assert np.allclose(triple_d2.j0, [[-1, 0], [1j * z, 1]])
    assert np.allclose(triple_d2.jminus, [[0, 1j], [1j * z * z / 4, z]])
    assert triple_d2.deformed
    assert triple_d2.spec.irreducible


def test_undeformed_generators() -> None:
    """``L0`` is diagonal with entries ``2m + beta``."""
    triple: GeneratorTriple = build_sl2_generators(RepSpec.irrep(4, 1.3))
    assert triple.z == 0.0
    assert not triple.deformed
    assert np.allclose(np.diag(triple.j0), [-3, -1, 1, 3])
    assert np.count_nonzero(triple.j0 - np.diag(np.diag(triple.j0))) == 0


def test_generators_are_read_only(triple_d2: GeneratorTriple) -> None:
    """Stored matrices cannot be written through."""
    with pytest.raises(ValueError):
        triple_d2.j0[0, 0] = 5.0


def test_spec_validation() -> None:
    """Dimension and finiteness are checked on construction."""
    with pytest.raises(ShapeError):
        RepSpec(z=0.0, beta=0.0, dim=0)
    with pytest.raises(DomainError):
        RepSpec(z=float("inf"), beta=-1.0, dim=2)
    assert RepSpec.irrep(3).beta == -2.0
    assert not RepSpec(z=0.1, beta=0.5, dim=3).irreducible


def test_truncated_boson_operators() -> None:
    """``[a, a^dagger] = 1`` except on the top level; ``a^dagger a = N``."""
    dim: int = 4
    a, ad = boson_operators(dim)
    expected: NDArray[np.complex128] = np.diag([1.0, 1.0, 1.0, 1.0 - dim])
    assert np.allclose(a @ ad - ad @ a, expected)
    assert np.allclose(ad @ a, number_operator(dim))
    with pytest.raises(ShapeError):
        boson_operators(0)


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("z", [0.1, 1.0])
def test_boson_realisation_matches_matrix_elements(dim: int,
                                                   z: float) -> None:
    """The ``a``, ``a^dagger`` expressions reproduce the Fock entries."""
    for spec in (RepSpec.irrep(dim, z), RepSpec(z=z, beta=0.5, dim=dim)):
        fock: GeneratorTriple = build_deformed_generators(spec)
        boson: GeneratorTriple = boson_realisation(spec)
        for name, x in fock.by_name().items():
            y: NDArray[np.complex128] = boson.by_name()[name]
            assert frobenius(x - y) <= 1e-12 * max(1.0, frobenius(x)), name


@pytest.mark.parametrize("dim", range(2, 13))
@pytest.mark.parametrize("z", [0.0, 0.1, 1.0, 2.5])
def test_commutation_relations_hold_on_irreps(dim: int, z: float) -> None:
    """All three relations pass for irreps across z."""
    report: Report = verify_commutation(
        build_deformed_generators(RepSpec.irrep(dim, z)))
    assert report.passed, report.render()
    assert len(report.checks) == 3


@pytest.mark.parametrize("dim", range(2, 13))
@pytest.mark.parametrize("z", [0.1, 1.0, 2.5])
def test_casimir_suite_passes_on_irreps(dim: int, z: float) -> None:
    """The Casimir check holds up to d = 12 and z = 2.5."""
    triple: GeneratorTriple = build_deformed_generators(
        RepSpec.irrep(dim, z))
    report: Report = verify_casimir(triple)
    assert report.passed, report.render()


def test_undeformed_relation_names() -> None:
    """At z = 0 the first check is labelled with L-generators."""
    report: Report = verify_commutation(
        build_sl2_generators(RepSpec.irrep(3)))
    assert report.checks[0].name == "[L0,L+] = 2L+"
    deformed: Report = verify_commutation(
        build_deformed_generators(RepSpec.irrep(3, 0.4)))
    assert deformed.checks[0].name == "[J0,J+] = (e^{2zJ+}-1)/z"


def test_truncation_off_irrep_breaks_relations() -> None:
    """Away from ``beta = 1 - d`` the truncation is not a representation."""
    triple: GeneratorTriple = build_sl2_generators(
        RepSpec(z=0.0, beta=0.5, dim=3))
    report: Report = verify_commutation(triple)
    assert not report.passed
    last: NDArray[np.float64] | None = report.checks[2].residual_map
    assert last is not None
    # (d - 1 + beta) d on the top Fock level
    assert np.isclose(last[2, 2], 7.5)
    assert all(c.residual_map is not None for c in report.checks)


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("z", [0.0, 0.3, 1.0])
def test_casimir_is_scalar_on_irreps(dim: int, z: float) -> None:
    """``C = beta(beta/2 - 1)`` times the identity."""
    spec: RepSpec = RepSpec.irrep(dim, z)
    triple: GeneratorTriple = build_deformed_generators(spec)
    c: NDArray[np.complex128] = casimir_matrix(triple)
    value: float = casimir_value(spec.beta)
    assert frobenius(c - value * identity(dim)) <= 1e-9 * max(1.0, value)
    assert verify_casimir(triple).passed


def test_casimir_reduces_to_undeformed() -> None:
    """At z = 0 the deformed Casimir equals the classical one."""
    triple: GeneratorTriple = build_sl2_generators(RepSpec.irrep(4))
    assert np.allclose(casimir_matrix(triple), undeformed_casimir(triple),
                       atol=1e-12)
    assert casimir_value(-1.0) == 1.5


def test_half_commutator_limits() -> None:
    """``f`` equals ``J+`` at z = 0 and ``[J0,J+]/2`` otherwise."""
    flat: GeneratorTriple = build_sl2_generators(RepSpec.irrep(3))
    assert np.allclose(half_commutator(flat), flat.jplus)
    x: NDArray[np.complex128] = np.diag([1.0, 1.0], k=-1).astype(complex)
    assert np.allclose(expm1_quotient(x, 0.0), x)
    assert np.allclose(expm1_quotient(x, 2.0), x + x @ x)


@pytest.mark.parametrize("dim", [2, 3, 5])
def test_generators_are_pt_symmetric(dim: int) -> None:
    """Each generator is invariant under ``D conj(.) D``."""
    triple: GeneratorTriple = build_deformed_generators(
        RepSpec.irrep(dim, 0.9))
    for name, x in triple.by_name().items():
        assert check_pt_symmetric(x), name
    assert not check_pt_symmetric(1j * identity(dim))


@settings(deadline=None, max_examples=40)
@given(entries=arrays(np.float64, (2, 2, 3, 3),
                      elements=st.floats(-2, 2, allow_nan=False)))
def test_pt_is_antilinear_involution(entries: NDArray[np.float64]) -> None:
    """PT squares to one and preserves products."""
    a: NDArray[np.complex128] = entries[0, 0] + 1j * entries[0, 1]
    b: NDArray[np.complex128] = entries[1, 0] + 1j * entries[1, 1]
    assert np.allclose(pt_transform(pt_transform(a)), a, atol=1e-14)
    assert np.allclose(pt_transform(a @ b),
                       pt_transform(a) @ pt_transform(b),
                       atol=1e-12)
    assert np.allclose(pt_transform(1j * a), -1j * pt_transform(a),
                       atol=1e-14)


def test_pt_operator_shape_mismatch() -> None:
    """Applying PT of the wrong size raises."""
    with pytest.raises(ShapeError):
        PTOperator.for_dim(3)(identity(2))
    pair: PTOperator = PTOperator.for_dim(2).tensor(PTOperator.for_dim(2))
    assert list(pair.parity_signs) == [1.0, -1.0, -1.0, 1.0]


def test_document_round_trip() -> None:
    """A triple survives JSON serialisation."""
    triple: GeneratorTriple = build_deformed_generators(
        RepSpec.irrep(3, 0.6))
    doc: Dict[str, object] = json.loads(json.dumps(triple_document(triple)))
    back: GeneratorTriple = triple_from_document(doc)
    assert back.spec == triple.spec
    rows: List[List[List[float]]] = doc["J0"]  # type: ignore[assignment]
    assert len(rows) == 3 and len(rows[0][0]) == 2
    for name, x in triple.by_name().items():
        assert np.array_equal(back.by_name()[name], x)
