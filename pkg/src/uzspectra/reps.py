"""Matrix representations of sl(2,R) and its non-standard deformation.

Generators act on the Fock truncation ``|0>, ..., |d-1>``; every ket with
index ``>= d`` is dropped. For ``beta = 1 - d`` the dropped span is
invariant and the truncation is the ``d``-dimensional irrep.

The deformed triple satisfies::

    [J0, J+] = (e^{2zJ+} - 1)/z
    [J0, J-] = -2 J- + z J0^2
    [J+, J-] = J0

and reduces to ``[L0, L+] = 2L+``, ``[L0, L-] = -2L-``, ``[L+, L-] = L0``
at ``z = 0``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import isfinite, prod, sqrt
from typing import Any, Dict, Final, List, NamedTuple, Tuple

import numpy as np
from numpy.typing import NDArray

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DomainError, ShapeError
from .linalg import (
    ComplexMatrix,
    commutator,
    frobenius,
    freeze,
    identity,
    kronecker,
    matrix_exponential,
    matrix_polynomial,
)
from .report import Check, Report, check

logger: logging.Logger = logging.getLogger(__name__)

GENERATORS: Final[Tuple[str, ...]] = ("J+", "J0", "J-")


@dataclass(frozen=True)
class RepSpec:
    """Deformation ``z``, weight ``beta`` and truncation dimension ``dim``."""

    z: float
    beta: float
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ShapeError(f"dim must be >= 1, got {self.dim}")
        if not (isfinite(self.z) and isfinite(self.beta)):
            raise DomainError("z and beta must be finite",
                              quantity="z" if not isfinite(self.z)
                              else "beta",
                              value=self.z if not isfinite(self.z)
                              else self.beta)

    @property
    def irreducible(self) -> bool:
        return self.beta == 1 - self.dim

    @classmethod
    def irrep(cls, dim: int, z: float = 0.0) -> RepSpec:
        """The ``dim``-dimensional irrep, ``beta = 1 - dim``."""
        return cls(z=z, beta=float(1 - dim), dim=dim)

    def undeformed(self) -> RepSpec:
        return RepSpec(z=0.0, beta=self.beta, dim=self.dim)


@dataclass(frozen=True)
class GeneratorTriple:
    """Read-only generator matrices of one representation.

    At ``z = 0`` the fields hold ``L0, L+, L-``.
    """

    spec: RepSpec
    j0: ComplexMatrix
    jplus: ComplexMatrix
    jminus: ComplexMatrix

    @property
    def deformed(self) -> bool:
        return self.spec.z != 0.0

    @property
    def z(self) -> float:
        return self.spec.z

    @property
    def dim(self) -> int:
        return self.spec.dim

    def by_name(self) -> Dict[str, ComplexMatrix]:
        return {"J+": self.jplus, "J0": self.j0, "J-": self.jminus}

    def scale(self) -> float:
        """``max(1, ||J-||)``, the reference size for residual bounds."""
        return max(1.0, frobenius(self.jminus))


def boson_operators(dim: int) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Truncated annihilation and creation matrices ``(a, a^dagger)``."""
    if dim < 1:
        raise ShapeError(f"dim must be >= 1, got {dim}")
    a: ComplexMatrix = np.diag(np.sqrt(np.arange(1, dim, dtype=float)),
                               k=1).astype(np.complex128)
    return a, a.T.copy()


def number_operator(dim: int) -> ComplexMatrix:
    return np.diag(np.arange(dim, dtype=float)).astype(np.complex128)


def expm1_quotient(x: ComplexMatrix, t: complex) -> ComplexMatrix:
    """``(e^{t x} - 1)/t`` for nilpotent ``x``, equal to ``x`` at ``t = 0``.

    Evaluated as the terminating series ``sum_k t^(k-1) x^k / k!``.
    """
    n: int = x.shape[0]
    coeffs: List[complex] = [0.0]
    term: complex = 1.0
    for k in range(1, n + 1):
        term = term / k
        coeffs.append(term * t**(k - 1))
    return matrix_polynomial(x, coeffs)


def _freeze_triple(spec: RepSpec, j0: ComplexMatrix, jplus: ComplexMatrix,
                   jminus: ComplexMatrix) -> GeneratorTriple:
    return GeneratorTriple(spec=spec,
                           j0=freeze(j0),
                           jplus=freeze(jplus),
                           jminus=freeze(jminus))


def build_sl2_generators(spec: RepSpec) -> GeneratorTriple:
    """Undeformed generators ``L+ = -i a^dagger``, ``L0 = 2 a^dagger a +
    beta``, ``L- = -i (a^dagger a + beta) a``; ``spec.z`` is ignored."""
    spec = spec.undeformed()
    a, ad = boson_operators(spec.dim)
    n: ComplexMatrix = number_operator(spec.dim)
    eye: ComplexMatrix = identity(spec.dim)
    return _freeze_triple(spec,
                          j0=2.0 * n + spec.beta * eye,
                          jplus=-1j * ad,
                          jminus=-1j * (n + spec.beta * eye) @ a)


def _rising(m: int, k: int) -> float:
    """``sqrt((m+k)!/m!)``."""
    return sqrt(prod(range(m + 1, m + k + 1)))


def build_deformed_generators(spec: RepSpec) -> GeneratorTriple:
    """Deformed generators from their Fock matrix elements.

    ``J+|m> = -i sqrt(m+1) |m+1>``, ``J0`` and ``J-`` pick up the
    terminating ``k``-sums in powers of ``-2iz``. ``z = 0`` returns the
    undeformed triple.
    """
    if spec.z == 0.0:
        return build_sl2_generators(spec)
    d: int = spec.dim
    z: float = spec.z
    beta: float = spec.beta
    j0: ComplexMatrix = np.zeros((d, d), dtype=np.complex128)
    jplus: ComplexMatrix = np.zeros((d, d), dtype=np.complex128)
    jminus: ComplexMatrix = np.zeros((d, d), dtype=np.complex128)
    for m in range(d):
        j0[m, m] = 2 * m + beta
        if m + 1 < d:
            jplus[m + 1, m] = -1j * sqrt(m + 1)
        if m >= 1:
            jminus[m - 1, m] = -1j * sqrt(m) * (m - 1 + beta)
        weight: complex = 1.0
        for k in range(1, d - m + 1):
            weight = weight * (-2j * z) / k
            rising: float = _rising(m, k)
            if m + k < d:
                j0[m + k, m] += weight * rising * (2 * m / (k + 1)
                                                   + beta / 2)
                jminus[m + k, m] += (-1j * weight * rising
                                     * (-1j * z * beta**2 / 8))
            if m >= 1 and m - 1 + k < d:
                jminus[m - 1 + k, m] += (-1j * weight * rising * m
                                         / sqrt(m + k)
                                         * ((m - 1) / (k + 1) + beta / 2))
    return _freeze_triple(spec, j0=j0, jplus=jplus, jminus=jminus)


def boson_realisation(spec: RepSpec) -> GeneratorTriple:
    """Deformed generators assembled from ``a`` and ``a^dagger``.

    Uses ``J+ = -i a^dagger`` and, with ``E = e^{-2iz a^dagger}``::

        J0 = i (E - 1)/z a + beta (E + 1)/2
        J- = (E - 1)/(2z) a^2 - i beta (E + 1)/2 a - z beta^2 (E - 1)/8

    Independent of :func:`build_deformed_generators`, which it must match.
    """
    d: int = spec.dim
    z: float = spec.z
    beta: float = spec.beta
    a, ad = boson_operators(d)
    eye: ComplexMatrix = identity(d)
    # (E - 1)/z as a series in a^dagger, finite at z = 0
    q: ComplexMatrix = -2j * expm1_quotient(ad, -2j * z)
    e: ComplexMatrix = eye + z * q
    j0: ComplexMatrix = 1j * q @ a + beta * (e + eye) / 2.0
    jminus: ComplexMatrix = (q / 2.0 @ a @ a
                             - 1j * beta * (e + eye) / 2.0 @ a
                             - z * z * beta**2 * q / 8.0)
    return _freeze_triple(spec, j0=j0, jplus=-1j * ad, jminus=jminus)


@dataclass(frozen=True)
class PTOperator:
    """Antilinear parity-time map ``M -> D conj(M) D``.

    Attributes:
        parity_signs: Diagonal of ``D``, ``(-1)^m`` per Fock level (or a
            Kronecker product of such diagonals on tensor spaces).
        antilinear: Always True; recorded for documentation.
    """

    parity_signs: NDArray[np.float64]
    antilinear: bool = True

    @classmethod
    def for_dim(cls, dim: int) -> PTOperator:
        return cls(parity_signs=(-1.0)**np.arange(dim))

    def tensor(self, other: PTOperator) -> PTOperator:
        return PTOperator(
            parity_signs=np.kron(self.parity_signs, other.parity_signs))

    def __call__(self, m: ComplexMatrix) -> ComplexMatrix:
        s: NDArray[np.float64] = self.parity_signs
        if m.shape != (s.size, s.size):
            raise ShapeError(f"PT operator of size {s.size} applied to "
                             f"matrix of shape {m.shape}")
        return s[:, None] * m.conj() * s[None, :]


def pt_transform(m: ComplexMatrix) -> ComplexMatrix:
    """Apply PT in the Fock basis of matching dimension."""
    return PTOperator.for_dim(m.shape[0])(m)


def check_pt_symmetric(m: ComplexMatrix, tol: float = 1e-12) -> bool:
    """True iff ``D conj(M) D = M`` within ``tol * max(1, ||M||)``."""
    return (frobenius(pt_transform(m) - m)
            <= tol * max(1.0, frobenius(m)))


def exp_jplus(triple: GeneratorTriple, factor: float) -> ComplexMatrix:
    """``e^{factor * z * J+}`` via the exact nilpotent series."""
    return matrix_exponential(factor * triple.z * triple.jplus)


def half_commutator(triple: GeneratorTriple) -> ComplexMatrix:
    """``f = (e^{2zJ+} - 1)/(2z) = [J0, J+]/2``, equal to ``J+`` at z = 0."""
    return expm1_quotient(np.asarray(triple.jplus), 2.0 * triple.z)


def casimir_value(beta: float) -> float:
    return beta * (beta / 2.0 - 1.0)


def casimir_matrix(triple: GeneratorTriple) -> ComplexMatrix:
    """Deformed Casimir::

        C = 1/2 J0 E J0 + G J- + J- G + E - 1,
        E = e^{-2zJ+},  G = (1 - E)/(2z)

    On an irrep this is ``beta (beta/2 - 1)`` times the identity.
    """
    d: int = triple.dim
    e: ComplexMatrix = exp_jplus(triple, -2.0)
    g: ComplexMatrix = expm1_quotient(np.asarray(triple.jplus),
                                      -2.0 * triple.z)
    j0: ComplexMatrix = triple.j0
    jm: ComplexMatrix = triple.jminus
    return 0.5 * j0 @ e @ j0 + g @ jm + jm @ g + e - identity(d)


def undeformed_casimir(triple: GeneratorTriple) -> ComplexMatrix:
    """``1/2 L0^2 + L+ L- + L- L+``."""
    return (0.5 * triple.j0 @ triple.j0 + triple.jplus @ triple.jminus
            + triple.jminus @ triple.jplus)


def verify_commutation(triple: GeneratorTriple,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> Report:
    """Residuals of the three defining relations.

    Bounds are ``tol.commutation * max(1, ||J-||)``. Residual maps are
    attached for truncated (non-irreducible) triples and failed checks.
    """
    j0, jp, jm = triple.j0, triple.jplus, triple.jminus
    z: float = triple.z
    bound: float = tol.commutation * triple.scale()
    keep: bool = not triple.spec.irreducible
    first: str = ("[J0,J+] = (e^{2zJ+}-1)/z" if triple.deformed
                  else "[L0,L+] = 2L+")
    checks: List[Check] = [
        check(first, commutator(j0, jp) - 2.0 * half_commutator(triple),
              bound, keep_map=keep),
        check("[J0,J-] = -2J- + zJ0^2",
              commutator(j0, jm) + 2.0 * jm - z * j0 @ j0,
              bound, keep_map=keep),
        check("[J+,J-] = J0", commutator(jp, jm) - j0, bound,
              keep_map=keep),
    ]
    report: Report = Report.of(
        f"commutation d={triple.dim} beta={triple.spec.beta} z={z}", checks)
    if not report.passed:
        logger.info("commutation residuals: %s", report.residuals())
    return report


def verify_casimir(triple: GeneratorTriple,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> Report:
    """``C = beta(beta/2 - 1) 1`` and ``[C, X] = 0`` for each generator."""
    c: ComplexMatrix = casimir_matrix(triple)
    scale: float = max(1.0, frobenius(c)) * triple.scale()
    bound: float = tol.algebra * scale
    value: float = casimir_value(triple.spec.beta)
    checks: List[Check] = [
        check(f"C = {value:g} * 1", c - value * identity(triple.dim),
              bound)
    ]
    for name, x in triple.by_name().items():
        checks.append(check(f"[C,{name}] = 0", commutator(c, x), bound))
    return Report.of(f"casimir d={triple.dim} z={triple.z}", checks)


class CoproductImages(NamedTuple):
    """``Delta(X)`` on the ``d^2``-dimensional tensor space."""

    plus: ComplexMatrix
    zero: ComplexMatrix
    minus: ComplexMatrix

    def by_name(self) -> Dict[str, ComplexMatrix]:
        return {"J+": self.plus, "J0": self.zero, "J-": self.minus}


# Coproduct of each generator as a sum of (left, right) tensor factors named
# by symbol: "1" identity, "E" = e^{2zJ+}, otherwise a generator.
COPRODUCT_TERMS: Final[Dict[str, Tuple[Tuple[str, str], ...]]] = {
    "J+": (("1", "J+"), ("J+", "1")),
    "J0": (("1", "J0"), ("J0", "E")),
    "J-": (("1", "J-"), ("J-", "E")),
}


def _symbols(triple: GeneratorTriple) -> Dict[str, ComplexMatrix]:
    table: Dict[str, ComplexMatrix] = triple.by_name()
    table["1"] = identity(triple.dim)
    table["E"] = exp_jplus(triple, 2.0)
    return table


def counit(symbol: str) -> float:
    """Counit on generators and the group-like elements ``1`` and ``E``."""
    if symbol in ("1", "E"):
        return 1.0
    if symbol in GENERATORS:
        return 0.0
    raise KeyError(f"unknown algebra element {symbol!r}")


def antipode_images(triple: GeneratorTriple) -> Dict[str, ComplexMatrix]:
    """Antipode of each symbol::

        S(J+) = -J+,  S(J0) = -J0 e^{-2zJ+},  S(J-) = -J- e^{-2zJ+},
        S(E) = e^{-2zJ+},  S(1) = 1
    """
    inv: ComplexMatrix = exp_jplus(triple, -2.0)
    return {
        "1": identity(triple.dim),
        "E": inv,
        "J+": -np.asarray(triple.jplus),
        "J0": -triple.j0 @ inv,
        "J-": -triple.jminus @ inv,
    }


def coproduct_images(triple: GeneratorTriple) -> CoproductImages:
    """``Delta(J+) = 1(x)J+ + J+(x)1``, ``Delta(J0) = 1(x)J0 + J0(x)E``,
    ``Delta(J-) = 1(x)J- + J-(x)E`` with ``E = e^{2zJ+}``."""
    table: Dict[str, ComplexMatrix] = _symbols(triple)

    def image(name: str) -> ComplexMatrix:
        return sum((kronecker(table[left], table[right])
                    for left, right in COPRODUCT_TERMS[name]),
                   start=np.zeros((triple.dim**2, ) * 2,
                                  dtype=np.complex128))

    return CoproductImages(plus=image("J+"),
                           zero=image("J0"),
                           minus=image("J-"))


def _relation_checks(label: str, j0: ComplexMatrix, jp: ComplexMatrix,
                     jm: ComplexMatrix, e: ComplexMatrix, z: float,
                     bound: float) -> List[Check]:
    eye: ComplexMatrix = identity(j0.shape[0])
    lhs_first: ComplexMatrix = commutator(j0, jp)
    if z == 0.0:
        rhs_first: ComplexMatrix = 2.0 * jp
    else:
        rhs_first = (e - eye) / z
    return [
        check(f"{label}: [J0,J+] relation", lhs_first - rhs_first, bound),
        check(f"{label}: [J0,J-] relation",
              commutator(j0, jm) + 2.0 * jm - z * j0 @ j0, bound),
        check(f"{label}: [J+,J-] = J0", commutator(jp, jm) - j0, bound),
    ]


def verify_hopf_axioms(triple: GeneratorTriple,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> Report:
    """Hopf structure as explicit matrix identities.

    Checks the coproduct homomorphism for all three relations,
    coassociativity on the triple tensor space, both counit and both
    antipode axioms for every generator, and PT invariance of every
    coproduct image under ``D (x) D`` with conjugation.
    """
    d: int = triple.dim
    z: float = triple.z
    table: Dict[str, ComplexMatrix] = _symbols(triple)
    gamma: Dict[str, ComplexMatrix] = antipode_images(triple)
    delta: CoproductImages = coproduct_images(triple)
    delta_of: Dict[str, ComplexMatrix] = delta.by_name()
    delta_of["1"] = identity(d * d)
    delta_of["E"] = kronecker(table["E"], table["E"])
    scale: float = triple.scale()**2
    bound: float = tol.algebra * scale
    checks: List[Check] = []

    checks.extend(
        _relation_checks("Delta", delta.zero, delta.plus, delta.minus,
                         delta_of["E"], z, bound))

    for name in GENERATORS:
        terms: Tuple[Tuple[str, str], ...] = COPRODUCT_TERMS[name]
        x: ComplexMatrix = table[name]
        zero: ComplexMatrix = np.zeros((d, d), dtype=np.complex128)
        left_counit: ComplexMatrix = sum(
            (counit(left) * table[right] for left, right in terms),
            start=zero)
        right_counit: ComplexMatrix = sum(
            (table[left] * counit(right) for left, right in terms),
            start=zero)
        checks.append(check(f"(eps(x)id)Delta({name}) = {name}",
                            left_counit - x, bound))
        checks.append(check(f"(id(x)eps)Delta({name}) = {name}",
                            right_counit - x, bound))
        left_antipode: ComplexMatrix = sum(
            (gamma[left] @ table[right] for left, right in terms),
            start=zero)
        right_antipode: ComplexMatrix = sum(
            (table[left] @ gamma[right] for left, right in terms),
            start=zero)
        eps_x: ComplexMatrix = counit(name) * identity(d)
        checks.append(check(f"m(S(x)id)Delta({name}) = eps({name})",
                            left_antipode - eps_x, bound))
        checks.append(check(f"m(id(x)S)Delta({name}) = eps({name})",
                            right_antipode - eps_x, bound))

        first: ComplexMatrix = sum(
            (kronecker(delta_of[left], table[right])
             for left, right in terms),
            start=np.zeros((d**3, ) * 2, dtype=np.complex128))
        second: ComplexMatrix = sum(
            (kronecker(table[left], delta_of[right])
             for left, right in terms),
            start=np.zeros((d**3, ) * 2, dtype=np.complex128))
        checks.append(check(f"coassociativity of Delta({name})",
                            first - second, bound))

    pt: PTOperator = PTOperator.for_dim(d).tensor(PTOperator.for_dim(d))
    for name, image in delta.by_name().items():
        checks.append(check(f"PT Delta({name}) = Delta({name})",
                            pt(image) - image, bound))
    return Report.of(f"hopf d={d} z={z}", checks)


def _complex_pairs(m: ComplexMatrix) -> List[List[List[float]]]:
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def triple_document(triple: GeneratorTriple) -> Dict[str, Any]:
    """JSON-compatible document of a triple.

    Matrices are nested row lists of ``[re, im]`` pairs.
    """
    return {
        "z": triple.z,
        "beta": triple.spec.beta,
        "dim": triple.dim,
        "irreducible": triple.spec.irreducible,
        "J0": _complex_pairs(triple.j0),
        "Jplus": _complex_pairs(triple.jplus),
        "Jminus": _complex_pairs(triple.jminus),
    }


def triple_from_document(doc: Dict[str, Any]) -> GeneratorTriple:
    """Inverse of :func:`triple_document`."""
    spec: RepSpec = RepSpec(z=float(doc["z"]),
                            beta=float(doc["beta"]),
                            dim=int(doc["dim"]))

    def matrix(key: str) -> ComplexMatrix:
        pairs: NDArray[np.float64] = np.asarray(doc[key], dtype=float)
        return pairs[..., 0] + 1j * pairs[..., 1]

    return _freeze_triple(spec,
                          j0=matrix("J0"),
                          jplus=matrix("Jplus"),
                          jminus=matrix("Jminus"))
