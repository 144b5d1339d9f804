"""Dense complex linear algebra used by every other module.

The non-Hermitian eigensolver, the matrix exponential, the companion
matrix root finder and the characteristic polynomial are implemented here
on top of plain numpy arrays; numpy's LAPACK bindings are used only for
the Hermitian eigenproblem, singular values and dense linear solves.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import ceil, log2
from typing import Callable, Final, Iterable, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    ConvergenceError,
    DomainError,
    NonFiniteError,
    NotHermitianError,
    NotPositiveDefiniteError,
    ShapeError,
)

logger: logging.Logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]

EPS: Final[float] = float(np.finfo(np.float64).eps)

# Pade(13,13) numerator coefficients and the 1-norm bound below which the
# unscaled approximant meets double precision.
PADE13: Final[Tuple[float, ...]] = (
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
)
THETA13: Final[float] = 5.371920351148152


def as_matrix(a: ArrayLike, *, square: bool = True,
              name: str = "A") -> ComplexMatrix:
    """Coerce ``a`` into a validated ``complex128`` matrix.

    Args:
        a: Anything numpy can turn into a 2-D array.
        square: Require equal row and column counts.
        name: Operand name used in error messages.

    Returns:
        A new or existing complex128 array.

    Raises:
        ShapeError: If ``a`` is not 2-D, is empty, or is not square when
            ``square`` is set.
        NonFiniteError: If any entry is NaN or infinite.
    """
    m: ComplexMatrix = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise ShapeError(f"{name} must be a non-empty 2-D matrix, "
                         f"got shape {m.shape}")
    if square and m.shape[0] != m.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteError(f"{name} contains NaN or Inf entries")
    return m


def freeze(a: ComplexMatrix) -> ComplexMatrix:
    """Mark ``a`` read-only and return it."""
    a.flags.writeable = False
    return a


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=np.complex128)


def frobenius(a: ComplexMatrix) -> float:
    return float(np.linalg.norm(a))


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Return ``[a, b] = ab - ba``."""
    return a @ b - b @ a


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    return a.conj().T


def kronecker(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """Kronecker product ``a (x) b``; dimensions multiply."""
    return np.kron(as_matrix(a, square=False, name="A"),
                   as_matrix(b, square=False, name="B"))


def matrix_polynomial(a: ComplexMatrix,
                      coefficients: Sequence[complex]) -> ComplexMatrix:
    """Evaluate ``sum_k coefficients[k] * a**k`` by Horner's rule.

    Args:
        a: Square matrix.
        coefficients: Ascending coefficients, ``coefficients[0]`` is the
            constant term.

    Returns:
        The matrix polynomial; the zero matrix for an empty sequence.
    """
    a = as_matrix(a)
    eye: ComplexMatrix = identity(a.shape[0])
    result: ComplexMatrix = np.zeros_like(a)
    for c in reversed(coefficients):
        result = result @ a + c * eye
    return result


def triangular_function(t: ComplexMatrix,
                        f: Callable[[NDArray[np.complex128]],
                                    NDArray[np.complex128]],
                        *, min_gap: float = 1e-8) -> ComplexMatrix:
    """Evaluate ``f(t)`` for triangular ``t`` by the Parlett recurrence.

    Args:
        t: Upper or lower triangular matrix with distinct diagonal.
        f: Vectorised scalar function applied to the diagonal.
        min_gap: Smallest admissible distance between diagonal entries,
            relative to ``max(1, max|t_ii|)``.

    Raises:
        ShapeError: If ``t`` is not triangular.
        DomainError: If two diagonal entries are closer than ``min_gap``.
    """
    m: ComplexMatrix = as_matrix(t)
    lower: bool = not np.any(np.triu(m, 1))
    if not lower and np.any(np.tril(m, -1)):
        raise ShapeError("Parlett recurrence needs a triangular matrix")
    u: ComplexMatrix = m.T if lower else m
    n: int = u.shape[0]
    diag: NDArray[np.complex128] = np.diag(u)
    gaps: NDArray[np.float64] = np.abs(diag[:, None] - diag[None, :])
    gaps[np.diag_indices(n)] = np.inf
    reference: float = max(1.0, float(np.abs(diag).max()))
    if n > 1 and gaps.min() < min_gap * reference:
        raise DomainError("diagonal entries are not separated",
                          quantity="gap", value=float(gaps.min()))
    out: ComplexMatrix = np.diag(f(diag)).astype(np.complex128)
    for p in range(1, n):
        for i in range(n - p):
            j: int = i + p
            s: complex = u[i, j] * (out[j, j] - out[i, i])
            s += (u[i, i + 1:j] @ out[i + 1:j, j]
                  - out[i, i + 1:j] @ u[i + 1:j, j])
            out[i, j] = s / (u[j, j] - u[i, i])
    return out.T if lower else out


def is_strictly_triangular_pattern(a: ComplexMatrix) -> bool:
    """True if a row/column permutation makes ``a`` strictly triangular.

    Equivalent to a zero diagonal and an acyclic graph of nonzero
    entries; sources are peeled off until nothing or a cycle remains.
    """
    pattern: NDArray[np.bool_] = a != 0
    if np.any(np.diag(pattern)):
        return False
    remaining: NDArray[np.bool_] = np.ones(a.shape[0], dtype=bool)
    while remaining.any():
        alive: NDArray[np.intp] = np.flatnonzero(remaining)
        sources: NDArray[np.bool_] = ~pattern[np.ix_(alive, alive)].any(
            axis=0)
        if not sources.any():
            return False
        remaining[alive[sources]] = False
    return True


def is_nilpotent(a: ComplexMatrix) -> bool:
    """Return True if ``a`` is nilpotent with an exactly vanishing power.

    The structural test covers every permuted strictly triangular
    matrix; anything else qualifies only when ``a^d`` is exactly zero in
    floating point.
    """
    if is_strictly_triangular_pattern(a):
        return True
    if abs(np.trace(a)) > 0.0:
        return False
    return not np.any(np.linalg.matrix_power(a, a.shape[0]))


def matrix_exponential(a: ArrayLike) -> ComplexMatrix:
    """Compute ``e^a``.

    Nilpotent inputs get the exact truncated series of at most ``d``
    terms; diagonal inputs are exponentiated entrywise; everything else
    goes through scaling and squaring with a degree-13 Pade approximant.

    Raises:
        ShapeError: If ``a`` is not square.
    """
    m: ComplexMatrix = as_matrix(a)
    n: int = m.shape[0]
    if is_nilpotent(m):
        term: ComplexMatrix = identity(n)
        result: ComplexMatrix = identity(n)
        for k in range(1, n):
            term = term @ m / k
            if not np.any(term):
                break
            result = result + term
        return result
    if not np.any(m - np.diag(np.diag(m))):
        return np.diag(np.exp(np.diag(m)))

    norm1: float = float(np.linalg.norm(m, 1))
    squarings: int = max(0, ceil(log2(norm1 / THETA13))) if norm1 else 0
    scaled: ComplexMatrix = m / 2.0**squarings
    b: Tuple[float, ...] = PADE13
    eye: ComplexMatrix = identity(n)
    a2: ComplexMatrix = scaled @ scaled
    a4: ComplexMatrix = a2 @ a2
    a6: ComplexMatrix = a4 @ a2
    u: ComplexMatrix = scaled @ (
        a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
        + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * eye)
    v: ComplexMatrix = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
                        + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * eye)
    result = np.linalg.solve(v - u, v + u)
    for _ in range(squarings):
        result = result @ result
    logger.debug("expm: pade13 with %d squarings (||A||_1=%.3g)",
                 squarings, norm1)
    return result


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenpairs of a square matrix sorted by (real, imaginary) part.

    Attributes:
        values: Eigenvalues, multiplicity counted.
        right_vectors: Unit-norm right eigenvectors as columns.
        left_vectors: Unit-norm eigenvectors of ``A^H`` as columns, paired
            with ``values`` by conjugation, or None if not requested.
        residuals: ``||A v_k - values[k] v_k||`` for each pair.
    """

    values: NDArray[np.complex128]
    right_vectors: ComplexMatrix
    left_vectors: Optional[ComplexMatrix]
    residuals: NDArray[np.float64]


def _balance(a: ComplexMatrix) -> Tuple[ComplexMatrix, NDArray[np.float64]]:
    """Diagonally scale ``a`` so row and column norms are comparable.

    Returns ``(D^-1 a D, diag(D))`` with powers of two on the diagonal.
    """
    b: ComplexMatrix = a.copy()
    n: int = b.shape[0]
    scale: NDArray[np.float64] = np.ones(n)
    radix: float = 2.0
    sqrdx: float = radix * radix
    done: bool = False
    while not done:
        done = True
        for i in range(n):
            c: float = float(np.sum(np.abs(b[:, i])) - abs(b[i, i]))
            r: float = float(np.sum(np.abs(b[i, :])) - abs(b[i, i]))
            if c == 0.0 or r == 0.0:
                continue
            total: float = c + r
            f: float = 1.0
            g: float = r / radix
            while c < g:
                f *= radix
                c *= sqrdx
            g = r * radix
            while c > g:
                f /= radix
                c /= sqrdx
            if (c + r) / f < 0.95 * total:
                done = False
                scale[i] *= f
                b[i, :] /= f
                b[:, i] *= f
    return b, scale


def _hessenberg(a: ComplexMatrix) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Householder reduction ``a = Q H Q^H`` with H upper Hessenberg."""
    h: ComplexMatrix = a.copy()
    n: int = h.shape[0]
    q: ComplexMatrix = identity(n)
    for k in range(n - 2):
        x: ComplexMatrix = h[k + 1:, k].copy()
        alpha: float = float(np.linalg.norm(x))
        if not np.any(x[1:]):
            continue
        phase: complex = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v: ComplexMatrix = x
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1:, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, :])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        q[:, k + 1:] -= 2.0 * np.outer(q[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h, q


def _givens(a: complex, b: complex) -> Tuple[float, complex]:
    """Return ``(c, s)`` with ``[[c, s], [-conj(s), c]] @ [a, b] = [r, 0]``."""
    if b == 0:
        return 1.0, 0.0
    if a == 0:
        return 0.0, np.conj(b) / abs(b)
    r: float = float(np.hypot(abs(a), abs(b)))
    return abs(a) / r, (a / abs(a)) * np.conj(b) / r


def _wilkinson_shift(h: ComplexMatrix, hi: int) -> complex:
    a: complex = h[hi - 1, hi - 1]
    b: complex = h[hi - 1, hi]
    c: complex = h[hi, hi - 1]
    d: complex = h[hi, hi]
    half: complex = (a - d) / 2.0
    root: complex = np.sqrt(half * half + b * c)
    mean: complex = (a + d) / 2.0
    mu1: complex = mean + root
    mu2: complex = mean - root
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def _schur(h: ComplexMatrix, z: ComplexMatrix,
           tol: Tolerances) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Shifted QR iteration turning Hessenberg ``h`` into triangular form.

    ``z`` accumulates the unitary similarity. Both arrays are updated in
    place and returned.

    Raises:
        ConvergenceError: After ``tol.max_iter_factor * n`` sweeps.
    """
    n: int = h.shape[0]
    max_iter: int = tol.max_iter_factor * n
    total: int = 0
    its: int = 0
    hi: int = n - 1
    fallback: float = frobenius(h) or 1.0
    while hi > 0:
        low: int = hi
        while low > 0:
            s: float = abs(h[low - 1, low - 1]) + abs(h[low, low])
            if abs(h[low, low - 1]) <= EPS * (s or fallback):
                h[low, low - 1] = 0.0
                break
            low -= 1
        if low == hi:
            hi -= 1
            its = 0
            continue
        if total >= max_iter:
            raise ConvergenceError(
                f"QR iteration did not converge after {total} sweeps "
                f"(n={n}, active window {low}..{hi})",
                iterations=total,
                dimension=n,
            )
        total += 1
        its += 1
        if its in (10, 20):
            sigma: complex = h[hi, hi] + abs(h[hi, hi - 1].real)
            if hi - 2 >= low:
                sigma += abs(h[hi - 1, hi - 2].real)
        else:
            sigma = _wilkinson_shift(h, hi)

        window: range = range(low, hi + 1)
        for k in window:
            h[k, k] -= sigma
        rotations: list[Tuple[float, complex]] = []
        for k in range(low, hi):
            c, s = _givens(h[k, k], h[k + 1, k])
            row_k: ComplexMatrix = h[k, k:].copy()
            row_k1: ComplexMatrix = h[k + 1, k:].copy()
            h[k, k:] = c * row_k + s * row_k1
            h[k + 1, k:] = -np.conj(s) * row_k + c * row_k1
            h[k + 1, k] = 0.0
            rotations.append((c, s))
        for k, (c, s) in zip(range(low, hi), rotations):
            col_k: ComplexMatrix = h[:k + 2, k].copy()
            col_k1: ComplexMatrix = h[:k + 2, k + 1].copy()
            h[:k + 2, k] = c * col_k + np.conj(s) * col_k1
            h[:k + 2, k + 1] = -s * col_k + c * col_k1
            zk: ComplexMatrix = z[:, k].copy()
            zk1: ComplexMatrix = z[:, k + 1].copy()
            z[:, k] = c * zk + np.conj(s) * zk1
            z[:, k + 1] = -s * zk + c * zk1
        for k in window:
            h[k, k] += sigma
    logger.debug("schur: n=%d converged after %d sweeps", n, total)
    return h, z


def _triangular_right(t: ComplexMatrix, k: int, smin: float) -> ComplexMatrix:
    """Eigenvector of upper-triangular ``t`` for ``t[k, k]``."""
    n: int = t.shape[0]
    lam: complex = t[k, k]
    x: ComplexMatrix = np.zeros(n, dtype=np.complex128)
    x[k] = 1.0
    for i in range(k - 1, -1, -1):
        denom: complex = t[i, i] - lam
        if abs(denom) < smin:
            denom = smin
        x[i] = -(t[i, i + 1:k + 1] @ x[i + 1:k + 1]) / denom
    return x


def _triangular_left(t: ComplexMatrix, k: int, smin: float) -> ComplexMatrix:
    """Row vector ``u`` with ``u @ t = t[k, k] * u``."""
    n: int = t.shape[0]
    lam: complex = t[k, k]
    u: ComplexMatrix = np.zeros(n, dtype=np.complex128)
    u[k] = 1.0
    for j in range(k + 1, n):
        denom: complex = t[j, j] - lam
        if abs(denom) < smin:
            denom = smin
        u[j] = -(u[k:j] @ t[k:j, j]) / denom
    return u


def _unit_columns(v: ComplexMatrix) -> ComplexMatrix:
    norms: NDArray[np.float64] = np.linalg.norm(v, axis=0)
    norms[norms == 0.0] = 1.0
    return v / norms


def _inverse_iteration(a: ComplexMatrix, lam: complex, start: ComplexMatrix,
                       shift: float, steps: int = 2) -> ComplexMatrix:
    """Refine ``start`` towards the eigenvector of ``a`` for ``lam``.

    Solves with ``a - (lam + shift) I`` and keeps the phase of ``start``.
    The start vector is returned when no step lowers the residual.
    """
    shifted: ComplexMatrix = a - (lam + shift) * identity(a.shape[0])
    best: ComplexMatrix = start / (np.linalg.norm(start) or 1.0)
    best_residual: float = float(np.linalg.norm(a @ best - lam * best))
    x: ComplexMatrix = best
    for _ in range(steps):
        try:
            y: ComplexMatrix = np.linalg.solve(shifted, x)
        except np.linalg.LinAlgError:
            break
        norm: float = float(np.linalg.norm(y))
        if not np.isfinite(norm) or norm == 0.0:
            break
        overlap: complex = complex(np.vdot(start, y))
        if overlap:
            y = y * (abs(overlap) / overlap)
        x = y / norm
        residual: float = float(np.linalg.norm(a @ x - lam * x))
        if residual < best_residual:
            best, best_residual = x, residual
    return best


def _polish(a: ComplexMatrix, values: NDArray[np.complex128],
            right: ComplexMatrix, left: Optional[ComplexMatrix],
            tol: Tolerances) -> None:
    """Inverse iteration for every isolated eigenvalue, in place.

    Clustered eigenvalues keep their substitution vectors.
    """
    n: int = a.shape[0]
    if n == 1:
        return
    gaps: NDArray[np.float64] = np.abs(values[:, None] - values[None, :])
    gaps[np.diag_indices(n)] = np.inf
    radius: float = tol.cluster * max(1.0, float(np.abs(values).max()))
    shift: float = 16 * EPS * max(frobenius(a), 1.0)
    adjoint: ComplexMatrix = dagger(a)
    for k in np.flatnonzero(gaps.min(axis=1) > radius):
        right[:, k] = _inverse_iteration(a, values[k], right[:, k], shift)
        if left is not None:
            left[:, k] = _inverse_iteration(adjoint, np.conj(values[k]),
                                            left[:, k], shift)


def eigen_decompose(a: ArrayLike, want_left: bool = False,
                    tol: Tolerances = DEFAULT_TOLERANCES
                    ) -> EigenDecomposition:
    """Full eigendecomposition of a general complex matrix.

    Balancing, Householder reduction to Hessenberg form and shifted QR
    iteration give a Schur form ``T``. Back substitution (right) and
    forward substitution (left) on ``T`` give starting vectors that
    inverse iteration on ``a`` then refines for each isolated eigenvalue.

    Args:
        a: Square matrix with dimension at most ``tol.max_dim``.
        want_left: Also compute eigenvectors of ``a^H``.
        tol: Tolerance record.

    Returns:
        An :class:`EigenDecomposition` sorted by (real, imaginary) part.

    Raises:
        ShapeError: For non-square or oversized input.
        ConvergenceError: If the QR iteration stalls.
    """
    m: ComplexMatrix = as_matrix(a)
    n: int = m.shape[0]
    if n > tol.max_dim:
        raise ShapeError(f"dimension {n} exceeds max_dim={tol.max_dim}")

    balanced, scale = _balance(m)
    h, q = _hessenberg(balanced)
    t, z = _schur(h, q, tol)
    t = np.triu(t)
    values: NDArray[np.complex128] = np.diag(t).copy()

    smin: float = max(EPS * frobenius(t), np.finfo(np.float64).tiny)
    right: ComplexMatrix = np.empty((n, n), dtype=np.complex128)
    for k in range(n):
        right[:, k] = _triangular_right(t, k, smin)
    right = _unit_columns(scale[:, None] * (z @ right))

    left: Optional[ComplexMatrix] = None
    if want_left:
        rows: ComplexMatrix = np.empty((n, n), dtype=np.complex128)
        for k in range(n):
            rows[k, :] = _triangular_left(t, k, smin)
        left = _unit_columns((z @ rows.conj().T) / scale[:, None])
    _polish(m, values, right, left, tol)

    order: NDArray[np.intp] = np.lexsort((values.imag, values.real))
    values = values[order]
    right = right[:, order]
    if left is not None:
        left = left[:, order]
    residuals: NDArray[np.float64] = np.linalg.norm(
        m @ right - right * values[None, :], axis=0)
    bound: float = tol.eig * max(frobenius(m), 1.0)
    if np.any(residuals > bound):
        logger.warning("eigen_decompose: max residual %.3g exceeds %.3g "
                       "(defective or ill-conditioned input)",
                       float(residuals.max()), bound)
    return EigenDecomposition(values=values,
                              right_vectors=right,
                              left_vectors=left,
                              residuals=residuals)


def eigenvalues(a: ArrayLike,
                tol: Tolerances = DEFAULT_TOLERANCES
                ) -> NDArray[np.complex128]:
    """Sorted eigenvalues of ``a``; shorthand for ``eigen_decompose``."""
    return eigen_decompose(a, tol=tol).values


def sort_spectrum(values: Iterable[complex]) -> NDArray[np.complex128]:
    """Sort complex values by (real, imaginary) part."""
    arr: NDArray[np.complex128] = np.asarray(list(values),
                                             dtype=np.complex128)
    return arr[np.lexsort((arr.imag, arr.real))]


def hermitian_sqrt(s: ArrayLike,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexMatrix:
    """Positive-definite square root of a Hermitian matrix.

    Raises:
        NotHermitianError: If ``||S - S^H|| > tol.herm * ||S||``.
        NotPositiveDefiniteError: If an eigenvalue is not positive; the
            exception carries the smallest eigenvalue.
    """
    m: ComplexMatrix = as_matrix(s, name="S")
    norm: float = frobenius(m)
    if frobenius(m - dagger(m)) > tol.herm * max(norm, 1.0):
        raise NotHermitianError("S is not Hermitian")
    w, v = np.linalg.eigh((m + dagger(m)) / 2.0)
    if w[0] <= 0.0:
        raise NotPositiveDefiniteError(
            f"S has non-positive eigenvalue {w[0]!r}",
            eigenvalue=float(w[0]))
    root: ComplexMatrix = (v * np.sqrt(w)[None, :]) @ dagger(v)
    return root


def is_positive_definite(s: ComplexMatrix) -> bool:
    """True for a Hermitian matrix whose smallest eigenvalue is positive."""
    w: NDArray[np.float64] = np.linalg.eigvalsh((s + dagger(s)) / 2.0)
    return bool(w[0] > 0.0)


def singular_values(a: ComplexMatrix) -> NDArray[np.float64]:
    return np.linalg.svd(a, compute_uv=False)


def matrix_rank(a: ComplexMatrix,
                tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Numerical rank with cutoff ``tol.rank * sigma_max``."""
    sv: NDArray[np.float64] = singular_values(as_matrix(a, square=False))
    if sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tol.rank * sv[0]))


@dataclass(frozen=True)
class PolynomialCoefficients:
    """Monic polynomial ``x^n + c[n-1] x^(n-1) + ... + c[0]``.

    Attributes:
        coefficients: ``(c[0], ..., c[n-1])``; the leading 1 is implicit.
    """

    coefficients: Tuple[complex, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @classmethod
    def from_ascending(cls,
                       coefficients: Sequence[complex]
                       ) -> PolynomialCoefficients:
        """Build from ``(a[0], ..., a[n])`` by dividing through ``a[n]``.

        Raises:
            DomainError: If the leading coefficient is zero.
        """
        if not coefficients or coefficients[-1] == 0:
            raise DomainError("leading coefficient must be non-zero",
                              quantity="leading",
                              value=coefficients[-1] if coefficients else 0)
        lead: complex = coefficients[-1]
        return cls(tuple(c / lead for c in coefficients[:-1]))

    def __call__(self, x: complex) -> complex:
        value: complex = 1.0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value


def companion_matrix(p: PolynomialCoefficients) -> ComplexMatrix:
    """Companion matrix whose characteristic polynomial is ``p``."""
    n: int = p.degree
    mat: ComplexMatrix = np.eye(n, k=-1, dtype=np.complex128)
    mat[:, -1] = -np.asarray(p.coefficients, dtype=np.complex128)
    return mat


def polynomial_roots(p: PolynomialCoefficients,
                     tol: Tolerances = DEFAULT_TOLERANCES
                     ) -> NDArray[np.complex128]:
    """All roots of a monic polynomial, sorted by (real, imaginary) part.

    Multiple roots are conditioned like ``eps**(1/multiplicity)``.

    Raises:
        DomainError: For a degree-zero polynomial.
    """
    if p.degree < 1:
        raise DomainError("polynomial must have degree >= 1",
                          quantity="degree", value=p.degree)
    return eigen_decompose(companion_matrix(p), tol=tol).values


def characteristic_polynomial(a: ArrayLike) -> PolynomialCoefficients:
    """Faddeev-LeVerrier coefficients of ``det(x I - a)``."""
    m: ComplexMatrix = as_matrix(a)
    n: int = m.shape[0]
    eye: ComplexMatrix = identity(n)
    coeffs: list[complex] = [0j] * n
    aux: ComplexMatrix = np.zeros_like(m)
    c_prev: complex = 1.0
    for k in range(1, n + 1):
        aux = m @ aux + c_prev * eye
        c_prev = -np.trace(m @ aux) / k
        coeffs[n - k] = complex(c_prev)
    return PolynomialCoefficients(tuple(coeffs))
