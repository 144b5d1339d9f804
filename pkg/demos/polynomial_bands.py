"""Sine and cosine bands of ``mu- J- + p(J0)``.

Run
  python -m demos.polynomial_bands
"""

from __future__ import annotations

import numpy as np

from uzspectra.linalg import eigenvalues
from uzspectra.reps import RepSpec, build_deformed_generators
from uzspectra.spectra import (
    PolyHamiltonianSpec,
    analytic_spectrum_polynomial,
    band_gaps,
    baseline_spec,
    build_polynomial_H,
    cos_spec,
    sin_spec,
)

DIM: int = 6


def levels(spec: PolyHamiltonianSpec, z: float) -> None:
    analytic = analytic_spectrum_polynomial(spec, DIM, z).eigenvalues
    numeric = eigenvalues(
        build_polynomial_H(spec, build_deformed_generators(
            RepSpec.irrep(DIM, z))))
    gap: float = float(np.abs(np.sort(numeric.real)
                              - np.sort(analytic.real)).max())
    print(f"  {spec.label:8s} z={z}: {np.round(analytic.real, 4)}"
          f"  (eigensolver agrees to {gap:.1e})")


if __name__ == "__main__":
    for z in (0.0, 0.5, 1.0):
        levels(sin_spec(1.0, 1.0, DIM), z)
        levels(cos_spec(1.0, 1.0, DIM), z)
        levels(baseline_spec(1.0), z)
    print("sine gaps:", band_gaps(sin_spec(1.0, 1.0, DIM), DIM))
