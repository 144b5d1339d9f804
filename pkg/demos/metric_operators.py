"""Metric operators and Hermitian partners of ``mu J- + J+``.

Run
  python -m demos.metric_operators
"""

from __future__ import annotations

import numpy as np

from uzspectra.errors import NotHermitianError
from uzspectra.reps import RepSpec, build_deformed_generators
from uzspectra.similarity import (
    BiorthogonalSystem,
    biorthogonal_system,
    hermitize,
    linear_hermitian_d2,
)
from uzspectra.spectra import build_linear_H


def describe(mu: float, dim: int, z: float) -> None:
    h = build_linear_H(mu, build_deformed_generators(RepSpec.irrep(dim, z)))
    system: BiorthogonalSystem = biorthogonal_system(h)
    print(f"mu={mu:+}, d={dim}, z={z}: positive={system.positive_definite} "
          f"pseudo-Hermitian={system.pseudo_hermitian} "
          f"cond={system.condition:.2e}")
    try:
        partner = hermitize(h, system)
    except NotHermitianError as exc:
        print(f"  no Hermitian partner: {exc}")
        return
    print(f"  partner eigenvalues {np.round(np.linalg.eigvalsh(partner), 6)}")


if __name__ == "__main__":
    for mu in (1.5, -1.5):
        describe(mu, 2, 0.8)
        describe(mu, 4, 0.3)
    print("closed form, mu=2, z=0.5:")
    print(np.round(linear_hermitian_d2(2.0, 0.5), 6))
