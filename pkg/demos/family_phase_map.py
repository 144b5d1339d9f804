"""PT phase map of the three-parameter family and its exceptional points.

Run
  python -m demos.family_phase_map
"""

from __future__ import annotations

from typing import List

import numpy as np

from uzspectra.reps import RepSpec, build_deformed_generators
from uzspectra.similarity import transformed_family_H
from uzspectra.spectra import (
    FamilyParams,
    PhaseScan,
    classify_phase_and_scan,
    limit_hamiltonian_family,
)


def scan(mu: float, dim: int, z: float, sign: int = -1) -> PhaseScan:
    """Scan ``h_-`` (``sign=-1``) or ``h_+`` over ``nu`` in [-3, 3].

    Args:
      mu: Overall coupling.
      dim: Irrep dimension.
      z: Deformation.
      sign: -1 for ``h_-``, +1 for ``h_+``.
    """
    make = FamilyParams.h_minus if sign < 0 else FamilyParams.h_plus
    grid: List[FamilyParams] = [
        make(mu, float(nu)) for nu in np.linspace(-3.0, 3.0, 61)
    ]
    return classify_phase_and_scan(grid, dim, z)


def print_scan(result: PhaseScan) -> None:
    previous: str = ""
    for point in result.points:
        if point.phase.value != previous:
            print(f"  from mu0={point.params.mu_0:+.2f}: {point.phase.value}")
            previous = point.phase.value
    for ep in result.ep_locus:
        print(f"  EP at mu0={ep.params.mu_0:+.12f}")


def limit_distance(eta: float) -> float:
    """``||Upsilon H Upsilon^-1 - H_limit||`` at a finite ``eta``."""
    params: FamilyParams = FamilyParams(mu_plus=0.4, mu_minus=1.1,
                                        mu_0=0.9)
    triple = build_deformed_generators(RepSpec.irrep(3, 0.4))
    return float(np.linalg.norm(
        transformed_family_H(params, triple, eta)
        - limit_hamiltonian_family(params, triple)))


if __name__ == "__main__":
    print("h_-(mu=1), d=5, z=0.5")
    print_scan(scan(1.0, 5, 0.5))
    print("h_+(mu=1), d=5, z=0.5")
    print_scan(scan(1.0, 5, 0.5, sign=1))
    for eta in (0.5, 1.5, 3.0, 6.0):
        print(f"eta={eta}: distance to limit {limit_distance(eta):.3e}")
