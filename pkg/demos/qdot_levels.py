"""Double-quantum-dot levels: exact, approximate and effective.

Run
  python -m demos.qdot_levels
"""

from __future__ import annotations

from typing import Dict, List, Tuple

import numpy as np

from uzspectra.errors import DomainError
from uzspectra.qdot import (
    AvoidedCrossing,
    QdotParams,
    avoided_crossings,
    block_diagonalize,
    decoupled_target,
    sweep_compare,
)

PARAMS: QdotParams = QdotParams()


def table(grid: List[float]) -> None:
    """Print exact and approximate levels side by side."""
    for s in sweep_compare(PARAMS, grid, with_effective=True):
        eff: str = ("-" if s.effective is None else
                    np.array2string(s.effective, precision=3))
        print(f"eps={s.epsilon:+8.1f} exact={np.round(s.exact, 3)} "
              f"approx={np.round(s.approx, 3)} effective={eff}")


def decoupling(eps: float) -> None:
    try:
        gap: float = float(np.abs(block_diagonalize(PARAMS.at(eps))
                                  - decoupled_target(PARAMS.at(eps))).max())
    except DomainError as exc:
        print(f"eps={eps}: {exc}")
        return
    print(f"eps={eps}: P h_eff P^-1 matches the decoupled dots to {gap:.1e}")


if __name__ == "__main__":
    table([-100.0, -20.0, 0.0, 20.0, 100.0])
    for e in (5.0, 20.0, 60.0):
        decoupling(e)
    found: Dict[Tuple[int, int], AvoidedCrossing] = avoided_crossings(
        PARAMS, list(np.linspace(-150.0, 150.0, 301)))
    for pair, crossing in found.items():
        print(f"levels {pair}: closest at eps={crossing.epsilon:+.1f}, "
              f"gap {crossing.gap:.3f} GHz")
