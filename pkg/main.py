#!/usr/bin/env python3
"""uzspectra showcase.

Highlights:
- Deformed generators on the two-dimensional irrep
- Commutation relations, Casimir and Hopf checks
- Linear Hamiltonian spectrum and its metric
- Three-parameter family: PT phase map and exceptional points
- Sine bands and their z-independent gaps
- Double quantum dot: exact against approximate levels

Requires: `pip install uzspectra`
"""

from __future__ import annotations

from math import sin, sqrt
from typing import Dict, List

import numpy as np
from numpy.typing import NDArray

from uzspectra import (
    FamilyParams,
    GeneratorTriple,
    QdotParams,
    RepSpec,
    analytic_spectrum_family,
    build_deformed_generators,
    classify_phase_and_scan,
    sweep_compare,
    verify_commutation,
    verify_hopf_axioms,
)
from uzspectra.linalg import eigenvalues
from uzspectra.qdot import approx_eigenvalues, build_Heff
from uzspectra.reps import casimir_matrix, casimir_value
from uzspectra.similarity import biorthogonal_system, linear_hermitian_d2
from uzspectra.spectra import (
    band_gaps,
    build_linear_H,
    linear_spectrum_d2,
    sin_spec,
)


# ---------- simple styling ---------- #
class C:
    R: str = "\033[31m"
    G: str = "\033[32m"
    Y: str = "\033[33m"
    C: str = "\033[36m"
    DIM: str = "\033[2m"
    BOLD: str = "\033[1m"
    RESET: str = "\033[0m"


def title(text: str) -> None:
    bar: str = "═" * (len(text) + 2)
    print(f"\n{C.C}╔{bar}╗{C.RESET}")
    print(f"{C.C}║ {C.BOLD}{text}{C.RESET}{C.C} ║{C.RESET}")
    print(f"{C.C}╚{bar}╝{C.RESET}")


def show(label: str, got: object, expected: object | None = None,
         close: bool = False) -> None:
    if expected is None:
        ok: bool = True
    elif close:
        ok = bool(np.allclose(got, expected, atol=1e-8))  # type: ignore
    else:
        ok = got == expected
    mark: str = f"{C.G}✓{C.RESET}" if ok else f"{C.R}✗{C.RESET}"
    exp: str = ("" if expected is None else
                f"{C.DIM} (expected {expected}){C.RESET}")
    print(f" {mark} {C.BOLD}{label}{C.RESET}: {got}{exp}")


def _fmt(values: NDArray[np.complex128]) -> str:
    return "[" + ", ".join(f"{v.real:+.4f}{v.imag:+.4f}i"
                           for v in values) + "]"


def _generators() -> None:
    title("1) Deformed Generators (d = 2, z = 0.7)")
    triple: GeneratorTriple = build_deformed_generators(RepSpec.irrep(2, 0.7))
    for name, x in triple.by_name().items():
        print(f"   {name} = {np.round(x, 4).tolist()}")
    show("relations hold", verify_commutation(triple).passed, True)
    c: NDArray[np.complex128] = casimir_matrix(triple)
    show("Casimir = beta(beta/2 - 1)", round(c[0, 0].real, 12),
         casimir_value(-1.0))


def _hopf() -> None:
    title("2) Hopf Structure")
    for dim in (2, 3):
        triple: GeneratorTriple = build_deformed_generators(
            RepSpec.irrep(dim, 0.5))
        report = verify_hopf_axioms(triple)
        show(f"d={dim}: {len(report.checks)} identities", report.passed,
             True)


def _linear() -> None:
    title("3) Linear Hamiltonian mu J- + J+")
    for mu in (2.0, -2.0):
        h: NDArray[np.complex128] = build_linear_H(
            mu, build_deformed_generators(RepSpec.irrep(2, 0.5)))
        show(f"mu={mu:+}: eigenvalues", _fmt(eigenvalues(h)))
        show("  closed form mu z/2 +- sqrt(mu)",
             _fmt(linear_spectrum_d2(mu, 0.5)))
        system = biorthogonal_system(h)
        show("  metric positive definite", system.positive_definite,
             mu > 0)
    partner: NDArray[np.complex128] = linear_hermitian_d2(2.0, 0.5)
    show("Hermitian partner is Hermitian",
         bool(np.allclose(partner, partner.conj().T)), True)


def _family() -> None:
    title("4) PT Phase Map of h_-(mu=1, nu)")
    nus: NDArray[np.float64] = np.linspace(-3.0, 3.0, 13)
    grid: List[FamilyParams] = [FamilyParams.h_minus(1.0, nu) for nu in nus]
    scan = classify_phase_and_scan(grid, dim=3, z=0.5)
    for nu, phase in zip(nus, scan.phases()):
        print(f"   nu={nu:+.1f}  {phase.value}")
    located: List[float] = [ep.params.mu_0 for ep in scan.ep_locus]
    show("EPs located at nu", [round(v, 9) for v in located],
         [round(-sqrt(2), 9), round(sqrt(2), 9)])
    at_ep = analytic_spectrum_family(FamilyParams.h_minus(1.0, sqrt(2)),
                                     3, 0.5)
    show("spectrum at the EP", _fmt(at_ep.eigenvalues))


def _bands() -> None:
    title("5) Sine Bands (d = 6, lambda = 1)")
    gaps: Dict[int, float] = band_gaps(sin_spec(1.0, 1.0, 6), 6)
    for k, gap in gaps.items():
        show(f"gap of +-{k}", round(gap, 10), round(2 * sin(k), 10))


def _qdot() -> None:
    title("6) Double Quantum Dot")
    params: QdotParams = QdotParams()
    levels: Dict[str, float] = approx_eigenvalues(params)
    show("E1+ at eps=0", round(levels["E1+"], 10),
         round((3 + sqrt(538)) / 2, 10))
    for spectrum in sweep_compare(params, [-50.0, 50.0, 300.0]):
        print(f"   eps={spectrum.epsilon:+7.1f}  max deviation "
              f"{spectrum.deviations.max():.2e}")
    heff: NDArray[np.complex128] = build_Heff(params.at(20.0))
    approx: List[float] = sorted(approx_eigenvalues(params.at(20.0)).values())
    show("H_eff reproduces E1+-, E2+- at eps=20",
         np.sort(eigenvalues(heff).real), np.asarray(approx), close=True)


def main() -> None:
    _generators()
    _hopf()
    _linear()
    _family()
    _bands()
    _qdot()
    print(f"\n{C.DIM}Done. All green checks mean the identity held as "
          f"expected.{C.RESET}\n")


if __name__ == "__main__":
    main()
