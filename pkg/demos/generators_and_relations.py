"""Build deformed generators and check the algebra they satisfy.

Run
  python -m demos.generators_and_relations
"""

from __future__ import annotations

from uzspectra.report import Report
from uzspectra.reps import (
    GeneratorTriple,
    RepSpec,
    boson_realisation,
    build_deformed_generators,
    verify_casimir,
    verify_commutation,
    verify_hopf_axioms,
)


def compare_realisations(dim: int, z: float) -> float:
    """Largest entrywise gap between Fock and boson constructions.

    Args:
      dim: Irrep dimension.
      z: Deformation.

    Returns:
      ``max |J_fock - J_boson|`` over the three generators.
    """
    spec: RepSpec = RepSpec.irrep(dim, z)
    fock: GeneratorTriple = build_deformed_generators(spec)
    boson: GeneratorTriple = boson_realisation(spec)
    return max(
        float(abs(fock.by_name()[n] - boson.by_name()[n]).max())
        for n in ("J+", "J0", "J-"))


def run_suites(dim: int, z: float) -> None:
    triple: GeneratorTriple = build_deformed_generators(RepSpec.irrep(dim, z))
    reports: tuple[Report, ...] = (verify_commutation(triple),
                                   verify_casimir(triple),
                                   verify_hopf_axioms(triple))
    for report in reports:
        print(report.render())


if __name__ == "__main__":
    for d, zz in ((2, 0.7), (4, 1.0), (6, 0.1)):
        print(f"d={d} z={zz}: realisations differ by "
              f"{compare_realisations(d, zz):.2e}")
    run_suites(3, 0.5)
    # off the irrep the truncation is no longer a representation
    truncated: GeneratorTriple = build_deformed_generators(
        RepSpec(z=0.0, beta=0.5, dim=3))
    print(verify_commutation(truncated).render())
