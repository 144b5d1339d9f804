from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    GridPointError,
    NonFiniteError,
    NotDiagonalizableError,
    NotHermitianError,
    NotPositiveDefiniteError,
    ShapeError,
    UzSpectraError,
)
from .linalg import (
    EigenDecomposition,
    PolynomialCoefficients,
    eigen_decompose,
    hermitian_sqrt,
    matrix_exponential,
    polynomial_roots,
)
from .qdot import (
    QdotParams,
    QdotSpectrum,
    build_He,
    build_Heff,
    sweep_compare,
)
from .report import Check, Report
from .reps import (
    GeneratorTriple,
    RepSpec,
    build_deformed_generators,
    build_sl2_generators,
    verify_commutation,
    verify_hopf_axioms,
)
from .spectra import (
    FamilyParams,
    Phase,
    PolyHamiltonianSpec,
    SpectrumResult,
    analytic_spectrum_family,
    build_family_H,
    classify_phase_and_scan,
)
from .sweep import SweepConfig, load_config, run
from .version import __version__

__all__ = [
    "DEFAULT_TOLERANCES",
    "Tolerances",
    "UzSpectraError",
    "ShapeError",
    "NonFiniteError",
    "ConvergenceError",
    "NotHermitianError",
    "NotPositiveDefiniteError",
    "NotDiagonalizableError",
    "DomainError",
    "ConfigError",
    "GridPointError",
    "EigenDecomposition",
    "PolynomialCoefficients",
    "eigen_decompose",
    "hermitian_sqrt",
    "matrix_exponential",
    "polynomial_roots",
    "RepSpec",
    "GeneratorTriple",
    "build_sl2_generators",
    "build_deformed_generators",
    "verify_commutation",
    "verify_hopf_axioms",
    "FamilyParams",
    "Phase",
    "PolyHamiltonianSpec",
    "SpectrumResult",
    "analytic_spectrum_family",
    "build_family_H",
    "classify_phase_and_scan",
    "QdotParams",
    "QdotSpectrum",
    "build_He",
    "build_Heff",
    "sweep_compare",
    "Check",
    "Report",
    "SweepConfig",
    "load_config",
    "run",
    "__version__",
]
