from pathlib import Path
from sys import modules, path
from types import ModuleType
from typing import Callable

import numpy as np
import pytest
from numpy.typing import NDArray

# Ensure local src/ is imported before any installed package
REPO_ROOT: Path = Path(__file__).resolve().parents[1]
SRC_PATH: Path = REPO_ROOT / "src"
if str(SRC_PATH) not in path:
    path.insert(0, str(SRC_PATH))

# Drop an installed copy imported earlier so the local one wins
if "uzspectra" in modules:
    mod: ModuleType = modules["uzspectra"]
    mod_file: str = getattr(mod, "__file__", "")
    if "site-packages" in str(mod_file):
        del modules["uzspectra"]

from uzspectra.reps import (  # noqa: E402
    GeneratorTriple,
    RepSpec,
    build_deformed_generators,
)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so random matrices are reproducible."""
    return np.random.default_rng(20240917)


@pytest.fixture
def triple_d2() -> GeneratorTriple:
    """Two-dimensional deformed irrep at ``z = 0.7``."""
    return build_deformed_generators(RepSpec.irrep(2, 0.7))


@pytest.fixture
def complex_matrix(
        rng: np.random.Generator) -> Callable[[int], NDArray[np.complex128]]:
    """Factory of dense ``n x n`` complex matrices, normal entries."""

    def make(n: int) -> NDArray[np.complex128]:
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))

    return make
