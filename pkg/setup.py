from pathlib import Path

from setuptools import find_packages, setup

# Read README if available
readme_path: Path = Path(__file__).parent / "README.md"
long_description: str = (readme_path.read_text(
    encoding="utf-8") if readme_path.exists() else "")

setup(
    name="uzspectra",
    version="0.1.0",
    author="Joao Lopes",
    author_email="joaoslopes@gmail.com",
    description=("PT-symmetric U_z(sl(2,R)) Hamiltonians: representations, "
                 "spectra, exceptional points and Hopf-algebra checks."),
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/kairos-xx/uzspectra",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.10",
    install_requires=["numpy>=1.24"],
    extras_require={
        "dev": [
            "pytest>=7",
            "hypothesis>=6.80",
            "scipy>=1.10",
            "ruff>=0.5",
            "pyright>=1.1.350",
        ],
    },
    entry_points={"console_scripts": ["uzspectra=uzspectra.cli:main"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    license="MIT",
    keywords="quantum-algebra pt-symmetry exceptional-points eigenvalues",
)
