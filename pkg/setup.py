"""Setup script."""
from pathlib import Path

from setuptools import find_packages, setup


def _get_long_description():
    with open(str(Path(__file__).parent / "README.md"), "r") as f:
        return f.read()


def _get_version():
    with open(str(Path(__file__).parent / "cpslattice/version.py"), "r") as f:
        for line in f:
            if line.startswith("__version__"):
                delimeter = '"' if '"' in line else "'"
                return line.split(delimeter)[1]
    raise RuntimeError("Cannot read version string.")


VERSION = _get_version()

setup(
    name="cpslattice",
    version=VERSION,
    description=(
        "Formal concept analysis of cyber-physical systems for redundancy "
        "and resiliency"
    ),
    long_description=_get_long_description(),
    long_description_content_type="text/markdown",
    license="MIT",
    keywords=[
        "formal-concept-analysis",
        "cyber-physical-systems",
        "resilience",
    ],
    packages=find_packages(
        include=["cpslattice", "cpslattice.*"], exclude=["tests"]
    ),
    install_requires=[
        "numpy>=1.17",
        "networkx>=2.5",
        "jsonschema>=3.2",
        "matplotlib>=1.5",
    ],
    extras_require={
        "test": ["pytest>=6.0", "pytest-cov>=2.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["cps-lattice=cpslattice.cli:main"],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering",
    ],
    python_requires=">=3.7",
)
