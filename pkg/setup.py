"""
bicbound - bicomplex boundary value problems on the unit disk

Setup script for installation.
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="bicbound",
    version="1.0.0",
    author="bicbound developers",
    description="Bicomplex Schwarz and Dirichlet boundary value problems on the unit disk",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["bicbound", "bicbound.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="bicomplex, schwarz problem, dirichlet problem, quadrature",
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.17",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0",
            "pytest-cov>=2.0",
            "black>=22.0",
            "mypy>=0.9",
        ],
    },
    entry_points={
        "console_scripts": ["bicbound=bicbound.cli:main"],
    },
)
