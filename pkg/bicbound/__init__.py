"""
bicbound - bicomplex boundary value problems on the unit disk

Solves the bicomplex Schwarz problem (first order, with a source, with
distributional data, and of order up to three) and the bicomplex
Dirichlet problem, each by an exact spectral path and a quadrature
path, and checks every solution against its problem.

Example:
    from bicbound import BoundaryFourierData, solve_schwarz_homogeneous

    b = BoundaryFourierData.cosine(1)
    w = solve_schwarz_homogeneous(b, b)
    w(0.5j)                      # Bicomplex(0, 0.5): the field (x, y)
"""

__version__ = "1.0.0"
__author__ = "bicbound developers"

from .bicomplex import Bicomplex, P_MINUS, P_PLUS, bnorm
from .boundary import BicomplexBoundaryData, BoundaryFourierData, fourier_from_samples
from .config import Config
from .errors import (
    AliasingError,
    BicboundError,
    DomainError,
    KindError,
    NodeCollisionError,
    QuadratureError,
    SpecError,
)
from .operators import GridSource, PolynomialSource, t_bicomplex, t_complex, t_star_complex
from .polynomial import ComplexPolynomial
from .quadrature import CircleRule, DiskRule, QuadratureRules
from .solvers import (
    DirichletSpec,
    SchwarzSpec,
    SolutionField,
    solve_dirichlet,
    solve_dirichlet_distributional,
    solve_schwarz_distributional,
    solve_schwarz_higher_order,
    solve_schwarz_homogeneous,
    solve_schwarz_nonhomogeneous,
)
from .problem import ProblemSpec, load_problem, parse_problem, solve_problem
from .verification import ResidualReport, residual_report

__all__ = [
    "Bicomplex",
    "P_PLUS",
    "P_MINUS",
    "bnorm",
    "BoundaryFourierData",
    "BicomplexBoundaryData",
    "fourier_from_samples",
    "Config",
    "BicboundError",
    "DomainError",
    "KindError",
    "AliasingError",
    "QuadratureError",
    "NodeCollisionError",
    "SpecError",
    "PolynomialSource",
    "GridSource",
    "t_complex",
    "t_star_complex",
    "t_bicomplex",
    "ComplexPolynomial",
    "CircleRule",
    "DiskRule",
    "QuadratureRules",
    "SchwarzSpec",
    "DirichletSpec",
    "SolutionField",
    "solve_schwarz_homogeneous",
    "solve_schwarz_nonhomogeneous",
    "solve_schwarz_distributional",
    "solve_schwarz_higher_order",
    "solve_dirichlet",
    "solve_dirichlet_distributional",
    "ProblemSpec",
    "load_problem",
    "parse_problem",
    "solve_problem",
    "ResidualReport",
    "residual_report",
]
