"""
Bundled demo problems.

Each demo is a small problem with a known closed-form answer. All of
them verify cleanly except "negative-control", which injects 0.01 zbar
into w- and must be flagged.
"""

from typing import Callable, Dict, List

from .bicomplex import ONE
from .boundary import BicomplexBoundaryData, BoundaryFourierData
from .operators import PolynomialSource
from .polynomial import ComplexPolynomial
from .problem import ProblemSpec
from .solvers import DirichletSpec, SchwarzSpec

# small truncation keeps finite-difference residuals of the delta field well resolved
DEMO_DELTA_K = 8


def dirichlet_e_it() -> ProblemSpec:
    """w = g = e^{it} on the circle; the solution is z in both components."""
    g = BoundaryFourierData.exponential(1)
    return ProblemSpec("dirichlet", DirichletSpec(BicomplexBoundaryData(g, g)), name="dirichlet-e_it")


def schwarz_homog_cos() -> ProblemSpec:
    """Re w = cos t, Im w(0) = 0; w = p+ zbar + p- z."""
    b = BoundaryFourierData.cosine(1)
    return ProblemSpec("schwarz", SchwarzSpec.first_order(b, b), name="schwarz-homog-cos")


def schwarz_nonhomog_const() -> ProblemSpec:
    """dbar w = 1 with zero data; w = p+ (z - zbar) + p- (zbar - z)."""
    zero = BoundaryFourierData.zero()
    spec = SchwarzSpec.first_order(zero, zero, source=PolynomialSource.constant(ONE))
    return ProblemSpec("schwarz", spec, name="schwarz-nonhomog-const")


def schwarz_dist_delta() -> ProblemSpec:
    """Dirac data at t = 0; w- is the truncated Schwarz kernel over 2 pi."""
    delta = BoundaryFourierData.dirac(0.0, DEMO_DELTA_K)
    return ProblemSpec("schwarz", SchwarzSpec.first_order(delta, delta), name="schwarz-dist-delta")


def schwarz_order2() -> ProblemSpec:
    """dbar^2 w = 1 with Re w = cos t, Re dbar w = 1 and nonzero origin constants."""
    cos = BoundaryFourierData.cosine(1)
    one = BoundaryFourierData.constant(1.0)
    spec = SchwarzSpec(
        2,
        (cos, one),
        (cos, one),
        c_plus=(0.5, -0.25),
        c_minus=(-1.0, 0.75),
        source=PolynomialSource.constant(ONE),
    )
    return ProblemSpec("schwarz", spec, name="schwarz-order2")


def negative_control() -> ProblemSpec:
    """schwarz-homog-cos with 0.01 zbar added to w-; verification must fail."""
    base = schwarz_homog_cos()
    inject = (ComplexPolynomial(), ComplexPolynomial({(0, 1): 0.01}))
    return ProblemSpec("schwarz", base.spec, inject=inject, name="negative-control")


DEMOS: Dict[str, Callable[[], ProblemSpec]] = {
    "dirichlet-e_it": dirichlet_e_it,
    "schwarz-homog-cos": schwarz_homog_cos,
    "schwarz-nonhomog-const": schwarz_nonhomog_const,
    "schwarz-dist-delta": schwarz_dist_delta,
    "schwarz-order2": schwarz_order2,
    "negative-control": negative_control,
}

# demos expected to fail verification
EXPECTED_FAILURES = {"negative-control"}


def available_demos() -> List[str]:
    return list(DEMOS.keys())


def get_demo(name: str) -> ProblemSpec:
    """
    Build a demo problem by name.

    Raises:
        ValueError: unknown demo name
    """
    factory = DEMOS.get(name)
    if factory is None:
        raise ValueError(f"Unknown demo: {name}. Available: {available_demos()}")
    return factory()
