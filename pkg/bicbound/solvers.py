"""
Solvers for the bicomplex Schwarz and Dirichlet problems on the unit disk.

Every solver returns a SolutionField. On the spectral path the field is
a pair of exact polynomials in (z, zbar) and can be evaluated anywhere in
the open disk. On the quadrature path boundary integrals use the circle
rule and area integrals the disk rule; those fields are limited to
|z| <= r_max.

Idempotent components decouple the problems: the minus component is a
complex problem for dbar, the plus component a complex problem for d,
which is solved by conjugating into a dbar problem.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .bicomplex import Bicomplex
from .boundary import DISTRIBUTION, FUNCTION, BicomplexBoundaryData, BoundaryFourierData, moment_pairing
from .errors import BicboundError, DomainError, KindError
from .operators import PolynomialSource, Source, t_bicomplex_polynomials, t_quadrature
from .polynomial import ComplexPolynomial
from .quadrature import QuadratureRules, moment_integral, poisson_integral

logger = logging.getLogger(__name__)

SPECTRAL = "spectral"
QUADRATURE = "quadrature"
PATHS = (SPECTRAL, QUADRATURE)
MAX_ORDER = 3

Component = Callable[[np.ndarray], np.ndarray]


# --- problem data ---

@dataclass(frozen=True)
class SchwarzSpec:
    """
    Data for dbar^n w = f in the disk with, for k = 0..n-1,
    Re (dbar^k w)^± = b±_k on the circle and Im (dbar^k w)^±(0) = c±_k.

    Attributes:
        n: order, 1..3
        boundary_plus: b+_0..b+_{n-1}
        boundary_minus: b-_0..b-_{n-1}
        c_plus: c+_0..c+_{n-1}
        c_minus: c-_0..c-_{n-1}
        source: polynomial or grid source, None for the homogeneous problem
    """

    n: int
    boundary_plus: Tuple[BoundaryFourierData, ...]
    boundary_minus: Tuple[BoundaryFourierData, ...]
    c_plus: Tuple[float, ...] = ()
    c_minus: Tuple[float, ...] = ()
    source: Optional[Source] = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise BicboundError(f"Order n must be in 1..{MAX_ORDER}, got {self.n}")
        object.__setattr__(self, "boundary_plus", tuple(self.boundary_plus))
        object.__setattr__(self, "boundary_minus", tuple(self.boundary_minus))
        object.__setattr__(self, "c_plus", tuple(float(c) for c in self.c_plus) or (0.0,) * self.n)
        object.__setattr__(self, "c_minus", tuple(float(c) for c in self.c_minus) or (0.0,) * self.n)
        for name in ("boundary_plus", "boundary_minus", "c_plus", "c_minus"):
            if len(getattr(self, name)) != self.n:
                raise BicboundError(f"{name} needs {self.n} entries, got {len(getattr(self, name))}")
        for b in self.boundary_plus + self.boundary_minus:
            if not b.real:
                raise BicboundError("Schwarz boundary data must be real-valued")
        kinds = sorted({b.kind for b in self.boundary_plus + self.boundary_minus})
        if len(kinds) > 1:
            raise KindError(f"Schwarz boundary data must share one kind, got {kinds}")
        if isinstance(self.source, PolynomialSource) and self.source.is_zero:
            object.__setattr__(self, "source", None)

    @classmethod
    def first_order(
        cls,
        b_plus: BoundaryFourierData,
        b_minus: BoundaryFourierData,
        c_plus: float = 0.0,
        c_minus: float = 0.0,
        source: Optional[Source] = None,
    ) -> "SchwarzSpec":
        return cls(1, (b_plus,), (b_minus,), (c_plus,), (c_minus,), source)

    @property
    def kind(self) -> str:
        return self.boundary_plus[0].kind

    @property
    def has_source(self) -> bool:
        return self.source is not None


@dataclass(frozen=True)
class DirichletSpec:
    """Data for d dbar w = 0 in the disk with w = g on the circle."""

    boundary: BicomplexBoundaryData

    @property
    def kind(self) -> str:
        return self.boundary.kind


# --- solution fields ---

@dataclass(frozen=True)
class SolutionField:
    """
    A solution of one of the boundary value problems.

    Attributes:
        plus: vectorized w+ (complex array in, complex array out)
        minus: vectorized w-
        provenance: which solver built the field
        path: "spectral" or "quadrature"
        resolution: parameters of the rules used, empty on the spectral path
        r_max: evaluation limit; below 1 it is inclusive, at 1 the disk is open
        polynomials: exact (w+, w-) when the field is a polynomial
    """

    plus: Component
    minus: Component
    provenance: str
    path: str = SPECTRAL
    resolution: Dict[str, float] = field(default_factory=dict)
    r_max: float = 1.0
    polynomials: Optional[Tuple[ComplexPolynomial, ComplexPolynomial]] = None

    @classmethod
    def from_polynomials(
        cls,
        plus: ComplexPolynomial,
        minus: ComplexPolynomial,
        provenance: str,
    ) -> "SolutionField":
        return cls(plus.evaluate, minus.evaluate, provenance, polynomials=(plus, minus))

    def check_domain(self, z) -> None:
        radius = np.abs(np.asarray(z, dtype=complex))
        if np.any(radius >= 1) or np.any(radius > self.r_max):
            limit = "|z| < 1" if self.r_max >= 1 else f"|z| <= {self.r_max}"
            raise DomainError(f"{self.provenance} field is defined for {limit}")

    def components(self, z):
        """(w+(z), w-(z)) for a scalar or an array of points."""
        self.check_domain(z)
        return self.plus(z), self.minus(z)

    def cartesian(self, z):
        """(z1, z2) components of w(z)."""
        plus, minus = self.components(z)
        return (plus + minus) / 2, 1j * (plus - minus) / 2

    def __call__(self, z: complex) -> Bicomplex:
        plus, minus = self.components(complex(z))
        return Bicomplex.from_idempotent(plus, minus)

    def __add__(self, other: "SolutionField") -> "SolutionField":
        if not isinstance(other, SolutionField):
            return NotImplemented
        polys = None
        if self.polynomials and other.polynomials:
            polys = (
                self.polynomials[0] + other.polynomials[0],
                self.polynomials[1] + other.polynomials[1],
            )
        path = QUADRATURE if QUADRATURE in (self.path, other.path) else SPECTRAL
        return SolutionField(
            plus=lambda z: self.plus(z) + other.plus(z),
            minus=lambda z: self.minus(z) + other.minus(z),
            provenance=self.provenance,
            path=path,
            resolution={**other.resolution, **self.resolution},
            r_max=min(self.r_max, other.r_max),
            polynomials=polys,
        )

    def with_offset(self, plus: ComplexPolynomial, minus: ComplexPolynomial) -> "SolutionField":
        """Add a polynomial to each component (used for negative controls)."""
        offset = SolutionField.from_polynomials(plus, minus, self.provenance)
        return self + offset


def _assemble(
    provenance: str,
    poly_plus: ComplexPolynomial,
    poly_minus: ComplexPolynomial,
    extra: List[Tuple[Component, Component]],
    rules: Optional[QuadratureRules],
) -> SolutionField:
    if not extra:
        return SolutionField.from_polynomials(poly_plus, poly_minus, provenance)

    def plus(z):
        return poly_plus.evaluate(z) + sum(part[0](z) for part in extra)

    def minus(z):
        return poly_minus.evaluate(z) + sum(part[1](z) for part in extra)

    return SolutionField(
        plus=plus,
        minus=minus,
        provenance=provenance,
        path=QUADRATURE,
        resolution=rules.describe(),
        r_max=rules.r_max,
    )


def _check_path(path: str) -> None:
    if path not in PATHS:
        raise BicboundError(f"Unknown path: {path!r}. Available: {list(PATHS)}")


def _area_parts(
    source: Optional[Source],
    n: int,
    path: str,
    rules: QuadratureRules,
) -> Tuple[ComplexPolynomial, ComplexPolynomial, List[Tuple[Component, Component]]]:
    """T_B^n(f) as exact polynomials or as a quadrature part."""
    zero = ComplexPolynomial()
    if source is None:
        return zero, zero, []
    if path == SPECTRAL and isinstance(source, PolynomialSource):
        plus, minus = t_bicomplex_polynomials(source, n)
        return plus, minus, []
    if path == SPECTRAL:
        logger.info("Grid source: area term uses quadrature, field limited to |z| <= %s", rules.r_max)

    # T_B^n f = (-1)^(n-1)/(n-1)! * T_B[(2 Re(zeta - z))^(n-1) f]
    scale = (-1) ** (n - 1) / math.factorial(n - 1)
    grid = source.to_grid() if isinstance(source, PolynomialSource) else source
    disk, r_max, m = rules.disk, rules.r_max, n - 1

    def plus(z):
        return scale * t_quadrature(grid.plus, z, disk, weight_power=m, star=True, r_max=r_max)

    def minus(z):
        return scale * t_quadrature(grid.minus, z, disk, weight_power=m, r_max=r_max)

    return zero, zero, [(plus, minus)]


def _moment_parts(
    b_plus: BoundaryFourierData,
    b_minus: BoundaryFourierData,
    k: int,
    path: str,
    rules: QuadratureRules,
):
    """Boundary moment terms of order k: (conj M_k(b+), M_k(b-)) spectrally or by quadrature."""
    if path == QUADRATURE and b_plus.kind == FUNCTION:
        circle, r_max = rules.circle, rules.r_max
        return None, (
            lambda z: np.conj(moment_integral(b_plus, k, z, circle, r_max)),
            lambda z: moment_integral(b_minus, k, z, circle, r_max),
        )
    if path == QUADRATURE:
        logger.debug("Distribution data on the quadrature path is paired spectrally")
    return (moment_pairing(b_plus, k).conj(), moment_pairing(b_minus, k)), None


def _solve_schwarz(spec: SchwarzSpec, path: str, rules: Optional[QuadratureRules], provenance: str) -> SolutionField:
    _check_path(path)
    rules = rules or QuadratureRules()
    s = ComplexPolynomial({(1, 0): 1, (0, 1): 1})

    poly_plus, poly_minus, extra = _area_parts(spec.source, spec.n, path, rules)
    for k in range(spec.n):
        coeff = (-1) ** k / math.factorial(k)
        constants = s ** k * (1j / math.factorial(k))
        poly_plus = poly_plus + constants * spec.c_plus[k]
        poly_minus = poly_minus + constants * spec.c_minus[k]
        polys, quad = _moment_parts(spec.boundary_plus[k], spec.boundary_minus[k], k, path, rules)
        if polys:
            poly_plus = poly_plus + coeff * polys[0]
            poly_minus = poly_minus + coeff * polys[1]
        else:
            extra.append((
                lambda z, q=quad, c=coeff: c * q[0](z),
                lambda z, q=quad, c=coeff: c * q[1](z),
            ))

    logger.debug("Assembled %s field (n=%d, path=%s)", provenance, spec.n, path)
    return _assemble(provenance, poly_plus, poly_minus, extra, rules)


# --- public solvers ---

def solve_schwarz_homogeneous(
    b_plus: BoundaryFourierData,
    b_minus: BoundaryFourierData,
    c_plus: float = 0.0,
    c_minus: float = 0.0,
    path: str = SPECTRAL,
    rules: Optional[QuadratureRules] = None,
) -> SolutionField:
    """
    dbar w = 0, Re w = b on the circle, Im w(0) = c.

    w+ = conj(S(b+)) + i c+ and w- = S(b-) + i c-, S the Schwarz integral.

    Raises:
        BicboundError: complex-valued boundary data
    """
    spec = SchwarzSpec.first_order(b_plus, b_minus, c_plus, c_minus)
    return _solve_schwarz(spec, path, rules, "schwarz-homogeneous")


def solve_schwarz_nonhomogeneous(
    spec: SchwarzSpec,
    path: str = SPECTRAL,
    rules: Optional[QuadratureRules] = None,
) -> SolutionField:
    """
    dbar w = f with first-order Schwarz conditions.

    The homogeneous solution plus T_B(f); distribution data is routed to
    solve_schwarz_distributional.
    """
    if spec.n != 1:
        raise BicboundError(f"Use solve_schwarz_higher_order for n={spec.n}")
    if spec.kind == DISTRIBUTION:
        logger.debug("Distribution boundary data, solving in the distributional sense")
        return solve_schwarz_distributional(spec, path, rules)
    return _solve_schwarz(spec, path, rules, "schwarz-nonhomogeneous")


def solve_schwarz_distributional(
    spec: SchwarzSpec,
    path: str = SPECTRAL,
    rules: Optional[QuadratureRules] = None,
) -> SolutionField:
    """First-order Schwarz problem with boundary data paired against the kernels."""
    if spec.n != 1:
        raise BicboundError(f"Distributional Schwarz problems are first order, got n={spec.n}")
    if spec.kind != DISTRIBUTION:
        raise KindError("Distributional solve needs distribution-kind boundary data")
    return _solve_schwarz(spec, path, rules, "schwarz-distributional")


def solve_schwarz_higher_order(
    spec: SchwarzSpec,
    path: str = SPECTRAL,
    rules: Optional[QuadratureRules] = None,
) -> SolutionField:
    """
    dbar^n w = f with n Schwarz conditions, n <= 3.

    w- = sum_k [ i c-_k (z + zbar)^k / k! + (-1)^k / k! M_k(b-_k) ] + T^n(f-)
    where M_k pairs b-_k with the Schwarz kernel times (2 Re(zeta - z))^k;
    w+ is the conjugate construction. n = 1 reproduces the first-order solver.
    """
    if spec.n == 1:
        return solve_schwarz_nonhomogeneous(spec, path, rules)
    if spec.kind == DISTRIBUTION and path == QUADRATURE:
        logger.debug("Distribution data: boundary moments are paired spectrally")
    return _solve_schwarz(spec, path, rules, f"schwarz-order{spec.n}")


def solve_dirichlet(
    spec: DirichletSpec,
    path: str = SPECTRAL,
    rules: Optional[QuadratureRules] = None,
) -> SolutionField:
    """
    d dbar w = 0, w = g on the circle: the Poisson integral of each component.

    Complex-valued data is accepted. Distribution data is routed to
    solve_dirichlet_distributional.
    """
    _check_path(path)
    if spec.kind == DISTRIBUTION:
        logger.debug("Distribution boundary data, solving in the distributional sense")
        return solve_dirichlet_distributional(spec, path, rules)
    if path == SPECTRAL:
        return SolutionField.from_polynomials(
            spec.boundary.plus.poisson_extension(),
            spec.boundary.minus.poisson_extension(),
            "dirichlet",
        )
    rules = rules or QuadratureRules()
    g_plus, g_minus = spec.boundary.plus, spec.boundary.minus
    extra = [(
        lambda z: poisson_integral(g_plus, z, rules.circle, rules.r_max),
        lambda z: poisson_integral(g_minus, z, rules.circle, rules.r_max),
    )]
    return _assemble("dirichlet", ComplexPolynomial(), ComplexPolynomial(), extra, rules)


def solve_dirichlet_distributional(
    spec: DirichletSpec,
    path: str = SPECTRAL,
    rules: Optional[QuadratureRules] = None,
) -> SolutionField:
    """Dirichlet problem with distribution data, w± = (1/2pi) <g±, P_r(theta - .)>."""
    _check_path(path)
    if spec.kind != DISTRIBUTION:
        raise KindError("Distributional solve needs distribution-kind boundary data")
    return SolutionField.from_polynomials(
        spec.boundary.plus.poisson_extension(),
        spec.boundary.minus.poisson_extension(),
        "dirichlet-distributional",
    )
