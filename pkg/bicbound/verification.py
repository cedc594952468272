"""
Residual checks of solution fields.

Wirtinger derivatives are taken by central differences on each
idempotent component:

    d/dz    = (d/dx - i d/dy) / 2
    d/dzbar = (d/dx + i d/dy) / 2

The bicomplex operators act on components by bc_dbar w = p+ d(w+) + p- dbar(w-)
and bc_d w = p+ dbar(w+) + p- d(w-), so that bc_dbar of a Schwarz solution
reproduces its source.

Reports differentiate polynomial fields exactly. Fields with a quadrature
part are differenced with one Richardson step, and the step shrinks with
the bandwidth of the boundary data.
"""

import json
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .bicomplex import Bicomplex
from .boundary import FUNCTION, BoundaryFourierData
from .errors import BicboundError, DomainError
from .operators import GridSource, PolynomialSource, solve_schwarz_poly_exact
from .solvers import QUADRATURE, DirichletSpec, SchwarzSpec, SolutionField

logger = logging.getLogger(__name__)

DEFAULT_H = 1e-4
LAPLACIAN_H = 1e-3
# nested differences lose digits, so higher orders use larger steps
ORDER_STEPS = {1: 1e-4, 2: 1e-3, 3: 1e-2}
BOUNDARY_H = 1e-4
# steps are divided by bandwidth / BANDWIDTH_REF once the data exceeds it
BANDWIDTH_REF = 8

PDE_TOL_SPECTRAL = 1e-5
PDE_TOL_QUADRATURE = 1e-3
LAPLACIAN_TOL = 1e-4
ORIGIN_TOL = 1e-10
ORIGIN_TOL_FD = 1e-6

GRID_NR = 15
GRID_NTHETA = 16
GRID_RMAX = 0.9
BOUNDARY_ANGLES = 64
R_COARSE = 1 - 1e-2
R_FINE = 1 - 1e-3
BOUNDARY_ATOL = 1e-9
# roundoff floor of a k-fold difference quotient, scaled by 1/h^k
FD_NOISE = 1e-14

__all__ = [
    "ResidualReport",
    "wirtinger_dz",
    "wirtinger_dzbar",
    "bc_dbar",
    "bc_d",
    "bc_dbar_field",
    "bc_d_field",
    "dbar_power_field",
    "exact_dbar_power_field",
    "exact_laplacian_field",
    "richardson_dbar_power_field",
    "richardson_laplacian_field",
    "five_point_laplacian",
    "five_point_laplacian_field",
    "laplacian_identity_check",
    "residual_report",
    "solve_schwarz_poly_exact",
]


# --- differences ---

def _check_stencil(z, reach: float) -> None:
    if np.any(np.abs(np.asarray(z, dtype=complex)) + reach >= 1):
        raise DomainError(f"Difference stencil of reach {reach:.3g} leaves the unit disk")


def _dz(func: Callable, h: float) -> Callable:
    def derivative(z):
        z = np.asarray(z, dtype=complex)
        dx = (func(z + h) - func(z - h)) / (2 * h)
        dy = (func(z + 1j * h) - func(z - 1j * h)) / (2 * h)
        return (dx - 1j * dy) / 2

    return derivative


def _dzbar(func: Callable, h: float) -> Callable:
    def derivative(z):
        z = np.asarray(z, dtype=complex)
        dx = (func(z + h) - func(z - h)) / (2 * h)
        dy = (func(z + 1j * h) - func(z - 1j * h)) / (2 * h)
        return (dx + 1j * dy) / 2

    return derivative


def _derived(base: SolutionField, plus: Callable, minus: Callable, h: float, label: str) -> SolutionField:
    reach = h * math.sqrt(2)

    def guarded(component):
        def evaluate(z):
            _check_stencil(z, reach)
            return component(z)

        return evaluate

    return SolutionField(
        plus=guarded(plus),
        minus=guarded(minus),
        provenance=f"{label}({base.provenance})",
        path=base.path,
        resolution=base.resolution,
        r_max=base.r_max,
    )


def _checked(base: SolutionField, component: Callable) -> Callable:
    def evaluate(z):
        base.check_domain(z)
        return component(z)

    return evaluate


def wirtinger_dz(field: SolutionField, z: complex, h: float = DEFAULT_H) -> Bicomplex:
    """d/dz of both idempotent components."""
    _check_stencil(z, h * math.sqrt(2))
    plus = _dz(_checked(field, field.plus), h)(complex(z))
    minus = _dz(_checked(field, field.minus), h)(complex(z))
    return Bicomplex.from_idempotent(plus, minus)


def wirtinger_dzbar(field: SolutionField, z: complex, h: float = DEFAULT_H) -> Bicomplex:
    """d/dzbar of both idempotent components."""
    _check_stencil(z, h * math.sqrt(2))
    plus = _dzbar(_checked(field, field.plus), h)(complex(z))
    minus = _dzbar(_checked(field, field.minus), h)(complex(z))
    return Bicomplex.from_idempotent(plus, minus)


def bc_dbar_field(field: SolutionField, h: float = DEFAULT_H) -> SolutionField:
    """Field of p+ d(w+) + p- dbar(w-)."""
    plus = _dz(_checked(field, field.plus), h)
    minus = _dzbar(_checked(field, field.minus), h)
    return _derived(field, plus, minus, h, "dbar")


def bc_d_field(field: SolutionField, h: float = DEFAULT_H) -> SolutionField:
    """Field of p+ dbar(w+) + p- d(w-)."""
    plus = _dzbar(_checked(field, field.plus), h)
    minus = _dz(_checked(field, field.minus), h)
    return _derived(field, plus, minus, h, "d")


def dbar_power_field(field: SolutionField, m: int, h: float = DEFAULT_H) -> SolutionField:
    for _ in range(m):
        field = bc_dbar_field(field, h)
    return field


def bc_dbar(field: SolutionField, z: complex, h: float = DEFAULT_H) -> Bicomplex:
    return bc_dbar_field(field, h)(z)


def bc_d(field: SolutionField, z: complex, h: float = DEFAULT_H) -> Bicomplex:
    return bc_d_field(field, h)(z)


def five_point_laplacian_field(field: SolutionField, h: float = LAPLACIAN_H) -> SolutionField:
    def stencil(component):
        component = _checked(field, component)

        def laplacian(z):
            z = np.asarray(z, dtype=complex)
            around = component(z + h) + component(z - h) + component(z + 1j * h) + component(z - 1j * h)
            return (around - 4 * component(z)) / (h * h)

        return laplacian

    return _derived(field, stencil(field.plus), stencil(field.minus), h, "laplacian")


def five_point_laplacian(field: SolutionField, z: complex, h: float = LAPLACIAN_H) -> Bicomplex:
    return five_point_laplacian_field(field, h)(z)


def laplacian_identity_check(field: SolutionField, z: complex, h: float = LAPLACIAN_H) -> float:
    """bnorm of 4 bc_d(bc_dbar w) - Laplacian(w) at z; small for smooth fields."""
    nested = bc_d_field(bc_dbar_field(field, h), h)(z)
    return (nested * 4 - five_point_laplacian(field, z, h)).norm()


# --- exact and extrapolated derivatives ---

def _polynomials(field: SolutionField):
    if field.polynomials is None:
        raise BicboundError(f"{field.provenance} field is not a polynomial")
    return field.polynomials


def exact_dbar_power_field(field: SolutionField, m: int) -> SolutionField:
    """p+ d^m(w+) + p- dbar^m(w-) of a polynomial field, without differences."""
    plus, minus = _polynomials(field)
    for _ in range(m):
        plus, minus = plus.dz(), minus.dzbar()
    return SolutionField.from_polynomials(plus, minus, f"dbar^{m}({field.provenance})")


def exact_laplacian_field(field: SolutionField) -> SolutionField:
    """4 d dbar of each component of a polynomial field."""
    plus, minus = _polynomials(field)
    return SolutionField.from_polynomials(
        4 * plus.dz().dzbar(), 4 * minus.dz().dzbar(), f"laplacian({field.provenance})"
    )


def _richardson(base: SolutionField, coarse: SolutionField, fine: SolutionField, label: str) -> SolutionField:
    # central stencils have even error expansions; this cancels the h^2 term
    def combine(c, f):
        return lambda z: (4 * f(z) - c(z)) / 3

    return SolutionField(
        plus=combine(coarse.plus, fine.plus),
        minus=combine(coarse.minus, fine.minus),
        provenance=f"{label}({base.provenance})",
        path=base.path,
        resolution=base.resolution,
        r_max=base.r_max,
    )


def richardson_dbar_power_field(field: SolutionField, m: int, h: float = DEFAULT_H) -> SolutionField:
    """dbar_power_field at steps h and h/2, extrapolated to O(h^4)."""
    if m == 0:
        return field
    coarse = dbar_power_field(field, m, h)
    fine = dbar_power_field(field, m, h / 2)
    return _richardson(field, coarse, fine, f"dbar^{m}")


def richardson_laplacian_field(field: SolutionField, h: float = LAPLACIAN_H) -> SolutionField:
    """Five-point Laplacian at steps h and h/2, extrapolated to O(h^4)."""
    coarse = five_point_laplacian_field(field, h)
    fine = five_point_laplacian_field(field, h / 2)
    return _richardson(field, coarse, fine, "laplacian")


# --- reports ---

@dataclass
class ResidualReport:
    """
    Residuals of a solution field against its problem.

    Attributes:
        problem: "schwarz" or "dirichlet"
        path: evaluation path of the field
        order: n of the Schwarz problem (1 for Dirichlet)
        pde_residual_max: max bnorm of the interior PDE residual over the grid
        boundary_checked: False for distribution data or quadrature fields
        boundary_mismatch_max: boundary-condition mismatch at the fine radius
        boundary_mismatch_coarse: the same at the coarse radius
        origin_error: (plus, minus) errors of the normalization at 0
    """

    problem: str
    path: str
    order: int
    pde_residual_max: float
    pde_tolerance: float
    boundary_checked: bool
    boundary_mismatch_max: float
    boundary_mismatch_coarse: float
    boundary_bound: float
    origin_error: Tuple[float, float]
    origin_tolerance: float
    grid: Dict[str, float] = field(default_factory=dict)

    @property
    def pde_ok(self) -> bool:
        return self.pde_residual_max <= self.pde_tolerance

    @property
    def boundary_ok(self) -> bool:
        return not self.boundary_checked or self.boundary_mismatch_max <= self.boundary_bound

    @property
    def origin_ok(self) -> bool:
        return max(self.origin_error) <= self.origin_tolerance

    @property
    def passed(self) -> bool:
        return self.pde_ok and self.boundary_ok and self.origin_ok

    def violations(self) -> List[str]:
        problems = []
        if not self.pde_ok:
            problems.append(f"pde residual {self.pde_residual_max:.3e} > {self.pde_tolerance:.1e}")
        if not self.boundary_ok:
            problems.append(
                f"boundary mismatch {self.boundary_mismatch_max:.3e} > {self.boundary_bound:.3e}"
            )
        if not self.origin_ok:
            problems.append(
                f"origin error {max(self.origin_error):.3e} > {self.origin_tolerance:.1e}"
            )
        return problems

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["origin_error"] = list(self.origin_error)
        data["passed"] = self.passed
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def residual_grid(nr: int = GRID_NR, ntheta: int = GRID_NTHETA, r_max: float = GRID_RMAX) -> np.ndarray:
    """Interior polar grid r_i = r_max (i+1)/nr, theta_j = 2 pi j / ntheta."""
    radii = r_max * np.arange(1, nr + 1) / nr
    angles = 2 * math.pi * np.arange(ntheta) / ntheta
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def _bnorm(plus: np.ndarray, minus: np.ndarray) -> np.ndarray:
    return np.sqrt((np.abs(plus) ** 2 + np.abs(minus) ** 2) / 2)


def _source_values(source, z: np.ndarray):
    if source is None:
        return np.zeros_like(z), np.zeros_like(z)
    if isinstance(source, (PolynomialSource, GridSource)):
        return np.asarray(source.plus(z), dtype=complex), np.asarray(source.minus(z), dtype=complex)
    raise TypeError(f"Unsupported source type {type(source).__name__}")


def _boundary_mismatch(
    field: SolutionField,
    data_plus: BoundaryFourierData,
    data_minus: BoundaryFourierData,
    r: float,
    real_part: bool,
) -> float:
    angles = 2 * math.pi * np.arange(BOUNDARY_ANGLES) / BOUNDARY_ANGLES
    z = r * np.exp(1j * angles)
    plus, minus = field.components(z)
    target_plus, target_minus = data_plus.sample(angles), data_minus.sample(angles)
    if real_part:
        plus, minus = plus.real, minus.real
        target_plus, target_minus = target_plus.real, target_minus.real
    return float(max(np.max(np.abs(plus - target_plus)), np.max(np.abs(minus - target_minus))))


def _linear_bound(coarse: float, r_coarse: float, r_fine: float, scale: float) -> float:
    return 10 * scale * coarse * (1 - r_fine) / (1 - r_coarse) + BOUNDARY_ATOL


def _bandwidth(spec) -> int:
    """Highest Fourier mode of the boundary data or polynomial degree of the source."""
    if isinstance(spec, DirichletSpec):
        data = (spec.boundary.plus, spec.boundary.minus)
        source = None
    else:
        data = spec.boundary_plus + spec.boundary_minus
        source = spec.source
    degree = max((d.degree for d in data), default=0)
    if isinstance(source, PolynomialSource):
        degree = max(degree, source.plus.degree, source.minus.degree)
    return degree


def _scaled_step(base: float, bandwidth: int) -> float:
    return base / max(1.0, bandwidth / BANDWIDTH_REF)


def _dbar_power(field: SolutionField, m: int, h: float) -> SolutionField:
    if field.polynomials is not None:
        return exact_dbar_power_field(field, m)
    return richardson_dbar_power_field(field, m, h)


def residual_report(
    spec,
    field: SolutionField,
    h: Optional[float] = None,
    tolerance_scale: float = 1.0,
    grid: Tuple[int, int] = (GRID_NR, GRID_NTHETA),
    r_max: float = GRID_RMAX,
) -> ResidualReport:
    """
    Check a field against a SchwarzSpec or DirichletSpec.

    The PDE residual is sampled on an interior polar grid. Polynomial
    fields are differentiated exactly; other fields by extrapolated
    differences. Boundary conditions hold in the limit r -> 1, so the
    mismatch is measured at r = 1 - 1e-2 and r = 1 - 1e-3 and must shrink
    at least linearly in 1 - r. Boundary checks are skipped for
    distribution data and for quadrature fields, whose circle rule does
    not resolve the kernel near the circle.

    Args:
        spec: problem the field claims to solve
        field: the field
        h: difference step for non-polynomial fields (default per order
            and data bandwidth)
        tolerance_scale: multiplies every tolerance
        grid: (radial, angular) counts of the interior grid
        r_max: outermost interior radius
    """
    points = residual_grid(grid[0], grid[1], r_max)
    grid_info = {"nr": grid[0], "ntheta": grid[1], "r_max": r_max}
    quadrature = field.path == QUADRATURE
    exact = field.polynomials is not None

    if isinstance(spec, DirichletSpec):
        if exact:
            laplacian = exact_laplacian_field(field)
        else:
            laplacian = richardson_laplacian_field(field, h or _scaled_step(LAPLACIAN_H, _bandwidth(spec)))
        lap_plus, lap_minus = laplacian.components(points)
        pde = float(np.max(_bnorm(lap_plus, lap_minus)))
        checked = spec.kind == FUNCTION and not quadrature
        coarse = fine = bound = 0.0
        if checked:
            g = spec.boundary
            coarse = _boundary_mismatch(field, g.plus, g.minus, R_COARSE, real_part=False)
            fine = _boundary_mismatch(field, g.plus, g.minus, R_FINE, real_part=False)
            bound = _linear_bound(coarse, R_COARSE, R_FINE, tolerance_scale)
        w_plus, w_minus = field.components(0j)
        target_plus = spec.boundary.plus.poisson_extension().coefficient(0, 0)
        target_minus = spec.boundary.minus.poisson_extension().coefficient(0, 0)
        origin = (float(abs(w_plus - target_plus)), float(abs(w_minus - target_minus)))
        report = ResidualReport(
            problem="dirichlet",
            path=field.path,
            order=1,
            pde_residual_max=pde,
            pde_tolerance=LAPLACIAN_TOL * tolerance_scale,
            boundary_checked=checked,
            boundary_mismatch_max=fine,
            boundary_mismatch_coarse=coarse,
            boundary_bound=bound,
            origin_error=origin,
            origin_tolerance=ORIGIN_TOL * tolerance_scale,
            grid=grid_info,
        )
        if not report.passed:
            logger.warning("Residual check failed: %s", "; ".join(report.violations()))
        logger.debug("Dirichlet residuals: %s", report.to_dict())
        return report

    if not isinstance(spec, SchwarzSpec):
        raise TypeError(f"Unsupported problem type {type(spec).__name__}")

    n = spec.n
    step = h or _scaled_step(ORDER_STEPS[n], _bandwidth(spec))
    res_plus, res_minus = _dbar_power(field, n, step).components(points)
    src_plus, src_minus = _source_values(spec.source, points)
    pde = float(np.max(_bnorm(res_plus - src_plus, res_minus - src_minus)))

    checked = spec.kind == FUNCTION and not quadrature
    coarse = fine = bound = 0.0
    if checked:
        worst = None
        for k in range(n):
            if exact:
                derived, shift, noise = exact_dbar_power_field(field, k), 0.0, 0.0
            else:
                derived = dbar_power_field(field, k, BOUNDARY_H)
                # k-fold stencils must stay inside the disk
                shift = 2 * k * BOUNDARY_H
                noise = FD_NOISE / BOUNDARY_H ** k if k else 0.0
            b_plus, b_minus = spec.boundary_plus[k], spec.boundary_minus[k]
            m_coarse = _boundary_mismatch(derived, b_plus, b_minus, R_COARSE - shift, real_part=True)
            m_fine = _boundary_mismatch(derived, b_plus, b_minus, R_FINE - shift, real_part=True)
            k_bound = _linear_bound(m_coarse, R_COARSE - shift, R_FINE - shift, tolerance_scale) + noise
            if worst is None or m_fine - k_bound > worst:
                worst = m_fine - k_bound
                fine, coarse, bound = m_fine, m_coarse, k_bound

    origin_plus = origin_minus = 0.0
    for k in range(n):
        value_plus, value_minus = _dbar_power(field, k, step).components(0j)
        origin_plus = max(origin_plus, abs(complex(value_plus).imag - spec.c_plus[k]))
        origin_minus = max(origin_minus, abs(complex(value_minus).imag - spec.c_minus[k]))

    pde_tol = PDE_TOL_QUADRATURE if quadrature else PDE_TOL_SPECTRAL
    # extrapolated differences at the origin keep an O(h^4) error
    origin_tol = ORIGIN_TOL if exact or n == 1 else max(ORIGIN_TOL_FD, step ** 4)
    report = ResidualReport(
        problem="schwarz",
        path=field.path,
        order=n,
        pde_residual_max=pde,
        pde_tolerance=pde_tol * tolerance_scale,
        boundary_checked=checked,
        boundary_mismatch_max=fine,
        boundary_mismatch_coarse=coarse,
        boundary_bound=bound,
        origin_error=(float(origin_plus), float(origin_minus)),
        origin_tolerance=origin_tol * tolerance_scale,
        grid=grid_info,
    )
    if not report.passed:
        logger.warning("Residual check failed: %s", "; ".join(report.violations()))
    return report
