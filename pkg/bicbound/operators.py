"""
The T operator and its bicomplex extension.

For a complex source f on the unit disk,

    T(f)(z) = -(1/2pi) iint [ f(zeta)/zeta * (zeta + z)/(zeta - z)
                            + conj(f(zeta))/conj(zeta) * (1 + z conj(zeta))/(1 - z conj(zeta)) ] dxi deta

is the solution of dbar w = f with Re w = 0 on the circle and Im w(0) = 0.
Its conjugate twin T_*(f) = conj(T(conj f)) solves d w = f. The bicomplex
operator acts by idempotent components: T_B(f) = p+ T_*(f+) + p- T(f-).

Polynomial sources go through an exact oracle. Other sources go through
quadrature with the kernel split into a Cauchy part, integrated in polar
coordinates about z, and parts that are smooth in zeta.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from .bicomplex import Bicomplex
from .boundary import BoundaryFourierData
from .errors import BicboundError, DomainError
from .polynomial import Bidegree, ComplexPolynomial
from .quadrature import DEFAULT_R_MAX, DiskRule, disk_integral

logger = logging.getLogger(__name__)

MAX_ITERATED_ORDER = 3


@dataclass(frozen=True)
class PolynomialSource:
    """
    A bicomplex polynomial source sum c_ab z^a zbar^b, c_ab bicomplex.

    Example:
        f = PolynomialSource.constant(Bicomplex(1, 0))
        f.plus, f.minus      # ComplexPolynomial(1), ComplexPolynomial(1)
    """

    terms: Dict[Bidegree, Bicomplex] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, b), c in self.terms.items():
            if not isinstance(c, Bicomplex):
                c = Bicomplex(c, 0)
            if not c.is_zero:
                clean[(int(a), int(b))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def zero(cls) -> "PolynomialSource":
        return cls({})

    @classmethod
    def constant(cls, value: Union[Bicomplex, complex]) -> "PolynomialSource":
        return cls({(0, 0): value})

    @classmethod
    def from_components(cls, plus: ComplexPolynomial, minus: ComplexPolynomial) -> "PolynomialSource":
        keys = set(plus.terms) | set(minus.terms)
        return cls({
            k: Bicomplex.from_idempotent(plus.coefficient(*k), minus.coefficient(*k))
            for k in keys
        })

    @property
    def plus(self) -> ComplexPolynomial:
        return ComplexPolynomial({k: c.plus for k, c in self.terms.items()})

    @property
    def minus(self) -> ComplexPolynomial:
        return ComplexPolynomial({k: c.minus for k, c in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, z: complex) -> Bicomplex:
        return Bicomplex.from_idempotent(self.plus(z), self.minus(z))

    def to_grid(self) -> "GridSource":
        return GridSource(self.plus.evaluate, self.minus.evaluate)

    def to_dict(self) -> Dict[str, Any]:
        return {"terms": [[a, b, *c.to_tuple()] for (a, b), c in self.terms.items()]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PolynomialSource":
        terms = {}
        for row in data.get("terms", []):
            a, b = int(row[0]), int(row[1])
            terms[(a, b)] = terms.get((a, b), Bicomplex()) + Bicomplex.from_tuple(row[2:6])
        return cls(terms)


@dataclass(frozen=True)
class GridSource:
    """
    A source given by vectorized callables for its idempotent components.

    Only usable on the quadrature path.
    """

    plus: Callable[[np.ndarray], np.ndarray]
    minus: Callable[[np.ndarray], np.ndarray]

    @classmethod
    def from_function(cls, func: Callable[[complex], Bicomplex]) -> "GridSource":
        """Wrap a pointwise bicomplex function."""
        plus = np.vectorize(lambda z: func(z).plus, otypes=[complex])
        minus = np.vectorize(lambda z: func(z).minus, otypes=[complex])
        return cls(plus, minus)

    @property
    def is_zero(self) -> bool:
        return False

    def __call__(self, z: complex) -> Bicomplex:
        return Bicomplex.from_idempotent(self.plus(z), self.minus(z))


Source = Union[PolynomialSource, GridSource]


# --- exact oracle ---

def solve_schwarz_poly_exact(
    source: ComplexPolynomial,
    boundary: Optional[BoundaryFourierData] = None,
    c: float = 0.0,
) -> ComplexPolynomial:
    """
    Closed-form solution of dbar w = f, Re w = b on the circle, Im w(0) = c.

    A particular solution sum c_ab z^a zbar^(b+1) / (b+1) is corrected by the
    Schwarz extension of b minus its boundary real part, then shifted by a
    purely imaginary constant to fix Im w(0).

    Raises:
        TypeError: source is not a ComplexPolynomial
        BicboundError: boundary data is not real
    """
    if not isinstance(source, ComplexPolynomial):
        raise TypeError(f"Exact solve needs a polynomial source, got {type(source).__name__}")
    boundary = boundary or BoundaryFourierData.zero()
    if not boundary.real:
        raise BicboundError("Schwarz boundary data must be real-valued")

    particular = ComplexPolynomial({(a, b + 1): v / (b + 1) for (a, b), v in source})
    trace = BoundaryFourierData(particular.boundary_trace(), real=False).real_part()
    w = particular + (boundary - trace).schwarz_extension()
    return w + 1j * (c - w.coefficient(0, 0).imag)


def t_polynomial(f: ComplexPolynomial) -> ComplexPolynomial:
    """T(f) for a polynomial f, exactly."""
    return solve_schwarz_poly_exact(f)


def t_star_polynomial(f: ComplexPolynomial) -> ComplexPolynomial:
    """T_*(f) = conj(T(conj f))."""
    return t_polynomial(f.conj()).conj()


def t_polynomial_iterated(f: ComplexPolynomial, n: int, star: bool = False) -> ComplexPolynomial:
    step = t_star_polynomial if star else t_polynomial
    for _ in range(n):
        f = step(f)
    return f


# --- quadrature ---

def _check_quadrature_points(z: np.ndarray, r_max: float) -> None:
    if np.any(np.abs(z) > r_max):
        raise DomainError(f"T quadrature is limited to |z| <= {r_max}")


def _area_term_at(f, z0: complex, rule: DiskRule, star: bool, weight_power: int) -> complex:
    """-(1/2pi) iint K(zeta, z0) f(zeta) (2 Re(zeta - z0))^m at a single point."""

    def weight(zeta):
        return (2 * (zeta - z0).real) ** weight_power if weight_power else 1.0

    if star:
        # T_* kernel: -f/conj(zeta) + 2f/conj(zeta - z) + conj(f)/zeta + 2 conj(z) conj(f)/(1 - conj(z) zeta)
        def smooth(zeta):
            fz = np.asarray(f(zeta), dtype=complex)
            return (
                -fz / np.conj(zeta)
                + np.conj(fz) / zeta
                + 2 * np.conj(z0) * np.conj(fz) / (1 - np.conj(z0) * zeta)
            ) * weight(zeta)

        def cauchy(zeta):
            return 2 * np.asarray(f(zeta), dtype=complex) / np.conj(zeta - z0) * weight(zeta)
    else:
        # T kernel: -f/zeta + 2f/(zeta - z) + conj(f)/conj(zeta) + 2 z conj(f)/(1 - z conj(zeta))
        def smooth(zeta):
            fz = np.asarray(f(zeta), dtype=complex)
            return (
                -fz / zeta
                + np.conj(fz) / np.conj(zeta)
                + 2 * z0 * np.conj(fz) / (1 - z0 * np.conj(zeta))
            ) * weight(zeta)

        def cauchy(zeta):
            return 2 * np.asarray(f(zeta), dtype=complex) / (zeta - z0) * weight(zeta)

    total = disk_integral(smooth, rule, z=z0) + disk_integral(cauchy, rule.centered(z0))
    return -total / (2 * math.pi)


def t_quadrature(
    f: Callable[[np.ndarray], np.ndarray],
    z,
    rule: Optional[DiskRule] = None,
    weight_power: int = 0,
    star: bool = False,
    r_max: float = DEFAULT_R_MAX,
):
    """
    T(f)(z) (or T_*(f)(z) with star=True) by tensor quadrature.

    weight_power m multiplies the kernel by (2 Re(zeta - z))^m, which gives
    the area terms of the higher-order solutions.

    Args:
        f: vectorized complex source
        z: evaluation point(s), |z| <= r_max
        rule: disk rule (default DiskRule())
    """
    rule = rule or DiskRule()
    points = np.asarray(z, dtype=complex)
    _check_quadrature_points(points, r_max)
    flat = points.ravel()
    out = np.empty(flat.shape, dtype=complex)
    for i, z0 in enumerate(flat):
        out[i] = _area_term_at(f, complex(z0), rule, star, weight_power)
    logger.debug("T quadrature at %d points (nr=%d nt=%d m=%d)", flat.size, rule.nr, rule.nt, weight_power)
    out = out.reshape(points.shape)
    return out if out.ndim else complex(out)


# --- complex entry points ---

def _as_polynomial(f) -> Optional[ComplexPolynomial]:
    if isinstance(f, ComplexPolynomial):
        return f
    if isinstance(f, (int, float, complex)):
        return ComplexPolynomial.constant(f)
    return None


def t_complex(f, z, rule: Optional[DiskRule] = None):
    """T(f)(z): exact for polynomial f, quadrature for a callable."""
    poly = _as_polynomial(f)
    if poly is not None:
        if np.any(np.abs(np.asarray(z)) >= 1):
            raise DomainError("z must lie in the open unit disk")
        return t_polynomial(poly).evaluate(z)
    return t_quadrature(f, z, rule)


def t_star_complex(f, z, rule: Optional[DiskRule] = None):
    """T_*(f)(z): exact for polynomial f, quadrature for a callable."""
    poly = _as_polynomial(f)
    if poly is not None:
        if np.any(np.abs(np.asarray(z)) >= 1):
            raise DomainError("z must lie in the open unit disk")
        return t_star_polynomial(poly).evaluate(z)
    return t_quadrature(f, z, rule, star=True)


# --- bicomplex ---

def t_bicomplex_polynomials(f: PolynomialSource, n: int = 1) -> Tuple[ComplexPolynomial, ComplexPolynomial]:
    """Idempotent components of T_B^n(f) as polynomials."""
    _check_order(n)
    return (
        t_polynomial_iterated(f.plus, n, star=True),
        t_polynomial_iterated(f.minus, n),
    )


def t_bicomplex_components(f: Source, z, rule: Optional[DiskRule] = None, weight_power: int = 0):
    """(T_*(f+)(z), T(f-)(z)) as arrays, by the route that fits the source."""
    if isinstance(f, PolynomialSource) and weight_power == 0:
        plus, minus = t_bicomplex_polynomials(f)
        return plus.evaluate(z), minus.evaluate(z)
    if isinstance(f, PolynomialSource):
        f = f.to_grid()
    return (
        t_quadrature(f.plus, z, rule, weight_power=weight_power, star=True),
        t_quadrature(f.minus, z, rule, weight_power=weight_power),
    )


def t_bicomplex(f: Source, z: complex, rule: Optional[DiskRule] = None) -> Bicomplex:
    """T_B(f)(z) = p+ T_*(f+)(z) + p- T(f-)(z)."""
    if abs(complex(z)) >= 1:
        raise DomainError(f"z={z} is not inside the unit disk")
    plus, minus = t_bicomplex_components(f, complex(z), rule)
    return Bicomplex.from_idempotent(plus, minus)


def _check_order(n: int) -> None:
    if n < 1:
        raise BicboundError(f"Iteration order must be >= 1, got {n}")
    if n > MAX_ITERATED_ORDER:
        raise BicboundError(f"Orders above {MAX_ITERATED_ORDER} are not supported, got {n}")


def t_bicomplex_iterated(f: Source, n: int, z: complex) -> Bicomplex:
    """
    T_B^n(f)(z) for a polynomial source.

    Raises:
        BicboundError: n outside 1..3, or a grid source (nested singular quadrature is not supported)
    """
    _check_order(n)
    if not isinstance(f, PolynomialSource):
        raise BicboundError(
            "Iterated T needs a PolynomialSource; nested singular quadrature is not supported"
        )
    if abs(complex(z)) >= 1:
        raise DomainError(f"z={z} is not inside the unit disk")
    plus, minus = t_bicomplex_polynomials(f, n)
    return Bicomplex.from_idempotent(plus(complex(z)), minus(complex(z)))
