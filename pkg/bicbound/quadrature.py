"""
Closed-form kernels and quadrature rules for circle and disk integrals.

The circle rule is the uniform trapezoid, spectrally accurate for the
smooth periodic integrands that arise from trigonometric boundary data.
The disk rule is a tensor product of Gauss-Legendre in the radius and a
uniform rule in the angle. It can be laid out about the origin or about
an interior point, so that a 1/(zeta - z) singularity sits at the pole
of the polar coordinates, where the area element cancels it.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .boundary import FUNCTION, BoundaryFourierData
from .errors import DomainError, KindError, NodeCollisionError, QuadratureError

logger = logging.getLogger(__name__)

DEFAULT_CIRCLE_N = 256
DEFAULT_DISK_NR = 64
DEFAULT_DISK_NT = 256
DEFAULT_COLLISION_EPS = 1e-8
DEFAULT_R_MAX = 0.999
UNIT_TOL = 1e-12


# --- kernels ---

def _check_radius(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("Kernel radius must satisfy 0 <= r < 1")
    return r


def poisson(r, theta):
    """P_r(theta) = (1 - r^2) / (1 - 2 r cos(theta) + r^2)."""
    r = _check_radius(r)
    theta = np.asarray(theta, dtype=float)
    out = (1 - r * r) / (1 - 2 * r * np.cos(theta) + r * r)
    return out if np.ndim(out) else float(out)


def conj_poisson(r, theta):
    """Q_r(theta) = 2 r sin(theta) / (1 - 2 r cos(theta) + r^2)."""
    r = _check_radius(r)
    theta = np.asarray(theta, dtype=float)
    out = 2 * r * np.sin(theta) / (1 - 2 * r * np.cos(theta) + r * r)
    return out if np.ndim(out) else float(out)


def schwarz_kernel(zeta, z):
    """(zeta + z) / (zeta - z) for zeta on the circle and z in the disk."""
    zeta = np.asarray(zeta, dtype=complex)
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(np.abs(zeta) - 1) > UNIT_TOL):
        raise DomainError("zeta must lie on the unit circle")
    if np.any(np.abs(z) >= 1):
        raise DomainError("z must lie in the open unit disk")
    out = (zeta + z) / (zeta - z)
    return out if np.ndim(out) else complex(out)


# --- rules ---

@dataclass(frozen=True)
class CircleRule:
    """Uniform rule on [0, 2pi): nodes 2 pi m / N, weights 2 pi / N."""

    n: int = DEFAULT_CIRCLE_N

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Circle rule needs at least 2 nodes, got {self.n}")

    @property
    def nodes(self) -> np.ndarray:
        return 2 * math.pi * np.arange(self.n) / self.n

    @property
    def weights(self) -> np.ndarray:
        return np.full(self.n, 2 * math.pi / self.n)


@dataclass(frozen=True)
class _NodeSet:
    nodes: np.ndarray
    weights: np.ndarray
    collision_eps: float


@dataclass(frozen=True)
class DiskRule:
    """
    Tensor rule on the unit disk.

    Gauss-Legendre nodes rho_a in (0, 1) with weights w_a, uniform angles
    offset + 2 pi b / N_t; the node weight is w_a * rho_a * 2 pi / N_t.

    Attributes:
        nr: radial node count
        nt: angular node count
        offset: angular offset (default pi / nt, keeps nodes off the positive real axis)
        collision_eps: minimum allowed distance between a node and the evaluation point
    """

    nr: int = DEFAULT_DISK_NR
    nt: int = DEFAULT_DISK_NT
    offset: Optional[float] = None
    collision_eps: float = DEFAULT_COLLISION_EPS
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.nr < 1 or self.nt < 2:
            raise ValueError(f"Disk rule needs nr >= 1 and nt >= 2, got ({self.nr}, {self.nt})")
        if self.offset is None:
            object.__setattr__(self, "offset", math.pi / self.nt)

    def _radial(self):
        if "radial" not in self._cache:
            x, w = np.polynomial.legendre.leggauss(self.nr)
            self._cache["radial"] = ((x + 1) / 2, w / 2)
        return self._cache["radial"]

    @property
    def angles(self) -> np.ndarray:
        return self.offset + 2 * math.pi * np.arange(self.nt) / self.nt

    def _origin_set(self) -> _NodeSet:
        if "origin" not in self._cache:
            rho, w = self._radial()
            nodes = rho[:, None] * np.exp(1j * self.angles)[None, :]
            weights = (w * rho)[:, None] * np.full(self.nt, 2 * math.pi / self.nt)[None, :]
            self._cache["origin"] = _NodeSet(nodes.ravel(), weights.ravel(), self.collision_eps)
            logger.debug("Built disk rule nr=%d nt=%d offset=%.3e", self.nr, self.nt, self.offset)
        return self._cache["origin"]

    @property
    def nodes(self) -> np.ndarray:
        return self._origin_set().nodes

    @property
    def weights(self) -> np.ndarray:
        return self._origin_set().weights

    def centered(self, z: complex) -> _NodeSet:
        """
        The same tensor rule in polar coordinates about an interior point z.

        Along direction phi the radius runs over [0, R(phi)], R the distance
        from z to the circle, with Gauss-Legendre nodes scaled to that length.
        """
        z = complex(z)
        if abs(z) >= 1:
            raise DomainError(f"Centre {z} is not inside the unit disk")
        x, w = self._radial()
        phi = self.angles
        direction = np.exp(1j * phi)
        c = (np.conj(z) * direction).real
        reach = -c + np.sqrt(c * c + 1 - abs(z) ** 2)
        rho = x[:, None] * reach[None, :]
        nodes = z + rho * direction[None, :]
        weights = w[:, None] * reach[None, :] * rho * (2 * math.pi / self.nt)
        return _NodeSet(nodes.ravel(), weights.ravel(), self.collision_eps)

    def refined(self, factor: int = 2) -> "DiskRule":
        return DiskRule(self.nr * factor, self.nt * factor, collision_eps=self.collision_eps)


@dataclass(frozen=True)
class QuadratureRules:
    """The rules used by the quadrature evaluation path."""

    circle: CircleRule = field(default_factory=CircleRule)
    disk: DiskRule = field(default_factory=DiskRule)
    r_max: float = DEFAULT_R_MAX

    def describe(self) -> dict:
        return {
            "circle_n": self.circle.n,
            "disk_nr": self.disk.nr,
            "disk_nt": self.disk.nt,
            "collision_eps": self.disk.collision_eps,
            "r_max": self.r_max,
        }


# --- integrals ---

def circle_integral(integrand: Callable[[np.ndarray], np.ndarray], rule: Optional[CircleRule] = None):
    """(1/2pi) * sum integrand(t_m) * 2pi/N, the normalized circle integral."""
    rule = rule or CircleRule()
    values = np.asarray(integrand(rule.nodes), dtype=complex)
    return complex(np.sum(values * rule.weights)) / (2 * math.pi)


def disk_integral(
    integrand: Callable[[np.ndarray], np.ndarray],
    rule=None,
    z: Optional[complex] = None,
):
    """
    Sum of integrand(node) * weight over a disk rule.

    Args:
        integrand: vectorized map from complex nodes to complex values
        rule: DiskRule or a centred node set (default DiskRule())
        z: evaluation point to guard against node collisions

    Raises:
        NodeCollisionError: a node lies within collision_eps of z
        QuadratureError: the integrand is not finite at some node
    """
    if rule is None:
        rule = DiskRule()
    nodes, weights = rule.nodes, rule.weights
    if z is not None:
        gap = np.abs(nodes - z)
        index = int(np.argmin(gap))
        if gap[index] < rule.collision_eps:
            raise NodeCollisionError(
                f"Node {index} at {complex(nodes[index])} is within "
                f"{rule.collision_eps:g} of the evaluation point {complex(z)}"
            )
    values = np.asarray(integrand(nodes), dtype=complex)
    bad = ~np.isfinite(values)
    if np.any(bad):
        index = int(np.flatnonzero(bad)[0])
        raise QuadratureError(
            f"Integrand is not finite at node {index} (zeta={complex(nodes[index])})"
        )
    return complex(np.sum(values * weights))


def _check_function_data(boundary: BoundaryFourierData) -> None:
    if boundary.kind != FUNCTION:
        raise KindError("Quadrature needs function data; pair distributions spectrally")


def _check_reach(z: np.ndarray, r_max: float) -> None:
    if np.any(np.abs(z) > r_max):
        raise DomainError(
            f"|z| exceeds {r_max} on the quadrature path; use the spectral path near the circle"
        )


def moment_integral(
    boundary: BoundaryFourierData,
    k: int,
    z,
    rule: Optional[CircleRule] = None,
    r_max: float = DEFAULT_R_MAX,
):
    """
    (1/2pi) int g(t) (zeta + z)/(zeta - z) (zeta - z + conj(zeta - z))^k dt, zeta = e^{it}.

    k = 0 is the Schwarz integral.
    """
    _check_function_data(boundary)
    rule = rule or CircleRule()
    z = np.asarray(z, dtype=complex)
    _check_reach(z, r_max)
    t = rule.nodes
    zeta = np.exp(1j * t)
    g = np.asarray(boundary.sample(t))
    zz = z[..., None]
    kernel = (zeta + zz) / (zeta - zz)
    if k:
        kernel = kernel * (2 * (zeta - zz).real) ** k
    out = np.sum(g * kernel * rule.weights, axis=-1) / (2 * math.pi)
    return out if out.ndim else complex(out)


def schwarz_integral(
    boundary: BoundaryFourierData,
    z,
    rule: Optional[CircleRule] = None,
    r_max: float = DEFAULT_R_MAX,
):
    """(1/2pi i) int_{|zeta|=1} gamma(zeta) (zeta + z)/(zeta - z) dzeta/zeta by the circle rule."""
    return moment_integral(boundary, 0, z, rule=rule, r_max=r_max)


def poisson_integral(
    boundary: BoundaryFourierData,
    z,
    rule: Optional[CircleRule] = None,
    r_max: float = DEFAULT_R_MAX,
):
    """(1/2pi) int g(e^{it}) P_r(theta - t) dt by the circle rule."""
    _check_function_data(boundary)
    rule = rule or CircleRule()
    z = np.asarray(z, dtype=complex)
    _check_reach(z, r_max)
    t = rule.nodes
    zeta = np.exp(1j * t)
    g = np.asarray(boundary.sample(t))
    zz = z[..., None]
    kernel = ((zeta + zz) / (zeta - zz)).real
    out = np.sum(g * kernel * rule.weights, axis=-1) / (2 * math.pi)
    return out if out.ndim else complex(out)
