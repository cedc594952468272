"""
Boundary data on the unit circle.

Functions and distributions on the circle are both carried as finite
two-sided Fourier coefficient sequences with the convention

    g^(k) = (1/2pi) * integral_0^2pi g(t) e^{-ikt} dt,

so that a truncated Dirac delta at t0 has g^(k) = e^{-ik t0} / 2pi.
Pairings against the Poisson and Schwarz kernels reduce to finitely many
moments and are evaluated exactly.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Sequence

import numpy as np

from .errors import AliasingError, BicboundError, DomainError, KindError
from .polynomial import ComplexPolynomial

logger = logging.getLogger(__name__)

FUNCTION = "function"
DISTRIBUTION = "distribution"
KINDS = (FUNCTION, DISTRIBUTION)

REALITY_TOL = 1e-12
DEFAULT_DELTA_K = 64


@dataclass(frozen=True)
class BoundaryFourierData:
    """
    Trigonometric-polynomial data on the circle.

    Attributes:
        coeffs: mode k -> g^(k); missing modes are zero
        kind: "function" (has pointwise values) or "distribution"
        real: data is real-valued, i.e. g^(-k) = conj(g^(k))
    """

    coeffs: Dict[int, complex] = field(default_factory=dict)
    kind: str = FUNCTION
    real: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise KindError(f"Unknown data kind: {self.kind!r}. Available: {list(KINDS)}")
        clean = {}
        for k, c in self.coeffs.items():
            c = complex(c)
            if c != 0:
                clean[int(k)] = c
        clean = dict(sorted(clean.items()))
        object.__setattr__(self, "coeffs", clean)
        if self.real:
            for k, c in clean.items():
                if abs(clean.get(-k, 0j) - c.conjugate()) > REALITY_TOL:
                    raise BicboundError(
                        f"Data marked real but g^({-k}) != conj(g^({k}))"
                    )

    # --- constructors ---

    @classmethod
    def zero(cls, kind: str = FUNCTION) -> "BoundaryFourierData":
        return cls({}, kind=kind)

    @classmethod
    def constant(cls, value: float, kind: str = FUNCTION) -> "BoundaryFourierData":
        return cls({0: value}, kind=kind, real=isinstance(value, (int, float)))

    @classmethod
    def cosine(cls, k: int = 1, amplitude: float = 1.0, kind: str = FUNCTION) -> "BoundaryFourierData":
        """amplitude * cos(k t)."""
        if k == 0:
            return cls.constant(amplitude, kind=kind)
        return cls({k: amplitude / 2, -k: amplitude / 2}, kind=kind)

    @classmethod
    def sine(cls, k: int = 1, amplitude: float = 1.0, kind: str = FUNCTION) -> "BoundaryFourierData":
        """amplitude * sin(k t)."""
        if k == 0:
            return cls.zero(kind)
        return cls({k: amplitude / 2j, -k: -amplitude / 2j}, kind=kind)

    @classmethod
    def exponential(cls, k: int = 1, kind: str = FUNCTION) -> "BoundaryFourierData":
        """e^{ikt}; complex-valued unless k = 0."""
        return cls({k: 1}, kind=kind, real=(k == 0))

    @classmethod
    def dirac(cls, t0: float = 0.0, K: int = DEFAULT_DELTA_K) -> "BoundaryFourierData":
        """Dirac delta at t0 truncated to modes |k| <= K."""
        if K < 0:
            raise BicboundError(f"Truncation K must be >= 0, got {K}")
        coeffs = {k: np.exp(-1j * k * t0) / (2 * math.pi) for k in range(-K, K + 1)}
        # exact symmetry so the real flag survives rounding
        for k in range(1, K + 1):
            coeffs[-k] = complex(coeffs[k]).conjugate()
        return cls(coeffs, kind=DISTRIBUTION, real=True)

    # --- views ---

    @property
    def degree(self) -> int:
        return max((abs(k) for k in self.coeffs), default=0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> complex:
        return self.coeffs.get(k, 0j)

    def sample(self, t):
        """Pointwise values sum g^(k) e^{ikt}; undefined for distributions."""
        if self.kind != FUNCTION:
            raise KindError("A distribution has no pointwise values")
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape, dtype=complex)
        for k, c in self.coeffs.items():
            out = out + c * np.exp(1j * k * t)
        return out if out.ndim else complex(out)

    # --- algebra ---

    def shifted(self, l: int) -> "BoundaryFourierData":
        """Multiply by e^{ilt}."""
        return BoundaryFourierData(
            {k + l: c for k, c in self.coeffs.items()},
            kind=self.kind,
            real=self.real and l == 0,
        )

    def real_part(self) -> "BoundaryFourierData":
        keys = set(self.coeffs) | {-k for k in self.coeffs}
        coeffs = {}
        for k in sorted(keys):
            coeffs[k] = (self.coefficient(k) + self.coefficient(-k).conjugate()) / 2
        for k in keys:
            if k > 0:
                coeffs[-k] = complex(coeffs[k]).conjugate()
            elif k == 0:
                coeffs[0] = complex(coeffs[0].real, 0)
        return BoundaryFourierData(coeffs, kind=self.kind, real=True)

    def scaled(self, factor: complex) -> "BoundaryFourierData":
        real = self.real and complex(factor).imag == 0
        return BoundaryFourierData(
            {k: c * factor for k, c in self.coeffs.items()}, kind=self.kind, real=real
        )

    def __add__(self, other: "BoundaryFourierData") -> "BoundaryFourierData":
        if not isinstance(other, BoundaryFourierData):
            return NotImplemented
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0j) + c
        kind = DISTRIBUTION if DISTRIBUTION in (self.kind, other.kind) else FUNCTION
        return BoundaryFourierData(coeffs, kind=kind, real=self.real and other.real)

    def __neg__(self) -> "BoundaryFourierData":
        return self.scaled(-1.0)

    def __sub__(self, other: "BoundaryFourierData") -> "BoundaryFourierData":
        return self + (-other)

    def as_kind(self, kind: str) -> "BoundaryFourierData":
        return BoundaryFourierData(self.coeffs, kind=kind, real=self.real)

    # --- kernel extensions ---

    def schwarz_extension(self) -> ComplexPolynomial:
        """g^(0) + 2 sum_{k>=1} g^(k) z^k, the pairing against P + iQ."""
        terms = {(0, 0): self.coefficient(0)}
        for k, c in self.coeffs.items():
            if k > 0:
                terms[(k, 0)] = 2 * c
        return ComplexPolynomial(terms)

    def poisson_extension(self) -> ComplexPolynomial:
        """sum_k g^(k) r^|k| e^{ik theta}, the harmonic extension."""
        terms = {}
        for k, c in self.coeffs.items():
            terms[(k, 0) if k >= 0 else (0, -k)] = c
        return ComplexPolynomial(terms)

    # --- serialization ---

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "real": self.real,
            "coeffs": [[k, c.real, c.imag] for k, c in self.coeffs.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "BoundaryFourierData":
        kind = data.get("kind", FUNCTION)
        real = bool(data.get("real", True))
        coeffs = {int(k): complex(re, im) for k, re, im in data.get("coeffs", [])}
        return cls(coeffs, kind=kind, real=real)

    def __repr__(self) -> str:
        return f"BoundaryFourierData(kind={self.kind}, real={self.real}, K={self.degree}, modes={len(self.coeffs)})"


@dataclass(frozen=True)
class BicomplexBoundaryData:
    """g = p+ g+ + p- g-, stored by idempotent components."""

    plus: BoundaryFourierData
    minus: BoundaryFourierData

    def __post_init__(self):
        if self.plus.kind != self.minus.kind:
            raise KindError(
                f"Component kinds differ: plus is {self.plus.kind}, minus is {self.minus.kind}"
            )

    @property
    def kind(self) -> str:
        return self.plus.kind


def sample(d: BoundaryFourierData, t):
    return d.sample(t)


def fourier_from_samples(
    samples: Sequence[complex],
    K: Optional[int] = None,
    kind: str = FUNCTION,
    tol: float = 1e-14,
) -> BoundaryFourierData:
    """
    Discrete Fourier coefficients of N uniform samples at t_m = 2 pi m / N.

    Exact for trigonometric polynomials of degree <= K. Coefficients
    smaller than tol * max|sample| are dropped.

    Args:
        samples: values g(t_m), m = 0..N-1
        K: target bandwidth (default (N - 1) // 2)
        kind: kind flag of the result
        tol: relative threshold for dropping coefficients

    Raises:
        AliasingError: if N < 2K + 1
    """
    values = np.asarray(samples)
    n = values.shape[0] if values.ndim else 0
    if n == 0:
        raise AliasingError("No samples given")
    if K is None:
        K = (n - 1) // 2
    if n < 2 * K + 1:
        raise AliasingError(
            f"{n} samples cannot resolve degree {K}; need at least {2 * K + 1}"
        )

    real = not np.iscomplexobj(values) or bool(np.all(np.abs(values.imag) == 0))
    spectrum = np.fft.fft(values.astype(complex)) / n
    scale = float(np.max(np.abs(values))) if n else 0.0
    threshold = tol * scale

    dropped = [spectrum[m] for m in range(K + 1, n - K)]
    if dropped and np.max(np.abs(dropped)) > max(threshold, 1e-300):
        logger.warning(
            "Discarding energy %.3e above bandwidth K=%d; samples may be aliased",
            float(np.max(np.abs(dropped))), K,
        )

    coeffs: Dict[int, complex] = {}
    for k in range(-K, K + 1):
        coeffs[k] = complex(spectrum[k % n])
    if real:
        coeffs[0] = complex(coeffs[0].real, 0)
        for k in range(1, K + 1):
            c = (coeffs[k] + coeffs[-k].conjugate()) / 2
            coeffs[k] = c
            coeffs[-k] = c.conjugate()

    kept = {k: c for k, c in coeffs.items() if abs(c) > threshold}
    return BoundaryFourierData(kept, kind=kind, real=real)


def _check_radius(r) -> None:
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("Radius must satisfy 0 <= r < 1")


def pair_schwarz_kernel(d: BoundaryFourierData, r, theta):
    """
    (1/2pi) <d, P_r(theta - .) + i Q_r(theta - .)>, computed exactly.

    For function data this is the Schwarz integral of d.
    """
    _check_radius(r)
    z = np.asarray(r) * np.exp(1j * np.asarray(theta, dtype=float))
    return d.schwarz_extension().evaluate(z)


def pair_poisson_kernel(d: BoundaryFourierData, r, theta):
    """(1/2pi) <d, P_r(theta - .)>, the harmonic extension of d."""
    _check_radius(r)
    z = np.asarray(r) * np.exp(1j * np.asarray(theta, dtype=float))
    return d.poisson_extension().evaluate(z)


def moment_pairing(d: BoundaryFourierData, k: int) -> ComplexPolynomial:
    """
    (1/2pi) <d, (P + iQ)(theta - .) (zeta - z + conj(zeta - z))^k> as a polynomial in z.

    With zeta = e^{it} the weight is (zeta + conj(zeta) - s)^k, s = z + zbar,
    so the pairing expands into Schwarz extensions of shifted data.
    """
    if k < 0:
        raise BicboundError(f"Moment order must be >= 0, got {k}")
    s = ComplexPolynomial({(1, 0): 1, (0, 1): 1})
    result = ComplexPolynomial()
    for j in range(k + 1):
        inner = ComplexPolynomial()
        for m in range(j + 1):
            inner = inner + math.comb(j, m) * d.shifted(2 * m - j).schwarz_extension()
        result = result + math.comb(k, j) * ((-s) ** (k - j)) * inner
    return result
