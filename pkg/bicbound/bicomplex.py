"""
Bicomplex number algebra.

A bicomplex number is a pair of complex numbers written z1 + j z2 with
j^2 = -1 and ij = ji. Every bicomplex number also has a unique idempotent
form p+ z+ + p- z- with p± = (1 ± ji)/2, in which multiplication acts
componentwise.

Example:
    from bicbound.bicomplex import Bicomplex, P_PLUS, P_MINUS

    w = Bicomplex.from_idempotent(2, 3)
    w.plus, w.minus          # (2, 3)
    (P_PLUS * P_MINUS).is_zero  # True
"""

import math
from dataclasses import dataclass
from typing import Tuple, Union

Scalar = Union[int, float, complex]


@dataclass(frozen=True)
class Bicomplex:
    """
    A bicomplex number stored by its cartesian components.

    The idempotent components are computed on demand:
    z+ = z1 - i z2 and z- = z1 + i z2.
    """

    z1: complex = 0j
    z2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))

    @classmethod
    def from_idempotent(cls, z_plus: Scalar, z_minus: Scalar) -> "Bicomplex":
        """Build p+ z+ + p- z- in cartesian form."""
        z_plus = complex(z_plus)
        z_minus = complex(z_minus)
        return cls((z_plus + z_minus) / 2, 1j * (z_plus - z_minus) / 2)

    @classmethod
    def from_tuple(cls, values) -> "Bicomplex":
        """Inverse of to_tuple: [Re z1, Im z1, Re z2, Im z2]."""
        re1, im1, re2, im2 = (float(v) for v in values)
        return cls(complex(re1, im1), complex(re2, im2))

    @property
    def plus(self) -> complex:
        return self.z1 - 1j * self.z2

    @property
    def minus(self) -> complex:
        return self.z1 + 1j * self.z2

    def to_idempotent(self) -> Tuple[complex, complex]:
        return self.plus, self.minus

    def to_tuple(self) -> Tuple[float, float, float, float]:
        return (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    @property
    def is_zero(self) -> bool:
        return self.z1 == 0 and self.z2 == 0

    def norm(self) -> float:
        """sqrt((|z+|^2 + |z-|^2) / 2), equal to the euclidean norm of (z1, z2)."""
        return math.sqrt((abs(self.plus) ** 2 + abs(self.minus) ** 2) / 2)

    def is_zero_divisor(self, atol: float = 1e-14) -> bool:
        """True when exactly one idempotent component vanishes."""
        plus_zero = abs(self.plus) <= atol
        minus_zero = abs(self.minus) <= atol
        return plus_zero != minus_zero

    def isclose(self, other: "Bicomplex", atol: float = 1e-12) -> bool:
        other = _coerce(other)
        return abs(self.z1 - other.z1) <= atol and abs(self.z2 - other.z2) <= atol

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1, -self.z2)

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            return mul(self, other)
        if isinstance(other, (int, float, complex)):
            return Bicomplex(self.z1 * other, self.z2 * other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Bicomplex({self.z1!r}, {self.z2!r})"


def _coerce(value):
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, (int, float, complex)):
        return Bicomplex(value, 0)
    return NotImplemented


def mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    """(a1 b1 - a2 b2) + j (a1 b2 + a2 b1)."""
    return Bicomplex(a.z1 * b.z1 - a.z2 * b.z2, a.z1 * b.z2 + a.z2 * b.z1)


def to_idempotent(z: Bicomplex) -> Tuple[complex, complex]:
    return z.to_idempotent()


def from_idempotent(z_plus: Scalar, z_minus: Scalar) -> Bicomplex:
    return Bicomplex.from_idempotent(z_plus, z_minus)


def bnorm(z: Bicomplex) -> float:
    return z.norm()


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 0)
J = Bicomplex(0, 1)
P_PLUS = Bicomplex(0.5, 0.5j)
P_MINUS = Bicomplex(0.5, -0.5j)
