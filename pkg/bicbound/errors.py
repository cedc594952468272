"""
Exception types for bicbound.

Every error is a ValueError so callers that only care about "bad input"
can catch the builtin.
"""

from typing import Optional


class BicboundError(ValueError):
    """Base class for all bicbound errors."""


class DomainError(BicboundError):
    """A point, radius or stencil lies outside the admissible region."""


class KindError(BicboundError):
    """The operation is not defined for this kind of boundary data."""


class AliasingError(BicboundError):
    """Too few samples to resolve the requested bandwidth."""


class QuadratureError(BicboundError):
    """The integrand could not be evaluated on a quadrature node."""


class NodeCollisionError(QuadratureError):
    """A quadrature node falls on (or next to) the evaluation point."""


class SpecError(BicboundError):
    """
    Invalid problem specification.

    Attributes:
        pointer: JSON pointer to the offending element ("" for the root)
    """

    def __init__(self, message: str, pointer: str = ""):
        self.pointer = pointer
        where = pointer or "/"
        super().__init__(f"{where}: {message}")
