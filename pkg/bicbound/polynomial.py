"""
Polynomials in z and conj(z).

Every closed-form object in bicbound (sources, T-operator images,
Schwarz and Poisson extensions of trigonometric data, spectral
solutions) is a finite sum c_ab z^a zbar^b. Keeping them symbolic makes
the T operator closed under iteration and lets the solvers return exact
fields.
"""

from typing import Dict, Iterator, Mapping, Tuple, Union

import numpy as np

Bidegree = Tuple[int, int]
Number = Union[int, float, complex]


class ComplexPolynomial:
    """
    Immutable polynomial sum c_ab z^a zbar^b with complex coefficients.

    Example:
        p = ComplexPolynomial({(1, 1): 1, (0, 0): -1})   # |z|^2 - 1
        p.evaluate(0.5)                                   # -0.75
        p.dzbar()                                         # z
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Bidegree, Number], None] = None):
        clean: Dict[Bidegree, complex] = {}
        for (a, b), c in (terms or {}).items():
            a, b = int(a), int(b)
            if a < 0 or b < 0:
                raise ValueError(f"Negative degree in term ({a}, {b})")
            c = complex(c)
            if c != 0:
                clean[(a, b)] = clean.get((a, b), 0j) + c
        self._terms = {k: v for k, v in sorted(clean.items()) if v != 0}

    @classmethod
    def constant(cls, c: Number) -> "ComplexPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def z(cls) -> "ComplexPolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def zbar(cls) -> "ComplexPolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def holomorphic(cls, coeffs: Mapping[int, Number]) -> "ComplexPolynomial":
        """sum_k coeffs[k] z^k."""
        return cls({(k, 0): c for k, c in coeffs.items()})

    @property
    def terms(self) -> Dict[Bidegree, complex]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=0)

    def coefficient(self, a: int, b: int) -> complex:
        return self._terms.get((a, b), 0j)

    def evaluate(self, z):
        """Evaluate at a scalar or an array of points."""
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        if not self._terms:
            return out if out.ndim else complex(out)
        max_a = max(a for a, _ in self._terms)
        max_b = max(b for _, b in self._terms)
        zbar = np.conj(z)
        pow_z = [np.ones_like(z)]
        for _ in range(max_a):
            pow_z.append(pow_z[-1] * z)
        pow_zbar = [np.ones_like(z)]
        for _ in range(max_b):
            pow_zbar.append(pow_zbar[-1] * zbar)
        for (a, b), c in self._terms.items():
            out = out + c * pow_z[a] * pow_zbar[b]
        return out if out.ndim else complex(out)

    __call__ = evaluate

    def conj(self) -> "ComplexPolynomial":
        """The polynomial whose values are the conjugates of this one's."""
        return ComplexPolynomial({(b, a): np.conj(c) for (a, b), c in self._terms.items()})

    def dz(self) -> "ComplexPolynomial":
        return ComplexPolynomial(
            {(a - 1, b): a * c for (a, b), c in self._terms.items() if a > 0}
        )

    def dzbar(self) -> "ComplexPolynomial":
        return ComplexPolynomial(
            {(a, b - 1): b * c for (a, b), c in self._terms.items() if b > 0}
        )

    def boundary_trace(self) -> Dict[int, complex]:
        """Fourier coefficients of t -> p(e^{it}) (z^a zbar^b becomes e^{i(a-b)t})."""
        coeffs: Dict[int, complex] = {}
        for (a, b), c in self._terms.items():
            coeffs[a - b] = coeffs.get(a - b, 0j) + c
        return {k: v for k, v in sorted(coeffs.items()) if v != 0}

    def pruned(self, atol: float = 1e-15) -> "ComplexPolynomial":
        return ComplexPolynomial({k: c for k, c in self._terms.items() if abs(c) > atol})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0j) + c
        return ComplexPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "ComplexPolynomial":
        return ComplexPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return ComplexPolynomial({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        terms: Dict[Bidegree, complex] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, 0j) + c1 * c2
        return ComplexPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ComplexPolynomial":
        if k < 0:
            raise ValueError("Negative powers are not polynomials")
        result = ComplexPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __iter__(self) -> Iterator[Tuple[Bidegree, complex]]:
        return iter(self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "ComplexPolynomial(0)"
        parts = [f"({c:.6g})z^{a}zbar^{b}" for (a, b), c in self._terms.items()]
        return "ComplexPolynomial(" + " + ".join(parts) + ")"


def _coerce(value):
    if isinstance(value, ComplexPolynomial):
        return value
    if isinstance(value, (int, float, complex, np.number)):
        return ComplexPolynomial.constant(value)
    return NotImplemented
