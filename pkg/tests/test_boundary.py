"""
Tests for boundary data and kernel pairings.
"""

import logging
import math

import numpy as np
import pytest

from bicbound.boundary import (
    DISTRIBUTION,
    FUNCTION,
    BicomplexBoundaryData,
    BoundaryFourierData,
    fourier_from_samples,
    moment_pairing,
    pair_poisson_kernel,
    pair_schwarz_kernel,
)
from bicbound.errors import AliasingError, BicboundError, DomainError, KindError
from bicbound.polynomial import ComplexPolynomial
from bicbound.quadrature import conj_poisson, poisson

Z = ComplexPolynomial.z()
ZBAR = ComplexPolynomial.zbar()


class TestBoundaryFourierData:
    """Tests for BoundaryFourierData."""

    def test_cosine(self):
        d = BoundaryFourierData.cosine(1)
        assert d.coeffs == {-1: 0.5, 1: 0.5}
        assert d.kind == FUNCTION
        assert d.real

    def test_sample(self):
        t = np.linspace(0, 2 * math.pi, 17)
        d = BoundaryFourierData.cosine(2, amplitude=3) + BoundaryFourierData.sine(1)
        np.testing.assert_allclose(d.sample(t), 3 * np.cos(2 * t) + np.sin(t), atol=1e-14)

    def test_distribution_has_no_values(self):
        with pytest.raises(KindError):
            BoundaryFourierData.dirac(0.0).sample(0.0)

    def test_real_flag_checked(self):
        with pytest.raises(BicboundError):
            BoundaryFourierData({1: 1}, real=True)

    def test_unknown_kind(self):
        with pytest.raises(KindError):
            BoundaryFourierData({}, kind="measure")

    def test_dirac_coefficients(self):
        d = BoundaryFourierData.dirac(0.5, K=4)
        assert d.kind == DISTRIBUTION
        assert d.degree == 4
        for k in range(-4, 5):
            assert d.coefficient(k) == pytest.approx(np.exp(-0.5j * k) / (2 * math.pi))

    def test_real_part(self):
        d = BoundaryFourierData.exponential(1).real_part()
        assert d.real
        assert d.coefficient(1) == pytest.approx(0.5)
        assert d.coefficient(-1) == pytest.approx(0.5)

    def test_shifted(self):
        d = BoundaryFourierData.constant(2.0).shifted(3)
        assert d.coeffs == {3: 2}
        assert not d.real

    def test_add_keeps_distribution(self):
        d = BoundaryFourierData.cosine(1) + BoundaryFourierData.dirac(0.0, K=2)
        assert d.kind == DISTRIBUTION

    def test_dict_round_trip(self):
        d = BoundaryFourierData.sine(2, amplitude=0.5)
        assert BoundaryFourierData.from_dict(d.to_dict()) == d

    def test_component_kinds_must_match(self):
        with pytest.raises(KindError):
            BicomplexBoundaryData(BoundaryFourierData.zero(), BoundaryFourierData.dirac(0.0))


class TestFourierFromSamples:
    """Tests for fourier_from_samples."""

    def test_exact_for_trig_polynomials(self):
        t = 2 * math.pi * np.arange(16) / 16
        d = fourier_from_samples(np.cos(2 * t) + np.sin(t))
        expected = BoundaryFourierData.cosine(2) + BoundaryFourierData.sine(1)
        for k in range(-7, 8):
            assert d.coefficient(k) == pytest.approx(expected.coefficient(k), abs=1e-14)
        assert d.real

    def test_complex_samples(self):
        t = 2 * math.pi * np.arange(8) / 8
        d = fourier_from_samples(np.exp(1j * t))
        assert not d.real
        assert d.coefficient(1) == pytest.approx(1.0)

    def test_aliasing(self):
        with pytest.raises(AliasingError):
            fourier_from_samples(np.ones(8), K=4)
        with pytest.raises(AliasingError):
            fourier_from_samples([])

    def test_warns_on_discarded_energy(self, caplog):
        t = 2 * math.pi * np.arange(8) / 8
        with caplog.at_level(logging.WARNING, logger="bicbound.boundary"):
            d = fourier_from_samples(np.cos(4 * t), K=3)
        assert "above bandwidth" in caplog.text
        assert d.is_zero


class TestKernelPairings:
    """Tests for the exact Schwarz and Poisson pairings."""

    RADII = np.array([0.0, 0.3, 0.5])
    ANGLES = np.linspace(0, 2 * math.pi, 12, endpoint=False)

    def _grid(self):
        return np.meshgrid(self.RADII, self.ANGLES, indexing="ij")

    def test_delta_schwarz_pairing_is_the_kernel(self):
        r, theta = self._grid()
        d = BoundaryFourierData.dirac(0.0, K=64)
        expected = (poisson(r, theta) + 1j * conj_poisson(r, theta)) / (2 * math.pi)
        np.testing.assert_allclose(pair_schwarz_kernel(d, r, theta), expected, atol=1e-12)

    def test_delta_poisson_pairing(self):
        r, theta = self._grid()
        d = BoundaryFourierData.dirac(0.0, K=64)
        expected = poisson(r, theta) / (2 * math.pi)
        np.testing.assert_allclose(pair_poisson_kernel(d, r, theta), expected, atol=1e-12)

    def test_real_part_of_schwarz_is_poisson(self):
        r, theta = self._grid()
        d = BoundaryFourierData.cosine(3) + BoundaryFourierData.sine(1, amplitude=2)
        np.testing.assert_allclose(
            pair_schwarz_kernel(d, r, theta).real, pair_poisson_kernel(d, r, theta), atol=1e-12
        )

    def test_cosine_extension(self):
        d = BoundaryFourierData.cosine(1)
        assert d.schwarz_extension() == Z
        assert d.poisson_extension() == 0.5 * (Z + ZBAR)

    def test_radius_checked(self):
        d = BoundaryFourierData.cosine(1)
        with pytest.raises(DomainError):
            pair_schwarz_kernel(d, 1.0, 0.0)
        with pytest.raises(DomainError):
            pair_poisson_kernel(d, -0.1, 0.0)


class TestMomentPairing:
    """Tests for moment_pairing."""

    def test_order_zero(self):
        d = BoundaryFourierData.cosine(2) + BoundaryFourierData.constant(1.0)
        assert moment_pairing(d, 0) == d.schwarz_extension()

    def test_constant_first_moment(self):
        m = moment_pairing(BoundaryFourierData.constant(1.0), 1)
        z = 0.3 + 0.4j
        assert m(z) == pytest.approx(z - np.conj(z))

    def test_negative_order(self):
        with pytest.raises(BicboundError):
            moment_pairing(BoundaryFourierData.zero(), -1)
