"""
Tests for finite-difference checks and residual reports.
"""

import json

import numpy as np
import pytest

from bicbound.bicomplex import ONE, Bicomplex
from bicbound.boundary import BicomplexBoundaryData, BoundaryFourierData
from bicbound.errors import BicboundError, DomainError
from bicbound.operators import PolynomialSource
from bicbound.polynomial import ComplexPolynomial
from bicbound.solvers import (
    QUADRATURE,
    DirichletSpec,
    SchwarzSpec,
    SolutionField,
    solve_dirichlet,
    solve_schwarz_distributional,
    solve_schwarz_higher_order,
    solve_schwarz_homogeneous,
    solve_schwarz_nonhomogeneous,
)
from bicbound.verification import (
    bc_d,
    bc_dbar,
    bc_d_field,
    bc_dbar_field,
    dbar_power_field,
    exact_dbar_power_field,
    exact_laplacian_field,
    five_point_laplacian,
    laplacian_identity_check,
    residual_grid,
    residual_report,
    richardson_dbar_power_field,
    richardson_laplacian_field,
    solve_schwarz_poly_exact,
    wirtinger_dz,
    wirtinger_dzbar,
)

Z = ComplexPolynomial.z()
ZBAR = ComplexPolynomial.zbar()
COS = BoundaryFourierData.cosine(1)
ONE_DATA = BoundaryFourierData.constant(1.0)
ZERO = BoundaryFourierData.zero()
POINT = 0.3 + 0.2j


def _field(p: ComplexPolynomial) -> SolutionField:
    return SolutionField.from_polynomials(p, p, "test")


class TestWirtinger:
    """Tests for the Wirtinger difference quotients."""

    def test_linear(self):
        field = _field(Z)
        assert wirtinger_dz(field, POINT).isclose(ONE, atol=1e-8)
        assert wirtinger_dzbar(field, POINT).isclose(Bicomplex(), atol=1e-8)

    def test_stencil_must_stay_inside(self):
        with pytest.raises(DomainError):
            wirtinger_dz(_field(Z), 0.99995)

    def test_quadratic_is_exact(self):
        field = _field(Z * ZBAR)
        error = abs(wirtinger_dz(field, POINT, h=1e-2).plus - np.conj(POINT))
        assert error <= 1e-10

    def test_second_order_convergence_dz(self):
        # central differences are exact on quadratics, so use cubic fields
        field = _field(Z ** 2 * ZBAR)
        exact = 2 * POINT * np.conj(POINT)
        coarse = abs(wirtinger_dz(field, POINT, h=1e-2).plus - exact)
        fine = abs(wirtinger_dz(field, POINT, h=5e-3).plus - exact)
        assert 3.5 <= coarse / fine <= 4.5

    def test_second_order_convergence_dzbar(self):
        field = _field(Z * ZBAR ** 2)
        exact = 2 * POINT * np.conj(POINT)
        coarse = abs(wirtinger_dzbar(field, POINT, h=1e-2).minus - exact)
        fine = abs(wirtinger_dzbar(field, POINT, h=5e-3).minus - exact)
        assert 3.5 <= coarse / fine <= 4.5


class TestBicomplexOperators:
    """Tests for bc_dbar, bc_d and the Laplacian identity."""

    def test_bc_dbar_reproduces_source(self):
        spec = SchwarzSpec.first_order(ZERO, ZERO, source=PolynomialSource.constant(ONE))
        w = solve_schwarz_nonhomogeneous(spec)
        assert bc_dbar(w, POINT).isclose(ONE, atol=1e-6)

    def test_bc_d_of_holomorphic_minus(self):
        w = SolutionField.from_polynomials(ZBAR, Z, "test")
        assert bc_d(w, POINT).isclose(ONE, atol=1e-8)
        assert bc_dbar(w, POINT).isclose(Bicomplex(), atol=1e-8)

    def test_derivative_fields(self):
        w = SolutionField.from_polynomials(Z ** 2, ZBAR ** 2, "test")
        plus, minus = bc_dbar_field(w).components(np.array([POINT]))
        assert plus[0] == pytest.approx(2 * POINT, abs=1e-8)
        assert minus[0] == pytest.approx(2 * np.conj(POINT), abs=1e-8)
        plus, minus = bc_d_field(w).components(np.array([POINT]))
        assert abs(plus[0]) <= 1e-8
        assert abs(minus[0]) <= 1e-8

    def test_dbar_power_field(self):
        w = SolutionField.from_polynomials(Z ** 2, ZBAR ** 2, "test")
        second = dbar_power_field(w, 2, h=1e-3)
        assert second.provenance == "dbar(dbar(test))"
        assert second(POINT).isclose(Bicomplex(2, 0), atol=1e-6)

    def test_five_point_laplacian(self):
        assert five_point_laplacian(_field(Z * ZBAR), POINT).isclose(Bicomplex(4, 0), atol=1e-6)

    @pytest.mark.parametrize(
        "p",
        [0.25 * (Z + ZBAR) ** 2, Z * ZBAR, Z ** 3 * ZBAR, (1 + 2j) * Z ** 2 * ZBAR ** 2],
    )
    def test_laplacian_identity(self, p):
        assert laplacian_identity_check(_field(p), POINT) <= 1e-4


class TestResidualReport:
    """Tests for residual_report."""

    def test_grid(self):
        points = residual_grid()
        assert points.shape == (15 * 16,)
        assert np.max(np.abs(points)) == pytest.approx(0.9)
        assert np.min(np.abs(points)) == pytest.approx(0.06)

    def test_dirichlet_zero(self):
        spec = DirichletSpec(BicomplexBoundaryData(ZERO, ZERO))
        report = residual_report(spec, solve_dirichlet(spec))
        assert report.passed
        assert report.pde_residual_max == 0.0
        assert report.boundary_checked

    def test_dirichlet_exponential(self):
        g = BoundaryFourierData.exponential(1)
        spec = DirichletSpec(BicomplexBoundaryData(g, g))
        report = residual_report(spec, solve_dirichlet(spec))
        assert report.passed
        assert report.problem == "dirichlet"
        assert report.boundary_mismatch_max < report.boundary_mismatch_coarse

    def test_homogeneous_cosine(self):
        spec = SchwarzSpec.first_order(COS, COS)
        report = residual_report(spec, solve_schwarz_homogeneous(COS, COS))
        assert report.passed
        assert report.boundary_checked
        assert report.boundary_mismatch_max == pytest.approx(1e-3, rel=1e-2)
        assert report.boundary_mismatch_coarse == pytest.approx(1e-2, rel=1e-2)

    def test_nonhomogeneous(self):
        spec = SchwarzSpec.first_order(ZERO, ZERO, source=PolynomialSource.constant(ONE))
        report = residual_report(spec, solve_schwarz_nonhomogeneous(spec))
        assert report.passed
        assert report.pde_residual_max <= 1e-5
        assert max(report.origin_error) <= 1e-12

    def test_negative_control_fails(self, caplog):
        spec = SchwarzSpec.first_order(COS, COS)
        field = solve_schwarz_homogeneous(COS, COS).with_offset(ComplexPolynomial(), 0.01 * ZBAR)
        report = residual_report(spec, field)
        assert not report.passed
        assert report.pde_residual_max == pytest.approx(0.01 / np.sqrt(2), rel=1e-3)
        assert report.violations()
        assert "Residual check failed" in caplog.text

    def test_wrong_constant_fails(self):
        spec = SchwarzSpec.first_order(COS, COS, c_minus=1.0)
        report = residual_report(spec, solve_schwarz_homogeneous(COS, COS))
        assert not report.origin_ok
        assert report.pde_ok

    def test_distribution_skips_boundary(self):
        delta = BoundaryFourierData.dirac(0.0, K=8)
        spec = SchwarzSpec.first_order(delta, delta)
        report = residual_report(spec, solve_schwarz_distributional(spec))
        assert not report.boundary_checked
        assert report.passed

    def test_quadrature_field(self):
        spec = SchwarzSpec.first_order(COS, COS)
        report = residual_report(spec, solve_schwarz_homogeneous(COS, COS, path=QUADRATURE))
        assert report.path == QUADRATURE
        assert not report.boundary_checked
        assert report.pde_tolerance == 1e-3
        assert report.passed

    def test_order_two(self):
        spec = SchwarzSpec(
            2,
            (COS, ONE_DATA),
            (COS, ONE_DATA),
            (0.5, -0.25),
            (-1.0, 0.75),
            PolynomialSource.constant(ONE),
        )
        report = residual_report(spec, solve_schwarz_higher_order(spec))
        assert report.order == 2
        assert report.passed

    def test_order_three(self):
        spec = SchwarzSpec(3, (COS, ONE_DATA, ZERO), (ZERO, COS, ONE_DATA), (0.1, 0.2, 0.3), (0.0, -0.5, 1.0))
        report = residual_report(spec, solve_schwarz_higher_order(spec))
        assert report.order == 3
        assert report.origin_tolerance == pytest.approx(1e-10)
        assert report.passed

    def test_tolerance_scale(self):
        spec = SchwarzSpec.first_order(COS, COS)
        report = residual_report(spec, solve_schwarz_homogeneous(COS, COS), tolerance_scale=10)
        assert report.pde_tolerance == pytest.approx(1e-4)

    def test_to_dict(self):
        spec = SchwarzSpec.first_order(COS, COS)
        data = residual_report(spec, solve_schwarz_homogeneous(COS, COS)).to_dict()
        assert data["passed"] is True
        assert data["problem"] == "schwarz"
        assert isinstance(data["origin_error"], list)
        assert json.loads(json.dumps(data)) == data

    def test_unknown_problem(self):
        with pytest.raises(TypeError):
            residual_report(object(), solve_schwarz_homogeneous(COS, COS))


class TestExactAndExtrapolatedDerivatives:
    """Tests for exact polynomial derivatives and Richardson extrapolation."""

    def test_exact_dbar_power(self):
        w = SolutionField.from_polynomials(Z ** 2, ZBAR ** 2, "test")
        second = exact_dbar_power_field(w, 2)
        assert second.provenance == "dbar^2(test)"
        assert second.polynomials == (ComplexPolynomial.constant(2), ComplexPolynomial.constant(2))

    def test_exact_dbar_power_zero_is_the_field(self):
        w = SolutionField.from_polynomials(Z * ZBAR, ZBAR, "test")
        assert exact_dbar_power_field(w, 0).polynomials == (Z * ZBAR, ZBAR)

    def test_exact_laplacian(self):
        lap = exact_laplacian_field(_field(Z * ZBAR + Z ** 3))
        assert lap.polynomials == (ComplexPolynomial.constant(4), ComplexPolynomial.constant(4))

    def test_exact_needs_polynomials(self):
        w = SolutionField(plus=lambda z: z, minus=lambda z: z, provenance="grid")
        with pytest.raises(BicboundError):
            exact_dbar_power_field(w, 1)
        with pytest.raises(BicboundError):
            exact_laplacian_field(w)

    def test_richardson_beats_plain_differences(self):
        # exp(|z|^2) is not holomorphic, so the h^2 errors do not cancel
        w = SolutionField(
            plus=lambda z: np.exp(z * np.conj(z)),
            minus=lambda z: np.exp(z * np.conj(z)),
            provenance="gauss",
        )
        gauss = np.exp(abs(POINT) ** 2)
        exact_plus, exact_minus = np.conj(POINT) * gauss, POINT * gauss
        plain_plus, _ = dbar_power_field(w, 1, h=1e-2).components(np.array([POINT]))
        rich_plus, rich_minus = richardson_dbar_power_field(w, 1, h=1e-2).components(np.array([POINT]))
        assert abs(plain_plus[0] - exact_plus) >= 1e-6
        assert abs(rich_plus[0] - exact_plus) <= 1e-7
        assert abs(rich_minus[0] - exact_minus) <= 1e-7

    def test_richardson_laplacian(self):
        w = SolutionField(
            plus=lambda z: np.exp(z * np.conj(z)),
            minus=lambda z: np.exp(z * np.conj(z)),
            provenance="gauss",
        )
        r2 = abs(POINT) ** 2
        exact = 4 * (1 + r2) * np.exp(r2)
        plus, _ = richardson_laplacian_field(w, h=1e-2).components(np.array([POINT]))
        assert abs(plus[0] - exact) <= 1e-6

    def test_richardson_order_zero(self):
        w = _field(Z)
        assert richardson_dbar_power_field(w, 0) is w


class TestReportsOnDemandingData:
    """Reports on correct solutions of high order or wide bandwidth."""

    def test_order_three_with_polynomial_source(self):
        source = PolynomialSource({(1, 0): Bicomplex(1, 0.5j), (0, 2): Bicomplex(0.3, -1)})
        spec = SchwarzSpec(
            3, (COS, ONE_DATA, ZERO), (ZERO, COS, ONE_DATA), (0.1, 0.2, 0.3), (0.0, -0.5, 1.0), source
        )
        report = residual_report(spec, solve_schwarz_higher_order(spec))
        assert report.passed, report.violations()
        assert report.pde_residual_max <= 1e-10
        assert report.origin_tolerance == pytest.approx(1e-10)

    def test_sharp_delta_schwarz(self):
        delta = BoundaryFourierData.dirac(0.0, K=64)
        spec = SchwarzSpec.first_order(delta, delta)
        report = residual_report(spec, solve_schwarz_distributional(spec))
        assert report.passed, report.violations()
        assert report.pde_residual_max <= 1e-12

    def test_sharp_delta_dirichlet(self):
        delta = BoundaryFourierData.dirac(0.0, K=64)
        spec = DirichletSpec(BicomplexBoundaryData(delta, delta))
        report = residual_report(spec, solve_dirichlet(spec))
        assert report.passed, report.violations()
        assert report.pde_residual_max <= 1e-12

    def test_high_frequency_dirichlet(self):
        g = BoundaryFourierData.cosine(12)
        spec = DirichletSpec(BicomplexBoundaryData(g, g))
        report = residual_report(spec, solve_dirichlet(spec))
        assert report.passed, report.violations()
        assert report.boundary_checked
        assert report.pde_residual_max <= 1e-10

    def test_high_frequency_dirichlet_quadrature(self):
        g = BoundaryFourierData.cosine(12)
        spec = DirichletSpec(BicomplexBoundaryData(g, g))
        report = residual_report(spec, solve_dirichlet(spec, path=QUADRATURE))
        assert report.path == QUADRATURE
        assert report.passed, report.violations()
        assert report.pde_residual_max <= 1e-5

    def test_wrong_high_frequency_field_still_fails(self):
        g = BoundaryFourierData.cosine(12)
        spec = DirichletSpec(BicomplexBoundaryData(g, g))
        field = solve_dirichlet(spec).with_offset(0.01 * Z * ZBAR, ComplexPolynomial())
        report = residual_report(spec, field)
        assert not report.pde_ok
        assert report.pde_residual_max == pytest.approx(0.04 / np.sqrt(2), rel=1e-9)


class TestExactOracle:
    """The oracle is reachable from the verification module."""

    def test_one(self):
        assert solve_schwarz_poly_exact(ComplexPolynomial.constant(1)) == ZBAR - Z
