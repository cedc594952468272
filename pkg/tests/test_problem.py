"""
Tests for problem spec parsing and dispatch.
"""

import copy
import json

import numpy as np
import pytest

from bicbound.boundary import DISTRIBUTION, BoundaryFourierData
from bicbound.demos import DEMOS, get_demo
from bicbound.errors import SpecError
from bicbound.polynomial import ComplexPolynomial
from bicbound.problem import (
    load_problem,
    parse_boundary,
    parse_polynomial,
    parse_problem,
    parse_source,
    problem_to_dict,
    solve_problem,
    verify_problem,
)
from bicbound.solvers import QUADRATURE, DirichletSpec, SchwarzSpec

COS_ENTRY = {"coeffs": [[1, 0.5, 0], [-1, 0.5, 0]]}

SCHWARZ = {
    "problem": "schwarz",
    "boundary": {"plus": [COS_ENTRY], "minus": [{"samples": [1, 0, -1, 0]}]},
}


def _with(**changes):
    data = copy.deepcopy(SCHWARZ)
    data.update(changes)
    return data


def _pointer(data):
    with pytest.raises(SpecError) as excinfo:
        parse_problem(data)
    return excinfo.value.pointer


class TestParseBoundary:
    """Tests for parse_boundary."""

    def test_coefficients(self):
        b = parse_boundary(COS_ENTRY, "/b")
        assert b == BoundaryFourierData.cosine(1)

    def test_samples(self):
        b = parse_boundary({"samples": [1, 0, -1, 0]}, "/b")
        assert b.coefficient(1) == pytest.approx(0.5)
        assert b.coefficient(-1) == pytest.approx(0.5)
        assert b.real

    def test_complex_samples(self):
        b = parse_boundary({"samples": [[1, 0], [0, 1], [-1, 0], [0, -1]]}, "/b")
        assert not b.real
        assert b.coefficient(1) == pytest.approx(1)

    def test_delta(self):
        b = parse_boundary({"delta": {"t0": 0.5, "K": 8}}, "/b")
        assert b == BoundaryFourierData.dirac(0.5, 8)
        assert b.kind == DISTRIBUTION

    def test_delta_default_truncation(self):
        assert parse_boundary({"delta": {"t0": 0.5}}, "/b") == BoundaryFourierData.dirac(0.5, 64)
        assert parse_boundary({"delta": {"t0": 0.5}}, "/b", delta_k=4) == BoundaryFourierData.dirac(0.5, 4)
        # an explicit K wins over the configured default
        assert parse_boundary({"delta": {"K": 8}}, "/b", delta_k=4) == BoundaryFourierData.dirac(0.0, 8)

    def test_delta_with_distribution_kind(self):
        b = parse_boundary({"kind": "distribution", "delta": {"K": 2}}, "/b")
        assert b == BoundaryFourierData.dirac(0.0, 2)

    def test_delta_with_function_kind(self):
        with pytest.raises(SpecError, match="distribution") as excinfo:
            parse_boundary({"kind": "function", "delta": {"K": 2}}, "/b")
        assert excinfo.value.pointer == "/b/kind"

    def test_complex_coefficients(self):
        b = parse_boundary({"coeffs": [[2, 1, 0]]}, "/b")
        assert not b.real

    def test_errors(self):
        cases = [
            ({"coeffs": [[1, 0.5]]}, "/b/coeffs/0"),
            ({"coeffs": [[1.5, 0.5, 0]]}, "/b/coeffs/0/0"),
            ({"coeffs": [[1, "x", 0]]}, "/b/coeffs/0/1"),
            ({"samples": []}, "/b/samples"),
            ({"samples": [1, [0, 1, 2]]}, "/b/samples/1"),
            ({"samples": [1, 0, -1, 0], "K": 2}, "/b/samples"),
            ({"delta": {"K": -1}}, "/b/delta/K"),
            ({"kind": "measure"}, "/b/kind"),
            ({"coeffs": [[1, 1, 0]], "real": True}, "/b/coeffs"),
            ([1, 2], "/b"),
        ]
        for data, pointer in cases:
            with pytest.raises(SpecError) as excinfo:
                parse_boundary(data, "/b")
            assert excinfo.value.pointer == pointer


class TestParsePolynomials:
    """Tests for parse_polynomial and parse_source."""

    def test_polynomial(self):
        p = parse_polynomial({"terms": [[0, 1, 0.01, 0], [0, 1, 0.01, 0]]}, "/p")
        assert p == ComplexPolynomial({(0, 1): 0.02})

    def test_polynomial_errors(self):
        with pytest.raises(SpecError) as excinfo:
            parse_polynomial({"terms": [[0, -1, 1, 0]]}, "/p")
        assert excinfo.value.pointer == "/p/terms/0"

    def test_source(self):
        source = parse_source({"terms": [[0, 0, 1, 0, 0, 0]]})
        assert source.plus == ComplexPolynomial.constant(1)
        assert parse_source(None) is None
        assert parse_source({"terms": [[1, 0, 0, 0, 0, 0]]}) is None

    def test_source_errors(self):
        for row, pointer in (([0, 0, 1], "/source/terms/0"), ([0, 0, 1, "x", 0, 0], "/source/terms/0/3")):
            with pytest.raises(SpecError) as excinfo:
                parse_source({"terms": [row]})
            assert excinfo.value.pointer == pointer


class TestParseProblem:
    """Tests for parse_problem."""

    def test_schwarz(self):
        problem = parse_problem(SCHWARZ, name="cos")
        assert problem.problem == "schwarz"
        assert isinstance(problem.spec, SchwarzSpec)
        assert problem.spec.c_plus == (0.0,)
        assert problem.path == "spectral"
        assert problem.name == "cos"

    def test_dirichlet(self):
        entry = {"coeffs": [[1, 1, 0]]}
        problem = parse_problem({"problem": "dirichlet", "boundary": {"plus": entry, "minus": [entry]}})
        assert isinstance(problem.spec, DirichletSpec)

    def test_scalar_constants(self):
        problem = parse_problem(_with(constants={"plus": 2, "minus": [-1]}))
        assert problem.spec.c_plus == (2.0,)
        assert problem.spec.c_minus == (-1.0,)

    def test_inject(self):
        problem = parse_problem(_with(inject={"minus": {"terms": [[0, 1, 0.01, 0]]}}))
        assert problem.inject == (ComplexPolynomial(), ComplexPolynomial({(0, 1): 0.01}))

    def test_pointers(self):
        assert _pointer([]) == ""
        assert _pointer({"boundary": {}}) == ""
        assert _pointer(_with(problem="neumann")) == "/problem"
        assert _pointer(_with(path="fast")) == "/path"
        assert _pointer(_with(n=4)) == "/n"
        assert _pointer(_with(n=2)) == "/boundary/plus"
        assert _pointer(_with(constants={"plus": [0, 0]})) == "/constants/plus"
        assert _pointer(_with(constants={"minus": ["a"]})) == "/constants/minus/0"
        assert _pointer(_with(source={"terms": [[0, 0, 1]]})) == "/source/terms/0"
        assert _pointer(_with(inject={"minus": {"terms": [[0]]}})) == "/inject/minus/terms/0"

    def test_complex_schwarz_data(self):
        data = _with(boundary={"plus": [COS_ENTRY], "minus": [{"coeffs": [[1, 1, 0]]}]})
        assert _pointer(data) == "/boundary/minus/0"

    def test_mixed_kinds(self):
        boundary = {"plus": [COS_ENTRY, {"delta": {"K": 2}}], "minus": [COS_ENTRY, COS_ENTRY]}
        assert _pointer(_with(n=2, boundary=boundary)) == "/boundary"

    def test_delta_k(self):
        data = _with(boundary={"plus": [{"delta": {}}], "minus": [{"delta": {}}]})
        problem = parse_problem(data, delta_k=4)
        assert problem.spec.boundary_minus[0] == BoundaryFourierData.dirac(0.0, 4)
        dirichlet = {"problem": "dirichlet", "boundary": data["boundary"]}
        assert parse_problem(dirichlet, delta_k=2).spec.boundary.plus.degree == 2

    def test_dirichlet_source(self):
        data = {"problem": "dirichlet", "boundary": {"plus": [COS_ENTRY], "minus": [COS_ENTRY]}, "source": {}}
        assert _pointer(data) == "/source"

    def test_message_names_pointer(self):
        with pytest.raises(SpecError, match="^/path: "):
            parse_problem(_with(path="fast"))

    @pytest.mark.parametrize("name", sorted(DEMOS))
    def test_demo_documents_reload(self, name):
        demo = get_demo(name)
        problem = parse_problem(json.loads(json.dumps(problem_to_dict(demo))))
        assert problem.spec == demo.spec
        assert problem.inject == demo.inject
        assert problem.path == demo.path


class TestLoadProblem:
    """Tests for load_problem."""

    def test_load(self, tmp_path):
        target = tmp_path / "cos.json"
        target.write_text(json.dumps(SCHWARZ))
        problem = load_problem(str(target))
        assert problem.name == str(target)

    def test_load_with_delta_k(self, tmp_path):
        target = tmp_path / "delta.json"
        target.write_text(json.dumps(_with(boundary={"plus": [{"delta": {}}], "minus": [{"delta": {}}]})))
        problem = load_problem(str(target), delta_k=3)
        assert problem.spec.boundary_plus[0].degree == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecError, match="cannot read"):
            load_problem(str(tmp_path / "missing.json"))

    def test_malformed(self, tmp_path):
        target = tmp_path / "bad.json"
        target.write_text("{\"problem\": ")
        with pytest.raises(SpecError, match="malformed JSON"):
            load_problem(str(target))


class TestDispatch:
    """Tests for solve_problem and verify_problem."""

    def test_provenance(self):
        expected = {
            "dirichlet-e_it": "dirichlet",
            "schwarz-homog-cos": "schwarz-homogeneous",
            "schwarz-nonhomog-const": "schwarz-nonhomogeneous",
            "schwarz-dist-delta": "schwarz-distributional",
            "schwarz-order2": "schwarz-order2",
        }
        for name, provenance in expected.items():
            assert solve_problem(get_demo(name)).provenance == provenance

    def test_samples_solve_to_identity(self):
        field = solve_problem(parse_problem(SCHWARZ))
        z1, z2 = field.cartesian(np.array([0.5j, 0.3 - 0.1j]))
        np.testing.assert_allclose(z1, [0, 0.3], atol=1e-12)
        np.testing.assert_allclose(z2, [0.5, -0.1], atol=1e-12)

    def test_quadrature_path(self):
        field = solve_problem(parse_problem(_with(path="quadrature")))
        assert field.path == QUADRATURE

    def test_inject_applied(self):
        field = solve_problem(get_demo("negative-control"))
        assert field(0.5).minus == pytest.approx(0.505)

    def test_verify(self):
        field, report = verify_problem(parse_problem(SCHWARZ))
        assert report.passed
        assert field.provenance == "schwarz-homogeneous"
