"""
Problem specifications: JSON loading, validation and dispatch.

A problem file looks like

    {
      "problem": "schwarz",
      "n": 1,
      "boundary": {"plus": [{"coeffs": [[1, 0.5, 0], [-1, 0.5, 0]]}],
                   "minus": [{"samples": [1, 0, -1, 0]}]},
      "constants": {"plus": [0], "minus": [0]},
      "source": {"terms": [[0, 0, 1, 0, 0, 0]]},
      "path": "spectral"
    }

Boundary entries give Fourier coefficients [k, re, im], uniform samples
(real numbers or [re, im] pairs), or a truncated Dirac delta
{"delta": {"t0": 0, "K": 64}}, whose K defaults to the configured delta.K.
Dirichlet problems take a single entry per component. Every validation
error names the offending element by a JSON pointer.
"""

import json
import logging
import numbers
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .boundary import (
    DEFAULT_DELTA_K,
    DISTRIBUTION,
    FUNCTION,
    KINDS,
    BicomplexBoundaryData,
    BoundaryFourierData,
    fourier_from_samples,
)
from .errors import BicboundError, KindError, SpecError
from .operators import PolynomialSource
from .polynomial import ComplexPolynomial
from .quadrature import QuadratureRules
from .solvers import (
    PATHS,
    SPECTRAL,
    DirichletSpec,
    SchwarzSpec,
    SolutionField,
    solve_dirichlet,
    solve_schwarz_distributional,
    solve_schwarz_higher_order,
    solve_schwarz_homogeneous,
    solve_schwarz_nonhomogeneous,
)
from .verification import ResidualReport, residual_report

logger = logging.getLogger(__name__)

PROBLEMS = ("schwarz", "dirichlet")
COMPONENTS = ("plus", "minus")

Spec = Union[SchwarzSpec, DirichletSpec]


@dataclass(frozen=True)
class ProblemSpec:
    """
    A validated problem.

    Attributes:
        problem: "schwarz" or "dirichlet"
        spec: the solver input
        path: "spectral" or "quadrature"
        inject: polynomials added to (w+, w-) after solving; used by negative controls
        name: label for summaries
    """

    problem: str
    spec: Spec
    path: str = SPECTRAL
    inject: Optional[Tuple[ComplexPolynomial, ComplexPolynomial]] = None
    name: str = ""


# --- parsing helpers ---

def _require(data: Mapping[str, Any], key: str, pointer: str) -> Any:
    if key not in data:
        raise SpecError(f"missing required key {key!r}", pointer)
    return data[key]


def _number(value: Any, pointer: str) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise SpecError(f"expected a number, got {value!r}", pointer)
    return float(value)


def _integer(value: Any, pointer: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise SpecError(f"expected an integer, got {value!r}", pointer)
    return int(value)


def _list(value: Any, pointer: str) -> List[Any]:
    if not isinstance(value, list):
        raise SpecError(f"expected a list, got {type(value).__name__}", pointer)
    return value


def _object(value: Any, pointer: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise SpecError(f"expected an object, got {type(value).__name__}", pointer)
    return value


def parse_boundary(data: Any, pointer: str, delta_k: int = DEFAULT_DELTA_K) -> BoundaryFourierData:
    """One boundary entry: coefficients, samples, or a truncated delta (K defaults to delta_k)."""
    data = _object(data, pointer)
    kind = data.get("kind", FUNCTION)
    if kind not in KINDS:
        raise SpecError(f"unknown kind {kind!r}, expected one of {list(KINDS)}", f"{pointer}/kind")

    if "delta" in data:
        if "kind" in data and kind != DISTRIBUTION:
            raise SpecError(f"a delta entry is a distribution, not kind {kind!r}", f"{pointer}/kind")
        delta = _object(data["delta"], f"{pointer}/delta")
        t0 = _number(delta.get("t0", 0.0), f"{pointer}/delta/t0")
        K = _integer(delta.get("K", delta_k), f"{pointer}/delta/K")
        if K < 0:
            raise SpecError("truncation K must be >= 0", f"{pointer}/delta/K")
        return BoundaryFourierData.dirac(t0, K)

    if "samples" in data:
        samples = []
        for i, value in enumerate(_list(data["samples"], f"{pointer}/samples")):
            where = f"{pointer}/samples/{i}"
            if isinstance(value, list):
                if len(value) != 2:
                    raise SpecError("expected [re, im]", where)
                samples.append(complex(_number(value[0], f"{where}/0"), _number(value[1], f"{where}/1")))
            else:
                samples.append(_number(value, where))
        if not samples:
            raise SpecError("no samples given", f"{pointer}/samples")
        K = data.get("K")
        if K is not None:
            K = _integer(K, f"{pointer}/K")
        try:
            return fourier_from_samples(samples, K=K, kind=kind)
        except BicboundError as e:
            raise SpecError(str(e), f"{pointer}/samples") from e

    coeffs: Dict[int, complex] = {}
    for i, row in enumerate(_list(data.get("coeffs", []), f"{pointer}/coeffs")):
        where = f"{pointer}/coeffs/{i}"
        row = _list(row, where)
        if len(row) != 3:
            raise SpecError("expected [k, re, im]", where)
        k = _integer(row[0], f"{where}/0")
        coeffs[k] = coeffs.get(k, 0j) + complex(_number(row[1], f"{where}/1"), _number(row[2], f"{where}/2"))
    real = all(abs(coeffs.get(-k, 0j) - c.conjugate()) <= 1e-12 for k, c in coeffs.items())
    if "real" in data:
        real = bool(data["real"])
    try:
        return BoundaryFourierData(coeffs, kind=kind, real=real)
    except BicboundError as e:
        raise SpecError(str(e), f"{pointer}/coeffs") from e


def parse_polynomial(data: Any, pointer: str) -> ComplexPolynomial:
    """{"terms": [[a, b, re, im], ...]}."""
    data = _object(data, pointer)
    terms: Dict[Tuple[int, int], complex] = {}
    for i, row in enumerate(_list(data.get("terms", []), f"{pointer}/terms")):
        where = f"{pointer}/terms/{i}"
        row = _list(row, where)
        if len(row) != 4:
            raise SpecError("expected [a, b, re, im]", where)
        a, b = _integer(row[0], f"{where}/0"), _integer(row[1], f"{where}/1")
        if a < 0 or b < 0:
            raise SpecError("degrees must be >= 0", where)
        key = (a, b)
        terms[key] = terms.get(key, 0j) + complex(_number(row[2], f"{where}/2"), _number(row[3], f"{where}/3"))
    return ComplexPolynomial(terms)


def parse_source(data: Any, pointer: str = "/source") -> Optional[PolynomialSource]:
    if data is None:
        return None
    data = _object(data, pointer)
    rows = _list(data.get("terms", []), f"{pointer}/terms")
    for i, row in enumerate(rows):
        where = f"{pointer}/terms/{i}"
        row = _list(row, where)
        if len(row) != 6:
            raise SpecError("expected [a, b, re_z1, im_z1, re_z2, im_z2]", where)
        _integer(row[0], f"{where}/0")
        _integer(row[1], f"{where}/1")
        if row[0] < 0 or row[1] < 0:
            raise SpecError("degrees must be >= 0", where)
        for j in range(2, 6):
            _number(row[j], f"{where}/{j}")
    source = PolynomialSource.from_dict(data)
    return None if source.is_zero else source


def _boundary_list(
    boundary: Mapping[str, Any], component: str, n: int, delta_k: int
) -> Tuple[BoundaryFourierData, ...]:
    pointer = f"/boundary/{component}"
    entries = _require(boundary, component, "/boundary")
    if isinstance(entries, dict):
        entries = [entries]
    entries = _list(entries, pointer)
    if len(entries) != n:
        raise SpecError(f"expected {n} entries, got {len(entries)}", pointer)
    return tuple(parse_boundary(e, f"{pointer}/{i}", delta_k) for i, e in enumerate(entries))


def _constants(data: Mapping[str, Any], component: str, n: int) -> Tuple[float, ...]:
    pointer = f"/constants/{component}"
    values = data.get(component, [0.0] * n)
    if isinstance(values, numbers.Real) and not isinstance(values, bool):
        values = [values]
    values = _list(values, pointer)
    if len(values) != n:
        raise SpecError(f"expected {n} constants, got {len(values)}", pointer)
    return tuple(_number(v, f"{pointer}/{i}") for i, v in enumerate(values))


def parse_problem(data: Any, name: str = "", delta_k: int = DEFAULT_DELTA_K) -> ProblemSpec:
    """
    Validate a decoded JSON document.

    Args:
        data: the decoded document
        name: label for summaries
        delta_k: truncation of delta entries that give no K

    Raises:
        SpecError: with a JSON pointer to the first invalid element
    """
    data = _object(data, "")
    problem = _require(data, "problem", "")
    if problem not in PROBLEMS:
        raise SpecError(f"unknown problem {problem!r}, expected one of {list(PROBLEMS)}", "/problem")
    path = data.get("path", SPECTRAL)
    if path not in PATHS:
        raise SpecError(f"unknown path {path!r}, expected one of {list(PATHS)}", "/path")
    boundary = _object(_require(data, "boundary", ""), "/boundary")

    inject = None
    if "inject" in data:
        inject_data = _object(data["inject"], "/inject")
        inject = tuple(
            parse_polynomial(inject_data.get(c, {}), f"/inject/{c}") for c in COMPONENTS
        )

    if problem == "dirichlet":
        plus, minus = (_boundary_list(boundary, c, 1, delta_k)[0] for c in COMPONENTS)
        if plus.kind != minus.kind:
            raise SpecError("plus and minus must have the same kind", "/boundary")
        if "source" in data:
            raise SpecError("Dirichlet problems take no source", "/source")
        spec: Spec = DirichletSpec(BicomplexBoundaryData(plus, minus))
    else:
        n = _integer(data.get("n", 1), "/n")
        if not 1 <= n <= 3:
            raise SpecError(f"order must be in 1..3, got {n}", "/n")
        constants = _object(data.get("constants", {}), "/constants")
        b_plus = _boundary_list(boundary, "plus", n, delta_k)
        b_minus = _boundary_list(boundary, "minus", n, delta_k)
        for component, values in (("plus", b_plus), ("minus", b_minus)):
            for i, b in enumerate(values):
                if not b.real:
                    raise SpecError("Schwarz boundary data must be real-valued", f"/boundary/{component}/{i}")
        try:
            spec = SchwarzSpec(
                n,
                b_plus,
                b_minus,
                _constants(constants, "plus", n),
                _constants(constants, "minus", n),
                parse_source(data.get("source")),
            )
        except BicboundError as e:
            if isinstance(e, SpecError):
                raise
            raise SpecError(str(e), "/boundary" if isinstance(e, KindError) else "") from e

    return ProblemSpec(problem=problem, spec=spec, path=path, inject=inject, name=name)


def load_problem(path: str, delta_k: int = DEFAULT_DELTA_K) -> ProblemSpec:
    """Read and validate a problem file."""
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as e:
        raise SpecError(f"cannot read {path}: {e.strerror}", "") from e
    except json.JSONDecodeError as e:
        raise SpecError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}", "") from e
    return parse_problem(data, name=path, delta_k=delta_k)


# --- serialization ---

def _polynomial_to_dict(p: ComplexPolynomial) -> Dict[str, Any]:
    return {"terms": [[a, b, c.real, c.imag] for (a, b), c in p]}


def problem_to_dict(problem: ProblemSpec) -> Dict[str, Any]:
    """The JSON document of a problem (coefficient form)."""
    spec = problem.spec
    data: Dict[str, Any] = {"problem": problem.problem}
    if isinstance(spec, DirichletSpec):
        data["boundary"] = {
            "plus": [_boundary_entry(spec.boundary.plus)],
            "minus": [_boundary_entry(spec.boundary.minus)],
        }
    else:
        data["n"] = spec.n
        data["boundary"] = {
            "plus": [_boundary_entry(b) for b in spec.boundary_plus],
            "minus": [_boundary_entry(b) for b in spec.boundary_minus],
        }
        data["constants"] = {"plus": list(spec.c_plus), "minus": list(spec.c_minus)}
        if isinstance(spec.source, PolynomialSource):
            data["source"] = spec.source.to_dict()
    data["path"] = problem.path
    if problem.inject:
        data["inject"] = {c: _polynomial_to_dict(p) for c, p in zip(COMPONENTS, problem.inject)}
    return data


def _boundary_entry(b: BoundaryFourierData) -> Dict[str, Any]:
    entry = b.to_dict()
    if b.kind == FUNCTION:
        entry.pop("kind")
    return entry


# --- dispatch ---

def solve_problem(problem: ProblemSpec, rules: Optional[QuadratureRules] = None) -> SolutionField:
    """Route a problem to its solver and apply any injected offset."""
    spec = problem.spec
    if isinstance(spec, DirichletSpec):
        field = solve_dirichlet(spec, problem.path, rules)
    elif spec.n > 1:
        field = solve_schwarz_higher_order(spec, problem.path, rules)
    elif spec.kind == DISTRIBUTION:
        field = solve_schwarz_distributional(spec, problem.path, rules)
    elif spec.source is None:
        field = solve_schwarz_homogeneous(
            spec.boundary_plus[0], spec.boundary_minus[0],
            spec.c_plus[0], spec.c_minus[0],
            path=problem.path, rules=rules,
        )
    else:
        field = solve_schwarz_nonhomogeneous(spec, problem.path, rules)
    logger.info("Solved %s with %s (%s path)", problem.name or problem.problem, field.provenance, field.path)
    if problem.inject:
        field = field.with_offset(*problem.inject)
    return field


def verify_problem(
    problem: ProblemSpec,
    rules: Optional[QuadratureRules] = None,
    h: Optional[float] = None,
    tolerance_scale: float = 1.0,
) -> Tuple[SolutionField, ResidualReport]:
    field = solve_problem(problem, rules)
    return field, residual_report(problem.spec, field, h=h, tolerance_scale=tolerance_scale)
