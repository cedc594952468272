"""
CLI Tool for bicbound.

Solves problem specs onto output grids, verifies solutions against their
problems, prints kernel tables and runs the bundled demos.

Exit codes: 0 success (verify: all checks pass), 1 verification failure,
2 invalid input.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from bicbound import __version__
from bicbound.config import Config
from bicbound.errors import BicboundError, SpecError
from bicbound.quadrature import QuadratureRules

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Resolved settings of one CLI invocation."""

    command: str
    input: Optional[str]
    output: Optional[str]
    demo: Optional[str]
    grid_nr: int
    grid_ntheta: int
    grid_rmax: float
    path: Optional[str]
    tolerance_scale: float
    profile: str
    h: Optional[float]
    delta_k: int
    rules: QuadratureRules

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Profile, then --config overrides, then explicit flags."""
        profile = getattr(args, "profile", "default")
        config_file = getattr(args, "config", None)
        config = Config.from_file(config_file, profile=profile) if config_file else Config(profile=profile)

        overrides = {
            "grid.nr": "grid_nr",
            "grid.ntheta": "grid_ntheta",
            "grid.rmax": "grid_rmax",
            "circle.n": "circle_n",
            "disk.nr": "disk_nr",
            "disk.nt": "disk_nt",
            "disk.collision_eps": "collision_eps",
            "verify.tolerance_scale": "tolerance_scale",
            "verify.h": "h",
        }
        for key, attr in overrides.items():
            value = getattr(args, attr, None)
            if value is not None:
                config.set(key, value)

        logger.debug("Resolved %r", config)
        run = cls(
            command=args.command,
            input=getattr(args, "input", None),
            output=getattr(args, "output", None),
            demo=getattr(args, "demo", None),
            grid_nr=int(config.get("grid.nr")),
            grid_ntheta=int(config.get("grid.ntheta")),
            grid_rmax=float(config.get("grid.rmax")),
            path=getattr(args, "path", None),
            tolerance_scale=config.tolerance_scale,
            profile=config.profile,
            h=config.get("verify.h"),
            delta_k=config.delta_k,
            rules=_rules(config),
        )
        run.validate()
        return run

    def validate(self) -> None:
        if self.grid_nr < 2 or self.grid_ntheta < 2:
            raise BicboundError("Grid resolutions must be >= 2")
        if not 0 < self.grid_rmax < 1:
            raise BicboundError(f"Grid radius must lie strictly inside the disk, got {self.grid_rmax}")
        if self.tolerance_scale <= 0:
            raise BicboundError("Tolerance scale must be positive")


def _rules(config: Config) -> QuadratureRules:
    try:
        return config.quadrature_rules()
    except ValueError as e:
        raise BicboundError(str(e)) from e


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grid-nr", type=int, help="Radial output grid points")
    parser.add_argument("--grid-ntheta", type=int, help="Angular output grid points")
    parser.add_argument("--grid-rmax", type=float, help="Outermost output grid radius (< 1)")
    parser.add_argument("--circle-n", type=int, help="Circle rule nodes")
    parser.add_argument("--disk-nr", type=int, help="Disk rule radial nodes")
    parser.add_argument("--disk-nt", type=int, help="Disk rule angular nodes")
    parser.add_argument("--collision-eps", type=float, help="Minimum node distance from z")
    parser.add_argument("--tolerance-scale", type=float, help="Scale all verification tolerances")
    parser.add_argument(
        "--profile", choices=Config.available_profiles(), default="default",
        help="Resolution profile"
    )
    parser.add_argument("--config", help="JSON file with config overrides")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")


def _add_problem(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", "-i", help="Problem spec JSON file")
    source.add_argument("--demo", help="Use a bundled demo problem")
    parser.add_argument(
        "--path", choices=["spectral", "quadrature"],
        help="Evaluation path (overrides the problem file)"
    )


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = argparse.ArgumentParser(
        prog="bicbound",
        description="bicbound - bicomplex Schwarz and Dirichlet problems on the unit disk",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # --- solve ---
    solve_parser = subparsers.add_parser("solve", help="Solve a problem onto a polar grid")
    _add_problem(solve_parser)
    solve_parser.add_argument("--output", "-o", help="Grid file (.csv, .json, .jsonl; default stdout)")
    _add_common(solve_parser)

    # --- verify ---
    verify_parser = subparsers.add_parser("verify", help="Solve and check every condition")
    _add_problem(verify_parser)
    verify_parser.add_argument("--output", "-o", help="Residual report JSON file")
    verify_parser.add_argument("--h", type=float, help="Finite-difference step")
    _add_common(verify_parser)

    # --- kernel-table ---
    kernel_parser = subparsers.add_parser("kernel-table", help="Tabulate P, Q and the Schwarz kernel")
    kernel_parser.add_argument("--output", "-o", help="Table file (default stdout)")
    _add_common(kernel_parser)

    # --- demo ---
    demo_parser = subparsers.add_parser("demo", help="List, export or verify bundled demos")
    demo_parser.add_argument("name", nargs="?", help="Demo name")
    demo_parser.add_argument("--verify", action="store_true", help="Verify demos")
    demo_parser.add_argument("--output-dir", help="Write demo spec JSON files here")
    _add_common(demo_parser)

    return parser


def _load_problem(run: RunConfig):
    from dataclasses import replace

    from bicbound.demos import get_demo
    from bicbound.problem import load_problem

    problem = get_demo(run.demo) if run.demo else load_problem(run.input, delta_k=run.delta_k)
    if run.path:
        problem = replace(problem, path=run.path)
    return problem


def cmd_solve(args) -> int:
    """Execute solve command."""
    from bicbound.export import GRID_COLUMNS, TableWriter, grid_rows, polar_grid
    from bicbound.problem import solve_problem

    run = RunConfig.from_args(args)
    problem = _load_problem(run)
    field = solve_problem(problem, run.rules)
    radii, angles = polar_grid(run.grid_nr, run.grid_ntheta, run.grid_rmax)
    rows = grid_rows(field, radii, angles)

    with TableWriter(run.output, GRID_COLUMNS) as writer:
        writer.write_all(rows)

    summary = sys.stderr if run.output in (None, "-") else sys.stdout
    print(
        f"✅ {problem.name or problem.problem}: {field.provenance} "
        f"({field.path} path), {len(rows)} grid points",
        file=summary,
    )
    return 0


def _print_report(name: str, report) -> None:
    status = "✅ PASS" if report.passed else "❌ FAIL"
    print(f"{status}  {name}")
    print(f"   PDE residual:      {report.pde_residual_max:.3e} (tol {report.pde_tolerance:.1e})")
    if report.boundary_checked:
        print(
            f"   Boundary mismatch: {report.boundary_mismatch_max:.3e} "
            f"(coarse {report.boundary_mismatch_coarse:.3e}, bound {report.boundary_bound:.3e})"
        )
    else:
        print("   Boundary mismatch: skipped")
    print(f"   Origin error:      {max(report.origin_error):.3e} (tol {report.origin_tolerance:.1e})")
    for violation in report.violations():
        print(f"   ⚠️  {violation}")


def cmd_verify(args) -> int:
    """Execute verify command."""
    from bicbound.problem import verify_problem

    run = RunConfig.from_args(args)
    problem = _load_problem(run)
    _, report = verify_problem(problem, run.rules, h=run.h, tolerance_scale=run.tolerance_scale)

    if run.output:
        try:
            with open(run.output, "w") as f:
                f.write(report.to_json() + "\n")
        except OSError as e:
            print(f"❌ Cannot write report to {run.output}: {e.strerror}", file=sys.stderr)
            return 2
    _print_report(problem.name or problem.problem, report)
    return 0 if report.passed else 1


def cmd_kernel_table(args) -> int:
    """Execute kernel-table command."""
    from bicbound.export import KERNEL_COLUMNS, TableWriter, kernel_rows, polar_grid

    run = RunConfig.from_args(args)
    radii, angles = polar_grid(run.grid_nr, run.grid_ntheta, run.grid_rmax)
    with TableWriter(run.output, KERNEL_COLUMNS) as writer:
        writer.write_all(kernel_rows(radii, angles))
    return 0


def cmd_demo(args) -> int:
    """Execute demo command."""
    from bicbound.demos import DEMOS, EXPECTED_FAILURES, get_demo
    from bicbound.problem import problem_to_dict, verify_problem

    names = [args.name] if args.name else list(DEMOS)
    for name in names:
        get_demo(name)

    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)
        for name in names:
            target = os.path.join(args.output_dir, f"{name}.json")
            with open(target, "w") as f:
                json.dump(problem_to_dict(get_demo(name)), f, indent=2)
                f.write("\n")
            print(f"✅ Wrote {target}")

    if args.verify:
        run = RunConfig.from_args(args)
        ok = True
        for name in names:
            _, report = verify_problem(
                get_demo(name), run.rules, h=run.h, tolerance_scale=run.tolerance_scale
            )
            _print_report(name, report)
            expected = name not in EXPECTED_FAILURES
            if report.passed != expected:
                ok = False
                print(f"   ❌ expected {'pass' if expected else 'failure'}")
        return 0 if ok else 1

    if not args.output_dir:
        print("📋 Bundled demos:\n")
        for name in names:
            doc = (DEMOS[name].__doc__ or "").strip().splitlines()[0]
            print(f"  {name:24s} - {doc}")
    return 0


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 0

    _setup_logging(getattr(args, "verbose", False))

    commands = {
        "solve": cmd_solve,
        "verify": cmd_verify,
        "kernel-table": cmd_kernel_table,
        "demo": cmd_demo,
    }

    handler = commands.get(args.command)
    if handler is None:
        parser.print_help()
        return 2
    try:
        return handler(args)
    except SpecError as e:
        print(f"❌ Invalid problem spec: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
