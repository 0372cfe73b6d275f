#!/usr/bin/env python3
"""
CLI entry point for deformed-laplacian.

Provides command-line access to graph generation, spectra of the deformed
Laplacian, tree eigenvalue localization, H-join synthesis, bounds, parameter
sweeps and the randomized verification suites.

Exit codes: 0 success, 1 usage or parameter error, 2 I/O or parse error,
3 invariant failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, NoReturn

from deformed_laplacian.application.spectrum_service import SpectrumService
from deformed_laplacian.application.sweep_service import SweepService
from deformed_laplacian.application.verify_service import VerifyService
from deformed_laplacian.domain.dense_eigen import SOLVERS
from deformed_laplacian.domain.errors import (
    ConsistencyError,
    EdgeListParseError,
    NumericError,
    SingularPivotError,
    SpecParseError,
)
from deformed_laplacian.domain.graph import FamilySpec, Graph, build_family
from deformed_laplacian.domain.hjoin import HJoinSpec
from deformed_laplacian.domain.sweep import SweepRow
from deformed_laplacian.domain.verification_report import SCHEMA_VERSION
from deformed_laplacian.infrastructure.config import SpectralConfig
from deformed_laplacian.infrastructure.edge_list_repository import (
    EdgeListRepository,
    format_edge_list,
)
from deformed_laplacian.infrastructure.hjoin_spec_repository import HJoinSpecRepository
from deformed_laplacian.infrastructure.logger import setup_logger
from deformed_laplacian.infrastructure.sweep_csv_repository import (
    SweepCSVRepository,
    format_sweep_csv,
)

__version__ = "0.1.0"
__author__ = "John Ayers"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVARIANT = 3


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "cli",
        "description": "Command-line interface for deformed-laplacian",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


class UsageExitParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with EXIT_USAGE instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Enable verbose output",
    )
    common.add_argument(
        "--format",
        choices=["text", "json", "csv"],
        default="text",
        help="Output format (default: text)",
    )
    common.add_argument(
        "--solver",
        choices=list(SOLVERS),
        help="Dense eigensolver backend (default: jacobi or DEFORMED_SOLVER)",
    )
    common.add_argument(
        "--tol",
        type=float,
        help="Bisection accuracy (default: 1e-10 or DEFORMED_TOL)",
    )
    common.add_argument(
        "--eps-zero",
        type=float,
        help="Fixed zero threshold for tree diagonalization (default: scaled)",
    )
    common.add_argument(
        "--workers",
        type=int,
        help="Worker threads for sweeps (default: 1 or DEFORMED_WORKERS)",
    )
    common.add_argument(
        "--out",
        help="Write the result to this file instead of stdout",
    )
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser.

    Returns:
        Configured ArgumentParser instance
    """
    parser = UsageExitParser(
        prog="deformed-laplacian",
        description="Spectra of the deformed Laplacian M(s) = I - sA + s^2(D - I)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )

    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable verbose output",
    )

    common = _common_options()
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # gen command
    gen_parser = subparsers.add_parser(
        "gen",
        parents=[common],
        help="Write a named graph family as an edge list",
    )
    gen_parser.add_argument(
        "family",
        nargs="+",
        help="Family and sizes, e.g. 'path 4', 'star 3', 'starlike 2 2 2'",
    )

    # spectrum command
    spectrum_parser = subparsers.add_parser(
        "spectrum",
        parents=[common],
        help="Eigenvalues of M_G(s) for an edge-list graph",
    )
    spectrum_parser.add_argument("graph", help="Edge-list file")
    spectrum_parser.add_argument("--s", type=float, required=True, help="Deformation parameter")

    # bounds command
    bounds_parser = subparsers.add_parser(
        "bounds",
        parents=[common],
        help="Lower and upper bounds on lambda_max of M_G(s)",
    )
    bounds_parser.add_argument("graph", help="Edge-list file")
    bounds_parser.add_argument("--s", type=float, required=True, help="Deformation parameter")

    # tree command
    tree_parser = subparsers.add_parser(
        "tree",
        parents=[common],
        help="Eigenvalue localization on trees",
    )
    tree_parser.add_argument(
        "action",
        choices=["locate", "radius", "kth", "props"],
        help="locate: counts around --lambda; radius: lambda_max; "
        "kth: k-th smallest; props: property checklist",
    )
    tree_parser.add_argument("graph", help="Edge-list file holding a tree")
    tree_parser.add_argument("--s", type=float, required=True, help="Deformation parameter")
    tree_parser.add_argument("--lambda", dest="lam", type=float, help="Threshold for locate")
    tree_parser.add_argument("--k", type=int, help="Index for kth (1-based)")
    tree_parser.add_argument("--root", type=int, default=0, help="Root vertex (default: 0)")

    # hjoin command
    hjoin_parser = subparsers.add_parser(
        "hjoin",
        parents=[common],
        help="Spectrum of an H-join from its JSON specification",
    )
    hjoin_parser.add_argument("spec", help="H-join JSON file")
    hjoin_parser.add_argument("--s", type=float, required=True, help="Deformation parameter")
    hjoin_parser.add_argument(
        "--verify",
        action="store_true",
        help="Assemble the graph and compare with the dense oracle",
    )

    # sweep command
    sweep_parser = subparsers.add_parser(
        "sweep",
        parents=[common],
        help="Eigenvalues over a range of s, written as CSV",
    )
    sweep_parser.add_argument("input", help="Edge-list file, or H-join JSON file (.json)")
    sweep_parser.add_argument("--from", dest="s_from", type=float, required=True)
    sweep_parser.add_argument("--to", dest="s_to", type=float, required=True)
    sweep_parser.add_argument("--steps", type=int, required=True, help="Samples including ends")

    # verify command
    verify_parser = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Run the property suites on a graph file or random instances",
    )
    verify_parser.add_argument("graph", nargs="?", help="Edge-list file")
    verify_parser.add_argument(
        "--random",
        type=int,
        metavar="TRIALS",
        help="Run the randomized suites with this many trials",
    )
    verify_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")

    return parser


def _logger_for(args: argparse.Namespace) -> logging.Logger:
    """Configure logging; machine-readable output keeps stdout clean."""
    stream = sys.stderr if args.format in ("json", "csv") else None
    return setup_logger(verbose=args.verbose, stream=stream)


def _config_for(args: argparse.Namespace) -> SpectralConfig:
    """Environment configuration with command-line overrides applied."""
    return SpectralConfig.from_env().with_overrides(
        solver=args.solver, tol=args.tol, eps_zero=args.eps_zero, workers=args.workers
    )


def _exit_code_for(error: Exception) -> int:
    """Map an exception to the documented exit code."""
    if isinstance(error, (EdgeListParseError, SpecParseError, OSError)):
        return EXIT_IO
    if isinstance(error, (ConsistencyError, NumericError, SingularPivotError)):
        return EXIT_INVARIANT
    return EXIT_USAGE


def _fail(logger: logging.Logger, args: argparse.Namespace, action: str, error: Exception) -> int:
    """Log an error and return its exit code."""
    logger.error(f"Error {action}: {error}")
    if args.verbose:
        import traceback

        traceback.print_exc()
    return _exit_code_for(error)


def _emit(args: argparse.Namespace, text: str) -> None:
    """Print text or write it to --out."""
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def _emit_json(args: argparse.Namespace, data: dict[str, Any]) -> None:
    _emit(args, json.dumps(data, indent=2))


def _load_graph(path: str) -> Graph:
    return EdgeListRepository(path).load()


def cmd_gen(args: argparse.Namespace) -> int:
    """Execute gen command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success)
    """
    logger = _logger_for(args)
    try:
        graph = build_family(FamilySpec.parse(args.family))
        if args.out:
            EdgeListRepository(args.out).save(graph)
            logger.info(f"Wrote {' '.join(args.family)} (n={graph.n}, m={graph.m}) to {args.out}")
        else:
            print(format_edge_list(graph), end="")
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, "generating graph", e)


def cmd_spectrum(args: argparse.Namespace) -> int:
    """Execute spectrum command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success)
    """
    logger = _logger_for(args)
    try:
        config = _config_for(args)
        graph = _load_graph(args.graph)
        report = SpectrumService(config).spectrum_report(graph, args.s)

        if args.format == "json":
            _emit_json(args, report.to_dict())
        elif args.format == "csv":
            row = SweepRow(s=args.s, eigenvalues=report.spectrum.values)
            _emit(args, format_sweep_csv([row], config.precision).rstrip("\n"))
        else:
            _emit(args, report.format_spectrum(config.fmt))
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, "computing spectrum", e)


def cmd_bounds(args: argparse.Namespace) -> int:
    """Execute bounds command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success)
    """
    logger = _logger_for(args)
    try:
        config = _config_for(args)
        graph = _load_graph(args.graph)
        report = SpectrumService(config).spectrum_report(graph, args.s)

        if args.format == "json":
            data = report.to_dict()
            data.pop("eigenvalues")
            _emit_json(args, data)
        else:
            _emit(args, report.format_bounds(config.fmt))
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, "computing bounds", e)


def cmd_tree(args: argparse.Namespace) -> int:
    """Execute tree command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success, 3 if a checklist item fails)
    """
    logger = _logger_for(args)
    try:
        config = _config_for(args)
        graph = _load_graph(args.graph)
        service = SpectrumService(config)
        data: dict[str, Any] = {"schema": SCHEMA_VERSION, "s": args.s, "n": graph.n}

        match args.action:
            case "locate":
                if args.lam is None:
                    logger.error("tree locate requires --lambda")
                    return EXIT_USAGE
                counts = service.tree_locate(graph, args.s, args.lam, args.root)
                data.update(lam=args.lam, **counts._asdict())
                text = f"greater={counts.greater} equal={counts.equal} less={counts.less}"
            case "radius":
                value = service.tree_radius(graph, args.s, args.root)
                data["lambda_max"] = value
                text = config.fmt(value)
            case "kth":
                if args.k is None:
                    logger.error("tree kth requires --k")
                    return EXIT_USAGE
                value = service.tree_kth(graph, args.s, args.k, args.root)
                data.update(k=args.k, value=value)
                text = config.fmt(value)
            case _:
                report = service.tree_props(graph, args.s, args.root)
                data.update(passed=report.passed, checks=[c.to_dict() for c in report.checks])
                text = report.format_console(config.precision)

        if args.format == "json":
            _emit_json(args, data)
        else:
            _emit(args, text)
        if data.get("passed") is False:
            return EXIT_INVARIANT
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, f"running tree {args.action}", e)


def cmd_hjoin(args: argparse.Namespace) -> int:
    """Execute hjoin command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success, 3 if --verify finds a deviation)
    """
    logger = _logger_for(args)
    try:
        config = _config_for(args)
        spec = HJoinSpecRepository(args.spec).load()
        report = SpectrumService(config).hjoin_report(spec, args.s, verify=args.verify)

        if args.format == "json":
            _emit_json(args, report.to_dict())
        elif args.format == "csv":
            row = SweepRow(s=args.s, eigenvalues=report.spectrum.values)
            _emit(args, format_sweep_csv([row], config.precision).rstrip("\n"))
        else:
            _emit(args, report.format_text(config.fmt))

        if not report.verified:
            logger.error(f"H-join spectrum deviates from the oracle by {report.oracle_deviation}")
            return EXIT_INVARIANT
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, "computing H-join spectrum", e)


def _load_sweep_input(path: str) -> Graph | HJoinSpec:
    if Path(path).suffix.lower() == ".json":
        return HJoinSpecRepository(path).load()
    return _load_graph(path)


def cmd_sweep(args: argparse.Namespace) -> int:
    """Execute sweep command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success)
    """
    logger = _logger_for(args)
    try:
        config = _config_for(args)
        source = _load_sweep_input(args.input)
        service = SweepService(config)

        def progress_callback(completed: int, total: int) -> None:
            logger.debug(f"Sweep progress: {completed}/{total}")

        if isinstance(source, HJoinSpec):
            rows = service.sweep_hjoin(
                source, args.s_from, args.s_to, args.steps, progress_callback
            )
        else:
            rows = service.sweep_graph(
                source, args.s_from, args.s_to, args.steps, progress_callback
            )

        if args.format == "json" and not args.out:
            data = {
                "schema": SCHEMA_VERSION,
                "rows": [{"s": row.s, "eigenvalues": list(row.eigenvalues)} for row in rows],
            }
            print(json.dumps(data, indent=2))
        elif args.out:
            SweepCSVRepository(args.out, config.precision).save(rows)
        else:
            print(format_sweep_csv(rows, config.precision), end="")
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, "running sweep", e)


def cmd_verify(args: argparse.Namespace) -> int:
    """Execute verify command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 if every suite passed, 3 otherwise)
    """
    logger = _logger_for(args)
    if args.graph is None and args.random is None:
        logger.error("verify needs an edge-list file or --random TRIALS")
        return EXIT_USAGE

    try:
        service = VerifyService(_config_for(args))
        if args.graph is not None:
            report = service.verify_graph(_load_graph(args.graph), Path(args.graph).name)
        else:
            logger.info(f"Running property suites: trials={args.random} seed={args.seed}")
            report = service.verify_random(
                args.random,
                args.seed,
                progress_callback=lambda name: logger.debug(f"Running suite {name}"),
            )

        if args.out:
            report.save_to_file(args.out)
            logger.info(f"Report saved to: {args.out}")
        if args.format == "json":
            print(report.to_json())
        else:
            print(report.format_console_summary())

        if not report.ok:
            for suite in report.suites:
                for failure in suite.failures:
                    logger.error(f"{suite.name}: {failure.message} [{failure.instance}]")
            return EXIT_INVARIANT
        return EXIT_OK
    except Exception as e:
        return _fail(logger, args, "running verification", e)


def main() -> NoReturn:
    """Main entry point for the CLI.

    Parses arguments and dispatches to appropriate command handler.
    """
    parser = create_parser()
    args = parser.parse_args()

    if not args.command:
        parser.print_help()
        sys.exit(EXIT_USAGE)

    # Dispatch to command handlers
    commands = {
        "gen": cmd_gen,
        "spectrum": cmd_spectrum,
        "bounds": cmd_bounds,
        "tree": cmd_tree,
        "hjoin": cmd_hjoin,
        "sweep": cmd_sweep,
        "verify": cmd_verify,
    }

    exit_code = commands[args.command](args)
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
