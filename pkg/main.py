"""Main entry point for the SPARC toolchain.

This module provides the CLI commands to check, ground, solve and translate
SPARC programs, and to run the shortest-path benchmark.

Exit codes: 0 success, 1 no answer set, 2 usage/syntax/sort/grounding
errors, 3 a resource cap was exceeded.
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Literal

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, model_validator

from config.logging import setup_logging
from config.settings import settings
from utils.exceptions import (
    BenchError,
    CapacityError,
    DiagnosticError,
    EvaluationError,
    ExternalSolverError,
    GroundingError,
)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_ERROR = 2
EXIT_CAPACITY = 3

Verb = Literal["check", "ground", "solve", "translate", "bench"]


class RunConfig(BaseModel):
    """Validated configuration of one invocation."""

    verb: Verb
    input_path: Path | None = None
    output_path: Path | None = None
    limit: int = Field(default=0, ge=0)
    show_sorts: bool = False
    show_support: bool = False
    atom_cap: int = Field(default_factory=lambda: settings.ATOM_CAP, ge=1)
    candidate_cap: int = Field(default_factory=lambda: settings.CANDIDATE_CAP, ge=1)
    solver_path: str | None = None
    format: Literal["text", "json"] = "text"
    engine: Literal["direct", "translation"] = "direct"
    backend: Literal["search", "oracle"] = "search"
    solve_counterpart: bool = False

    @model_validator(mode="after")
    def validate_input(self) -> "RunConfig":
        if self.verb != "bench" and self.input_path is None:
            raise ValueError(f"'{self.verb}' needs an input file")
        return self


class AnswerRecord(BaseModel):
    """One answer set in ``--format json`` output."""

    literals: list[str]
    support: list[str]
    elapsed_ms: float


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparc", description="SPARC toolchain: check, ground, solve and translate programs"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log pipeline details to stderr")
    parser.add_argument("--atom-cap", type=int, default=None, help="Sort-evaluation atom cap")
    parser.add_argument("--candidate-cap", type=int, default=None, help="Search node cap")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    check = subparsers.add_parser("check", help="Parse and sort-check a program, print the sort table")
    check.add_argument("input", type=Path)

    ground = subparsers.add_parser("ground", help="Print the sort-respecting grounding")
    ground.add_argument("input", type=Path)

    solve = subparsers.add_parser("solve", help="Compute answer sets")
    solve.add_argument("input", type=Path)
    solve.add_argument("-n", "--limit", type=int, default=0, help="Maximum answer sets (0 = all)")
    solve.add_argument("--show-sorts", action="store_true", help="Include the sort-definition atoms")
    solve.add_argument("--show-support", action="store_true", help="Print the abductive support")
    solve.add_argument("--format", choices=["text", "json"], default="text")
    solve.add_argument("--engine", choices=["direct", "translation"], default="direct")
    solve.add_argument("--backend", choices=["search", "oracle"], default="search")

    translate = subparsers.add_parser("translate", help="Emit the DLV counterpart")
    translate.add_argument("input", type=Path)
    translate.add_argument("-o", "--output", type=Path, default=None, help="Write the counterpart here")
    translate.add_argument("--solver", default=None, help="Solve the counterpart with this DLV executable")
    translate.add_argument(
        "--solve", action="store_true", help="Solve the counterpart in process and print its answer sets"
    )
    translate.add_argument("-n", "--limit", type=int, default=0)

    bench = subparsers.add_parser("bench", help="Run the shortest-path benchmark")
    bench.add_argument("--vertices", type=int, nargs="+", default=[4, 6, 8])
    bench.add_argument("--densities", type=float, nargs="+", default=[0.1, 0.3, 0.5, 1.0])
    bench.add_argument("--low-density", action="store_true", help="Sweep densities 0.01 to 0.1")
    bench.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    bench.add_argument("--engines", choices=["direct", "translation"], nargs="+", default=["direct"])
    bench.add_argument("--emit", type=Path, default=None, help="Write generated programs to this directory")

    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    values = {
        "verb": args.command,
        "input_path": getattr(args, "input", None),
        "output_path": getattr(args, "output", None),
        "limit": getattr(args, "limit", 0),
        "show_sorts": getattr(args, "show_sorts", False),
        "show_support": getattr(args, "show_support", False),
        "solver_path": getattr(args, "solver", None),
        "format": getattr(args, "format", "text"),
        "engine": getattr(args, "engine", "direct"),
        "backend": getattr(args, "backend", "search"),
        "solve_counterpart": getattr(args, "solve", False),
    }
    if args.atom_cap is not None:
        values["atom_cap"] = args.atom_cap
    if args.candidate_cap is not None:
        values["candidate_cap"] = args.candidate_cap
    return RunConfig(**values)


def run_check(config: RunConfig) -> int:
    from sortcheck import load_program

    checked = load_program(config.input_path, config.atom_cap)
    for warning in checked.warnings:
        print(warning.format(), file=sys.stderr)
    for line in checked.interpretation.table():
        print(line)
    return EXIT_OK


def run_ground(config: RunConfig) -> int:
    from grounder import ground_program
    from sortcheck import load_program

    checked = load_program(config.input_path, config.atom_cap)
    ground = ground_program(checked.program, checked.interpretation, checked.declarations)
    for rule in ground.rules:
        print(rule)
    return EXIT_OK


def run_solve(config: RunConfig) -> int:
    from aspcore import get_backend
    from crsolver import present, sparc_answer_sets
    from crsolver.solver import format_support
    from grounder import ground_program
    from sortcheck import load_program
    from translate.pipeline import solve_by_translation

    started = time.perf_counter()
    checked = load_program(config.input_path, config.atom_cap)
    cap = config.candidate_cap if config.backend == "search" else None
    backend = get_backend(config.backend, cap)
    ground = ground_program(checked.program, checked.interpretation, checked.declarations)

    if config.engine == "direct":
        answers = sparc_answer_sets(ground, config.limit, backend)
    else:
        answers = solve_by_translation(checked, config.limit, backend)
    elapsed_ms = (time.perf_counter() - started) * 1000

    for answer in answers:
        shown = present(answer, ground, config.show_sorts)
        if config.format == "json":
            record = AnswerRecord(
                literals=[str(lit) for lit in shown.sorted_literals()],
                support=[str(name) for name in shown.support],
                elapsed_ms=round(elapsed_ms, 3),
            )
            print(record.model_dump_json())
        else:
            print(shown)
            if config.show_support:
                print(f"% support: {format_support(shown)}")

    logger.debug(f"solve: {len(answers)} answer sets in {elapsed_ms:.1f} ms")
    return EXIT_OK if answers else EXIT_INCONSISTENT


def run_translate(config: RunConfig) -> int:
    from aspcore import get_backend
    from sortcheck import load_program
    from translate.pipeline import translated_answer_sets
    from translate.translator import emit_dlv_text, translate

    checked = load_program(config.input_path, config.atom_cap)
    text = emit_dlv_text(translate(checked))

    if config.output_path is not None:
        config.output_path.write_text(text, encoding="utf-8")
        logger.info(f"Counterpart written to {config.output_path}")
    elif not (config.solver_path or config.solve_counterpart):
        sys.stdout.write(text)

    if not (config.solver_path or config.solve_counterpart):
        return EXIT_OK

    if config.solver_path:
        answers = translated_answer_sets(
            checked, config.limit, external=True, solver_path=config.solver_path
        )
    else:
        answers = translated_answer_sets(
            checked, config.limit, get_backend("search", config.candidate_cap)
        )
    for answer in answers:
        print(answer)
    return EXIT_OK if answers else EXIT_INCONSISTENT


def run_bench(args: argparse.Namespace) -> int:
    from bench.runner import LOW_DENSITIES, format_report, run_sweep

    densities = list(LOW_DENSITIES) if args.low_density else args.densities
    df = run_sweep(args.vertices, densities, args.seeds, args.engines, args.emit)
    sys.stdout.write(format_report(df))
    return EXIT_OK if (df["verdict"] == "ok").all() else EXIT_INCONSISTENT


def main(argv: list[str] | None = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.command is None:
        parser.print_help()
        return EXIT_ERROR

    setup_logging("DEBUG" if args.verbose else None)

    try:
        config = build_config(args)
    except ValidationError as e:
        for err in e.errors():
            field = " -> ".join(str(loc) for loc in err.get("loc", []))
            print(f"sparc: invalid option {field}: {err.get('msg', '')}", file=sys.stderr)
        return EXIT_ERROR

    handlers = {
        "check": run_check,
        "ground": run_ground,
        "solve": run_solve,
        "translate": run_translate,
    }
    try:
        if config.verb == "bench":
            return run_bench(args)
        return handlers[config.verb](config)
    except DiagnosticError as e:
        for diagnostic in e.diagnostics:
            print(diagnostic.format(), file=sys.stderr)
        return EXIT_ERROR
    except CapacityError as e:
        print(f"sparc: resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except ExternalSolverError as e:
        print(f"sparc: external solver: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (GroundingError, EvaluationError, BenchError) as e:
        print(f"sparc: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"sparc: {e}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
