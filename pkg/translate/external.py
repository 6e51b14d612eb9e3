"""Running the counterpart through an external DLV executable.

DLV prints one answer set per line as ``{a, b, -c}``. With weak
constraints it prints ``Best model: {...}`` for each improving model,
followed by a ``Cost ([Weight:Level]): <[w:l]>`` line; only the models of
the lowest cost are kept.
"""

from __future__ import annotations

import re
import subprocess
import tempfile
import time
from collections.abc import Sequence
from pathlib import Path

from loguru import logger

from config.settings import settings
from syntax.nodes import Literal
from syntax.parser import parse_literals
from utils.exceptions import (
    ExternalSolverExitError,
    ExternalSolverLaunchError,
    ExternalSolverOutputError,
    SparcSyntaxError,
)

_MODEL = re.compile(r"^(?:Best model:\s*)?(\{.*\})\s*$")
_COST = re.compile(r"^Cost\s*\(\[Weight:Level\]\):\s*<(.*)>\s*$")
_WEIGHT = re.compile(r"\[(\d+):(\d+)\]")


def run_external_solver(
    text: str,
    solver_path: str | None = None,
    args: Sequence[str] = (),
    timeout: float | None = None,
) -> list[frozenset[Literal]]:
    """Solve DLV program text with an external executable.

    Args:
        text: Program in DLV syntax
        solver_path: Executable (``settings.SOLVER_PATH`` when omitted)
        args: Extra command-line arguments placed before the file name
        timeout: Seconds before the process is killed

    Returns:
        The optimal answer sets as literal sets, in output order

    Raises:
        ExternalSolverLaunchError: No solver configured, or it cannot be started
        ExternalSolverExitError: The solver exited with a nonzero status
        ExternalSolverOutputError: The output could not be parsed
    """
    executable = solver_path or settings.SOLVER_PATH
    if not executable:
        raise ExternalSolverLaunchError("no external solver configured (set SPARC_SOLVER_PATH)")

    started = time.perf_counter()
    with tempfile.TemporaryDirectory(prefix="sparc-") as workdir:
        program_file = Path(workdir) / "counterpart.dlv"
        program_file.write_text(text, encoding="utf-8")
        command = [executable, *args, str(program_file)]
        logger.info(f"Running external solver: {' '.join(command)}")
        try:
            completed = subprocess.run(
                command, capture_output=True, text=True, timeout=timeout, check=False
            )
        except (OSError, subprocess.TimeoutExpired) as e:
            raise ExternalSolverLaunchError(f"cannot run {executable}: {e}") from e

    if completed.returncode != 0:
        raise ExternalSolverExitError(completed.returncode, completed.stderr)

    models = parse_solver_output(completed.stdout)
    logger.debug(
        f"External solver returned {len(models)} answer sets in "
        f"{time.perf_counter() - started:.3f}s"
    )
    return models


def parse_solver_output(output: str) -> list[frozenset[Literal]]:
    """Extract the optimal models from DLV standard output.

    Raises:
        ExternalSolverOutputError: A model line does not parse
    """
    models: list[tuple[frozenset[Literal], tuple[int, ...] | None]] = []
    for line in output.splitlines():
        line = line.strip()
        model = _MODEL.match(line)
        if model:
            models.append((_parse_model(model.group(1)), None))
            continue
        cost = _COST.match(line)
        if cost and models:
            literals, _ = models[-1]
            models[-1] = (literals, _cost_vector(cost.group(1)))

    costed = [cost for _, cost in models if cost is not None]
    if not costed:
        return [literals for literals, _ in models]
    best = min(costed)
    return [literals for literals, cost in models if cost == best]


def _parse_model(text: str) -> frozenset[Literal]:
    try:
        return frozenset(parse_literals(text))
    except SparcSyntaxError as e:
        raise ExternalSolverOutputError(f"unparseable answer set '{text}': {e}") from e


def _cost_vector(text: str) -> tuple[int, ...]:
    # highest level first
    pairs = sorted(((int(level), int(weight)) for weight, level in _WEIGHT.findall(text)), reverse=True)
    return tuple(weight for _, weight in pairs)
