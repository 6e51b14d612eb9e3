"""Benchmark sweep: generate, solve, verify against breadth-first search, report."""

from __future__ import annotations

import time
from collections.abc import Iterable
from pathlib import Path

import pandas as pd
from loguru import logger
from pydantic import BaseModel

from aspcore import AnswerSet, AnswerSetBackend
from bench.generator import BenchInstance, gen_shortest_path
from crsolver import sparc_answer_sets
from grounder import ground_program
from sortcheck import check_source
from syntax.nodes import Nat
from translate.pipeline import solve_by_translation

ENGINES = ("direct", "translation")
LOW_DENSITIES = (0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1)


class BenchResult(BaseModel):
    """Outcome of one instance on one engine."""

    instance: str
    engine: str
    vertices: int
    density: float
    edges: int
    distance: int
    support: int | None = None
    path_length: int | None = None
    verdict: str
    seconds: float


def extract_path(answer: AnswerSet, source: int, target: int) -> list[int] | None:
    """Follow the ``in(X,Y)`` literals from ``source``; None unless they form a path to ``target``."""
    step: dict[int, int] = {}
    for literal in answer.literals:
        if literal.is_relation or literal.negated or literal.predicate != "in":
            continue
        if not all(isinstance(arg, Nat) for arg in literal.args):
            return None
        x, y = (arg.value for arg in literal.args)  # type: ignore[union-attr]
        if x in step:
            return None
        step[x] = y

    path = [source]
    while path[-1] != target:
        nxt = step.get(path[-1])
        if nxt is None or nxt in path:
            return None
        path.append(nxt)
    return path if len(path) - 1 == len(step) else None


def verify_answer(instance: BenchInstance, answer: AnswerSet) -> tuple[str, int | None]:
    """Check a solved answer set against the instance.

    Returns:
        (verdict, path length); the verdict is ``ok`` when the ``in``
        literals form a valid path of the breadth-first length and the
        support has that many cr-rules
    """
    path = extract_path(answer, instance.source, instance.target)
    if path is None:
        return "no path", None
    edges = set(instance.edges)
    if any((x, y) not in edges for x, y in zip(path, path[1:])):
        return "invalid edge", len(path) - 1
    length = len(path) - 1
    if length != instance.distance:
        return "not shortest", length
    if len(answer.support) != length:
        return "support mismatch", length
    return "ok", length


def solve_instance(
    instance: BenchInstance,
    text: str,
    engine: str = "direct",
    backend: AnswerSetBackend | None = None,
) -> BenchResult:
    """Solve one instance and verify the first answer set."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine '{engine}', expected one of {ENGINES}")

    started = time.perf_counter()
    checked = check_source(text, f"<{instance.name}>")
    if engine == "direct":
        answers = sparc_answer_sets(
            ground_program(checked.program, checked.interpretation, checked.declarations),
            limit=1,
            backend=backend,
        )
    else:
        answers = solve_by_translation(checked, limit=1, backend=backend)
    elapsed = time.perf_counter() - started

    verdict, length, support = "inconsistent", None, None
    if answers:
        verdict, length = verify_answer(instance, answers[0])
        support = len(answers[0].support)
    if verdict != "ok":
        logger.warning(f"{instance.name} [{engine}]: {verdict}")

    return BenchResult(
        instance=instance.name,
        engine=engine,
        vertices=instance.vertex_count,
        density=instance.density,
        edges=instance.edge_count,
        distance=instance.distance,
        support=support,
        path_length=length,
        verdict=verdict,
        seconds=round(elapsed, 4),
    )


def run_sweep(
    vertex_counts: Iterable[int],
    densities: Iterable[float],
    seeds: Iterable[int],
    engines: Iterable[str] = ("direct",),
    emit_dir: Path | None = None,
    backend: AnswerSetBackend | None = None,
) -> pd.DataFrame:
    """Run every (n, density, seed) combination on every engine.

    Args:
        vertex_counts: Values of n
        densities: Values of d
        seeds: Generator seeds
        engines: ``direct`` and/or ``translation``
        emit_dir: Directory receiving the generated ``.sp`` programs
        backend: Answer-set engine used by both solvers

    Returns:
        One row per instance and engine
    """
    engine_list = list(engines)
    seed_list = list(seeds)
    density_list = list(densities)
    if emit_dir is not None:
        emit_dir.mkdir(parents=True, exist_ok=True)

    rows: list[dict] = []
    for n in vertex_counts:
        for density in density_list:
            for seed in seed_list:
                instance, text = gen_shortest_path(n, density, seed)
                if emit_dir is not None:
                    (emit_dir / f"{instance.name}.sp").write_text(text, encoding="utf-8")
                for engine in engine_list:
                    rows.append(solve_instance(instance, text, engine, backend).model_dump())

    df = pd.DataFrame(rows, columns=list(BenchResult.model_fields))
    failed = int((df["verdict"] != "ok").sum()) if not df.empty else 0
    logger.info(f"Benchmark sweep: {len(df)} runs, {failed} failed verification")
    return df


def format_report(df: pd.DataFrame) -> str:
    """Plain-text table of the sweep plus a per-engine timing summary."""
    if df.empty:
        return "No benchmark runs.\n"

    summary = (
        df.groupby("engine")
        .agg(runs=("verdict", "size"), ok=("verdict", lambda v: int((v == "ok").sum())), mean_seconds=("seconds", "mean"))
        .reset_index()
    )
    summary["mean_seconds"] = summary["mean_seconds"].round(4)
    return df.to_string(index=False) + "\n\n" + summary.to_string(index=False) + "\n"
