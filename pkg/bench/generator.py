"""Random shortest-path instances and their SPARC encoding.

A graph with ``n`` vertices and density ``d`` has ``round(d * n * (n - 1))``
directed edges, drawn without self-loops or repeats. The source and target
are the pair with the longest finite distance, ties broken by the smallest
(source, target).

The encoding selects path edges with a cr-rule, so a minimal abductive
support is a shortest path::

    in(X,Y) :+ edge(X,Y).
"""

from __future__ import annotations

import random
from collections import deque

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import settings
from utils.exceptions import DisconnectedGraphError, InvalidBenchParametersError

Edge = tuple[int, int]


class BenchInstance(BaseModel):
    """A generated digraph with its source/target pair."""

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=2, description="Number of vertices n")
    density: float = Field(..., gt=0.0, le=1.0, description="e / (n * (n - 1))")
    seed: int = Field(..., description="Seed of the attempt that produced the graph")
    edges: tuple[Edge, ...] = Field(..., min_length=1)
    source: int = Field(..., ge=0)
    target: int = Field(..., ge=0)
    distance: int = Field(..., ge=1, description="Breadth-first distance from source to target")

    @field_validator("edges")
    @classmethod
    def validate_edges(cls, v: tuple[Edge, ...]) -> tuple[Edge, ...]:
        if len(set(v)) != len(v):
            raise ValueError("duplicate edges")
        if any(x == y for x, y in v):
            raise ValueError("self-loops are not allowed")
        return v

    @model_validator(mode="after")
    def validate_vertices(self) -> BenchInstance:
        n = self.vertex_count
        if any(not (0 <= x < n and 0 <= y < n) for x, y in self.edges):
            raise ValueError(f"edge endpoint outside 0..{n - 1}")
        if not (self.source < n and self.target < n):
            raise ValueError("source and target must be vertices")
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def name(self) -> str:
        return f"sp_n{self.vertex_count}_d{self.density:g}_s{self.seed}"


def edge_count(n: int, density: float) -> int:
    """Number of edges for ``n`` vertices at ``density``.

    Raises:
        InvalidBenchParametersError: n < 2, density outside (0, 1], or no edge
    """
    if n < 2:
        raise InvalidBenchParametersError(f"need at least 2 vertices, got {n}")
    if not 0.0 < density <= 1.0:
        raise InvalidBenchParametersError(f"density must be in (0, 1], got {density}")
    count = round(density * n * (n - 1))
    if count < 1:
        raise InvalidBenchParametersError(
            f"density {density} yields no edge for {n} vertices"
        )
    return count


def random_digraph(n: int, count: int, rng: random.Random) -> tuple[Edge, ...]:
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    return tuple(sorted(rng.sample(pairs, count)))


def bfs_distances(n: int, edges: tuple[Edge, ...] | list[Edge], source: int) -> dict[int, int]:
    """Distances of the vertices reachable from ``source``."""
    successors: dict[int, list[int]] = {v: [] for v in range(n)}
    for x, y in edges:
        successors[x].append(y)

    distance = {source: 0}
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        for nxt in successors[vertex]:
            if nxt not in distance:
                distance[nxt] = distance[vertex] + 1
                queue.append(nxt)
    return distance


def farthest_pair(n: int, edges: tuple[Edge, ...]) -> tuple[int, int, int] | None:
    """(source, target, distance) of the longest finite distance, or None."""
    best: tuple[int, int, int] | None = None
    for source in range(n):
        for target, dist in sorted(bfs_distances(n, edges, source).items()):
            if dist > 0 and (best is None or dist > best[2]):
                best = (source, target, dist)
    return best


def gen_shortest_path(n: int, density: float, seed: int) -> tuple[BenchInstance, str]:
    """Generate an instance and its SPARC program text.

    A graph without any connected pair is regenerated from the next seed,
    at most ``settings.BENCH_MAX_RETRIES`` times.

    Raises:
        InvalidBenchParametersError: The parameters allow no edge
        DisconnectedGraphError: Every attempt produced a graph without a path
    """
    count = edge_count(n, density)
    for attempt in range(settings.BENCH_MAX_RETRIES):
        current = seed + attempt
        edges = random_digraph(n, count, random.Random(current))
        pair = farthest_pair(n, edges)
        if pair is None:
            logger.debug(f"Seed {current}: no connected pair, regenerating")
            continue
        source, target, distance = pair
        instance = BenchInstance(
            vertex_count=n,
            density=density,
            seed=current,
            edges=edges,
            source=source,
            target=target,
            distance=distance,
        )
        logger.debug(
            f"Generated {instance.name}: {count} edges, {source}->{target} at distance {distance}"
        )
        return instance, encode_instance(instance)

    raise DisconnectedGraphError(
        f"no connected pair after {settings.BENCH_MAX_RETRIES} attempts (n={n}, d={density}, seed={seed})"
    )


def encode_instance(instance: BenchInstance) -> str:
    """SPARC program whose answer sets mark a shortest path with ``in/2``."""
    lines = ["sorts definition"]
    lines.extend(f"vertex({v})." for v in range(instance.vertex_count))
    lines.extend(f"edge({x},{y})." for x, y in instance.edges)
    lines += [
        "predicates declaration",
        "in(vertex,vertex)",
        "reached(vertex)",
        "program rules",
        f"reached({instance.source}).",
        "reached(Y) :- reached(X), in(X,Y).",
        "in(X,Y) :+ edge(X,Y).",
        f":- not reached({instance.target}).",
    ]
    return "\n".join(lines) + "\n"
