"""Per-iteration evaluation of diffusion traces.

Each iteration's cumulative active set induces a subgraph, the diffusion
horizon, and every reported quantity is a property of that horizon:
coverage against the full graph, then diameter, average distance,
density and average degree within it. Distance metrics skip
disconnected pairs; a single-node horizon reports zeros across the
board so pre-diffusion rows stay representable.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO

from .graph import (
    Graph,
    average_degree,
    average_distance,
    density,
    diameter,
    induced_subgraph,
)
from .models import DiffusionTrace

__all__ = [
    "IterationMetrics",
    "SpeedSummary",
    "METRICS_COLUMNS",
    "evaluate_trace",
    "summarize_speed",
    "metrics_cells",
    "write_metrics_csv",
]

METRICS_COLUMNS = (
    "dataset",
    "model",
    "run",
    "seed_node",
    "iteration",
    "new_active",
    "cum_active",
    "coverage",
    "diameter",
    "avg_distance",
    "density",
    "avg_degree",
)


@dataclass(frozen=True)
class IterationMetrics:
    iteration: int
    coverage: float
    horizon_nodes: int
    horizon_edges: int
    diameter: int
    avg_distance: float
    density: float
    avg_degree: float


@dataclass(frozen=True)
class SpeedSummary:
    total_iterations: int
    final_coverage: float


def _horizon_metrics(g: Graph, iteration: int, members: set[int]) -> IterationMetrics:
    horizon = induced_subgraph(g, members)
    n = horizon.node_count
    coverage = n / g.node_count
    if n == 1:
        return IterationMetrics(iteration, coverage, 1, 0, 0, 0.0, 0.0, 0.0)
    return IterationMetrics(
        iteration=iteration,
        coverage=coverage,
        horizon_nodes=n,
        horizon_edges=horizon.edge_count,
        diameter=diameter(horizon),
        avg_distance=average_distance(horizon),
        density=density(horizon),
        avg_degree=average_degree(horizon),
    )


def evaluate_trace(
    g: Graph, trace: DiffusionTrace, include_initial: bool = False
) -> list[IterationMetrics]:
    """One metrics row per trace iteration, computed on the horizon.

    include_initial prepends an iteration-0 row for the seed-only state.
    Labels are resolved against g, so a trace from another graph raises.
    """
    members = {g.index(trace.seed)}
    rows: list[IterationMetrics] = []
    if include_initial:
        rows.append(_horizon_metrics(g, 0, members))
    for it in trace.iterations:
        members.update(g.index(label) for label in it.newly_active)
        rows.append(_horizon_metrics(g, it.index, members))
    return rows


def summarize_speed(trace: DiffusionTrace) -> SpeedSummary:
    """Iteration count and final coverage; a no-spread trace is 0 rounds."""
    if trace.node_count < 1:
        raise ValueError("trace has no nodes")
    return SpeedSummary(
        total_iterations=trace.total_iterations,
        final_coverage=trace.final_coverage,
    )


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def metrics_cells(
    dataset: str,
    model: str,
    run: int | str,
    seed_node: str,
    new_active: int,
    row: IterationMetrics,
) -> list[str]:
    """One CSV row in schema order; integer columns stay undecorated."""
    return [
        dataset,
        model,
        str(run),
        seed_node,
        str(row.iteration),
        str(new_active),
        str(row.horizon_nodes),
        _fmt(row.coverage),
        str(row.diameter),
        _fmt(row.avg_distance),
        _fmt(row.density),
        _fmt(row.avg_degree),
    ]


def write_metrics_csv(stream: IO[str], rows: list[list[str]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(METRICS_COLUMNS)
    writer.writerows(rows)
