"""Diffusion engines: strong-tie cascade, independent cascade, SI epidemic.

All three run in synchronous rounds against the start-of-round active
set, so activation order within a round never matters. Iteration t of a
trace records the state after round t; the seed alone is iteration 0 and
is never recorded as a row. Rounds that activate nothing are not
recorded, which keeps cumulative coverage strictly increasing.

Stochastic draws are ordered: actors by ascending internal index, then
targets by ascending internal index, one uniform per (actor, target)
attempt. Streams derive from (rng_seed, run_index), so repetitions of
one experiment are independent but individually reproducible.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InactiveNodeError
from .graph import Graph
from .ties import TieStrengthTable, build_tie_strength_table

__all__ = [
    "ModelParams",
    "TraceIteration",
    "DiffusionTrace",
    "cns_activate",
    "run_cns",
    "run_ic",
    "run_si",
    "trace_to_json",
    "trace_from_json",
]

SI_CAP_FACTOR = 10


@dataclass(frozen=True)
class ModelParams:
    """Knobs shared by the stochastic models."""

    ic_probability: float = 1.0
    si_beta: float = 0.5
    rng_seed: int = 42

    def __post_init__(self) -> None:
        if not 0.0 <= self.ic_probability <= 1.0:
            raise ValueError(f"ic_probability not in [0, 1]: {self.ic_probability}")
        if not 0.0 <= self.si_beta <= 1.0:
            raise ValueError(f"si_beta not in [0, 1]: {self.si_beta}")


@dataclass(frozen=True)
class TraceIteration:
    index: int
    newly_active: tuple[str, ...]


@dataclass(frozen=True)
class DiffusionTrace:
    """One run of one model from one seed, as per-round label sets.

    Labels keep the trace meaningful away from the graph object; callers
    that need indices resolve them against the source graph. node_count
    is the size of the graph the run saw, so coverage is computable from
    the trace alone. truncated marks runs stopped by an iteration cap
    with spreadable or unreachable nodes left over.
    """

    model: str
    seed: str
    params: dict
    node_count: int
    iterations: tuple[TraceIteration, ...]
    truncated: bool = False

    @property
    def total_iterations(self) -> int:
        return len(self.iterations)

    def cumulative_labels(self, upto: int | None = None) -> set[str]:
        """Active labels after iteration `upto` (0 = seed only, None = all)."""
        if upto is None:
            upto = len(self.iterations)
        out = {self.seed}
        for it in self.iterations[:upto]:
            out.update(it.newly_active)
        return out

    def cumulative_counts(self) -> list[int]:
        counts = []
        total = 1
        for it in self.iterations:
            total += len(it.newly_active)
            counts.append(total)
        return counts

    def coverage_series(self) -> list[float]:
        return [c / self.node_count for c in self.cumulative_counts()]

    @property
    def final_coverage(self) -> float:
        return self.cumulative_counts()[-1] / self.node_count if self.iterations else 1.0 / self.node_count


def _sorted_labels(g: Graph, nodes: Iterable[int]) -> tuple[str, ...]:
    return tuple(sorted(g.label(v) for v in nodes))


def _finish(
    g: Graph,
    model: str,
    seed: int,
    params: dict,
    rounds: list[set[int]],
    truncated: bool,
) -> DiffusionTrace:
    iterations = tuple(
        TraceIteration(index=i + 1, newly_active=_sorted_labels(g, nodes))
        for i, nodes in enumerate(rounds)
    )
    return DiffusionTrace(
        model=model,
        seed=g.label(seed),
        params=params,
        node_count=g.node_count,
        iterations=iterations,
        truncated=truncated,
    )


def cns_activate(
    g: Graph, table: TieStrengthTable, v: int, active: frozenset[int] | set[int]
) -> set[int]:
    """Targets one active node reaches in a single round, minus the active set.

    Three routes combine: the node's own strongest ties; for each
    strongest-tie pair, the pair's contributors that either endpoint is
    adjacent to; and inactive neighbors whose own strongest tie points
    back at the node.
    """
    if v not in active:
        raise InactiveNodeError(f"node {g.label(v)!r} is not active")
    targets: set[int] = set()
    for u in g.neighbors_of(v):
        if (v, u) in table.strong_ties:
            targets.add(u)
            members = table.contributor_members(v, u)
            nv = g.neighbor_set(v)
            nu = g.neighbor_set(u)
            targets.update(z for z in members if z in nv or z in nu)
        if u not in active and (u, v) in table.strong_ties:
            targets.add(u)
    return targets - set(active)


def run_cns(
    g: Graph,
    seed: str,
    table: TieStrengthTable | None = None,
    max_iterations: int | None = None,
) -> DiffusionTrace:
    """Deterministic strong-tie cascade from one seed label."""
    s = g.index(seed)
    if table is None:
        table = build_tie_strength_table(g)
    active: set[int] = {s}
    frontier = [s]
    rounds: list[set[int]] = []
    truncated = False
    while frontier:
        if max_iterations is not None and len(rounds) >= max_iterations:
            truncated = True
            break
        start = frozenset(active)
        newly: set[int] = set()
        for v in frontier:
            newly |= cns_activate(g, table, v, start)
        newly -= active
        if not newly:
            break
        rounds.append(newly)
        active |= newly
        frontier = sorted(newly)
    params = {"max_iterations": max_iterations}
    return _finish(g, "cns", s, params, rounds, truncated)


def _stream(rng_seed: int, run_index: int) -> np.random.Generator:
    # Mask into uint64 so negative seeds stay legal and deterministic.
    seq = np.random.SeedSequence([rng_seed & (2**64 - 1), run_index])
    return np.random.Generator(np.random.PCG64(seq))


def run_ic(
    g: Graph,
    seed: str,
    params: ModelParams | None = None,
    run_index: int = 0,
    max_iterations: int | None = None,
) -> DiffusionTrace:
    """Independent cascade: each node attempts each neighbor once, the
    round after its own activation. With probability 1 the cumulative
    sets are exactly the seed's breadth-first balls."""
    if params is None:
        params = ModelParams()
    s = g.index(seed)
    p = params.ic_probability
    rng = _stream(params.rng_seed, run_index)
    active: set[int] = {s}
    frontier = [s]
    rounds: list[set[int]] = []
    truncated = False
    while frontier:
        if max_iterations is not None and len(rounds) >= max_iterations:
            truncated = True
            break
        newly: set[int] = set()
        for v in frontier:
            for u in g.neighbors_of(v):
                if u in active:
                    continue
                # random() lives in [0, 1), so p = 1 always succeeds.
                if rng.random() < p:
                    newly.add(u)
        if not newly:
            break
        rounds.append(newly)
        active |= newly
        frontier = sorted(newly)
    out_params = {
        "p": p,
        "rng_seed": params.rng_seed,
        "run_index": run_index,
        "max_iterations": max_iterations,
    }
    return _finish(g, "ic", s, out_params, rounds, truncated)


def run_si(
    g: Graph,
    seed: str,
    params: ModelParams | None = None,
    run_index: int = 0,
    max_iterations: int | None = None,
) -> DiffusionTrace:
    """SI epidemic: every infected node attempts every susceptible
    neighbor every round, and infection is permanent.

    The clock cap (default 10x node count) counts rounds whether or not
    they infect anyone; only infecting rounds become trace iterations.
    Stopping with susceptible nodes left, for any reason, sets the
    truncated flag.
    """
    if params is None:
        params = ModelParams()
    s = g.index(seed)
    beta = params.si_beta
    cap = max_iterations if max_iterations is not None else SI_CAP_FACTOR * g.node_count
    rng = _stream(params.rng_seed, run_index)
    infected: set[int] = {s}
    rounds: list[set[int]] = []
    clock = 0
    truncated = False
    while len(infected) < g.node_count:
        if clock >= cap:
            truncated = True
            break
        clock += 1
        newly: set[int] = set()
        attempted = False
        for v in sorted(infected):
            for u in g.neighbors_of(v):
                if u in infected:
                    continue
                attempted = True
                if rng.random() < beta:
                    newly.add(u)
        if not attempted:
            # Remaining susceptibles are unreachable; the cap would never
            # trigger another draw, so stop now with the same outcome.
            truncated = True
            break
        if newly:
            rounds.append(newly)
            infected |= newly
    out_params = {
        "beta": beta,
        "rng_seed": params.rng_seed,
        "run_index": run_index,
        "cap": cap,
    }
    return _finish(g, "si", s, out_params, rounds, truncated)


def trace_to_json(trace: DiffusionTrace) -> str:
    payload = {
        "model": trace.model,
        "seed": trace.seed,
        "params": trace.params,
        "node_count": trace.node_count,
        "truncated": trace.truncated,
        "iterations": [
            {"index": it.index, "newly_active": list(it.newly_active)}
            for it in trace.iterations
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def trace_from_json(text: str) -> DiffusionTrace:
    payload = json.loads(text)
    iterations = tuple(
        TraceIteration(index=it["index"], newly_active=tuple(it["newly_active"]))
        for it in payload["iterations"]
    )
    return DiffusionTrace(
        model=payload["model"],
        seed=payload["seed"],
        params=payload["params"],
        node_count=payload["node_count"],
        iterations=iterations,
        truncated=payload["truncated"],
    )
