"""Per-iteration horizon metrics and their internal consistency."""
from __future__ import annotations

from collections import deque

import pytest
from hypothesis import given, settings

from netdiffuse.errors import UnknownNodeError
from netdiffuse.graph import graph_from_text, induced_subgraph
from netdiffuse.metrics import (
    METRICS_COLUMNS,
    evaluate_trace,
    metrics_cells,
    summarize_speed,
)
from netdiffuse.models import ModelParams, run_cns, run_ic, run_si

from conftest import complete_graph, random_graphs


def horizon_distance_oracle(g, members):
    """All finite pairwise distances inside the induced horizon, by a
    dict-and-queue BFS that shares nothing with the scipy-backed path."""
    members = sorted(members)
    adj = {
        v: [u for u in g.neighbors_of(v) if u in set(members)] for v in members
    }
    out = []
    for src in members:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        out.extend(d for node, d in dist.items() if node > src)
    return out


class TestEvaluateTrace:
    def test_k3_full_coverage_row(self):
        g = complete_graph(3)
        trace = run_cns(g, "0")
        rows = evaluate_trace(g, trace)
        assert len(rows) == 1
        row = rows[0]
        assert row.coverage == 1.0
        assert row.diameter == 1
        assert row.density == 1.0
        assert row.avg_degree == 2.0

    def test_initial_row_is_all_zeros(self):
        g = graph_from_text("a b\nb c")
        trace = run_cns(g, "a")
        row = evaluate_trace(g, trace, include_initial=True)[0]
        assert row.iteration == 0
        assert row.horizon_nodes == 1
        assert (row.diameter, row.avg_distance, row.density, row.avg_degree) == (
            0,
            0.0,
            0.0,
            0.0,
        )

    def test_karate_cns_horizons(self, karate):
        rows = evaluate_trace(karate, run_cns(karate, "2"))
        assert [(r.horizon_nodes, r.horizon_edges) for r in rows] == [
            (11, 24),
            (27, 61),
            (33, 76),
        ]
        assert [r.diameter for r in rows] == [2, 4, 5]
        assert [round(r.avg_distance, 4) for r in rows] == [1.5636, 2.2906, 2.4148]

    def test_foreign_trace_rejected(self, karate):
        trace = run_cns(graph_from_text("x y"), "x")
        with pytest.raises(UnknownNodeError):
            evaluate_trace(karate, trace)

    @settings(max_examples=30, deadline=None)
    @given(random_graphs())
    def test_consistency_and_monotonicity(self, g):
        trace = run_si(g, g.label(0), ModelParams(si_beta=0.6, rng_seed=5))
        rows = evaluate_trace(g, trace)
        previous = None
        for row in rows:
            assert abs(row.avg_degree - row.density * (row.horizon_nodes - 1)) <= 1e-9
            assert row.coverage == row.horizon_nodes / g.node_count
            if previous is not None:
                assert row.horizon_nodes >= previous.horizon_nodes
                assert row.horizon_edges >= previous.horizon_edges
                assert row.coverage >= previous.coverage
            previous = row

    @settings(max_examples=20, deadline=None)
    @given(random_graphs(max_nodes=16))
    def test_distances_match_queue_bfs(self, g):
        trace = run_ic(g, g.label(0))
        members = {g.index(l) for l in trace.cumulative_labels()}
        rows = evaluate_trace(g, trace)
        if not rows:
            return
        finite = horizon_distance_oracle(g, members)
        last = rows[-1]
        if finite:
            assert last.diameter == max(finite)
            assert last.avg_distance == pytest.approx(sum(finite) / len(finite))


class TestSummarizeSpeed:
    def test_karate(self, karate):
        s = summarize_speed(run_cns(karate, "2"))
        assert s.total_iterations == 3
        assert s.final_coverage == pytest.approx(33 / 34)

    def test_no_spread(self):
        g = graph_from_text("a b\nb c\nc d\nd a")
        s = summarize_speed(run_cns(g, "a"))
        assert s.total_iterations == 0
        assert s.final_coverage == 0.25


class TestCsvCells:
    def test_column_order_is_fixed(self):
        assert METRICS_COLUMNS == (
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

    def test_formatting(self, karate):
        rows = evaluate_trace(karate, run_cns(karate, "2"))
        cells = metrics_cells("karate", "cns", 1, "2", 10, rows[0])
        assert cells == [
            "karate",
            "cns",
            "1",
            "2",
            "1",
            "10",
            "11",
            "0.323529",
            "2",
            "1.563636",
            "0.436364",
            "4.363636",
        ]
