"""Diffusion model behavior: the cascade rules, RNG discipline, traces."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netdiffuse.errors import InactiveNodeError, UnknownNodeError
from netdiffuse.graph import bfs_distances, graph_from_text
from netdiffuse.models import (
    ModelParams,
    cns_activate,
    run_cns,
    run_ic,
    run_si,
    trace_from_json,
    trace_to_json,
)
from netdiffuse.ties import build_tie_strength_table

from conftest import complete_graph, cycle_graph, random_graphs, star_graph


def indices(g, labels):
    return {g.index(l) for l in labels}


def check_monotone_and_closed(g, trace, same_round_ok=False):
    """Structural trace checks shared across models.

    Cumulative sets must strictly grow, and every activation must touch
    the active region: strictly earlier nodes normally, same-round
    neighbors allowed for the strong-tie cascade (contributor targets
    can share a round with the pair that pulled them in).
    """
    seen = {g.index(trace.seed)}
    for it in trace.iterations:
        newly = indices(g, it.newly_active)
        assert newly, "recorded iteration with no activations"
        assert not (newly & seen)
        allowed = seen | newly if same_round_ok else seen
        for v in newly:
            assert any(u in allowed and u != v for u in g.neighbors_of(v))
        seen |= newly
    counts = trace.cumulative_counts()
    assert counts == sorted(set(counts)), "coverage not strictly increasing"


class TestCnsActivate:
    def test_two_node(self):
        g = graph_from_text("a b")
        table = build_tie_strength_table(g)
        assert cns_activate(g, table, 0, {0}) == {1}

    def test_all_active_k3(self):
        g = complete_graph(3)
        table = build_tie_strength_table(g)
        assert cns_activate(g, table, 0, {0, 1, 2}) == set()

    def test_inactive_actor_rejected(self):
        g = graph_from_text("a b")
        table = build_tie_strength_table(g)
        with pytest.raises(InactiveNodeError):
            cns_activate(g, table, 0, {1})

    def test_karate_first_step_reaches_partner(self, karate):
        table = build_tie_strength_table(karate)
        v = karate.index("2")
        out = cns_activate(karate, table, v, {v})
        assert karate.index("1") in out

    def test_reverse_strong_tie_pulls_neighbor(self):
        # leaf's only edge points at the hub, so once the hub is active
        # the leaf joins through the reverse direction even though the
        # hub's own strongest tie lies elsewhere
        g = graph_from_text("h a\nh b\nh leaf\na b")
        table = build_tie_strength_table(g)
        h = g.index("h")
        leaf = g.index("leaf")
        assert (h, leaf) not in table.strong_ties
        assert (leaf, h) in table.strong_ties
        assert leaf in cns_activate(g, table, h, {h})


class TestRunCns:
    def test_karate_golden_counts(self, karate):
        trace = run_cns(karate, "2")
        assert trace.total_iterations == 3
        assert trace.cumulative_counts() == [11, 27, 33]
        assert set(karate.labels) - trace.cumulative_labels() == {"10"}

    def test_two_node_full_coverage(self):
        trace = run_cns(graph_from_text("a b"), "a")
        assert trace.total_iterations == 1
        assert trace.final_coverage == 1.0

    def test_k3_one_round(self):
        trace = run_cns(complete_graph(3), "0")
        assert trace.total_iterations == 1
        assert trace.final_coverage == 1.0

    def test_no_strong_ties_means_no_spread(self):
        trace = run_cns(cycle_graph(4), "0")
        assert trace.total_iterations == 0
        assert trace.final_coverage == 0.25
        assert not trace.truncated

    def test_unknown_seed(self):
        with pytest.raises(UnknownNodeError):
            run_cns(graph_from_text("a b"), "zz")

    def test_deterministic(self, karate):
        a = run_cns(karate, "2")
        b = run_cns(karate, "2")
        assert trace_to_json(a) == trace_to_json(b)

    def test_max_iterations_truncates(self, karate):
        trace = run_cns(karate, "2", max_iterations=1)
        assert trace.total_iterations == 1
        assert trace.truncated

    @settings(max_examples=40, deadline=None)
    @given(random_graphs())
    def test_structure_and_two_hop_containment(self, g):
        seed = g.label(0)
        trace = run_cns(g, seed)
        check_monotone_and_closed(g, trace, same_round_ok=True)
        # contributor activation can jump past direct neighbors, but
        # never further than two hops per round
        dist = bfs_distances(g, 0)
        for t in range(1, trace.total_iterations + 1):
            for label in trace.cumulative_labels(t):
                assert dist[g.index(label)] <= 2 * t


class TestRunIc:
    def test_karate_golden_counts(self, karate):
        trace = run_ic(karate, "2")
        assert trace.total_iterations == 3
        assert trace.cumulative_counts() == [10, 23, 34]

    def test_zero_probability(self, karate):
        trace = run_ic(karate, "2", ModelParams(ic_probability=0.0))
        assert trace.total_iterations == 0

    def test_star_center_one_round(self):
        trace = run_ic(star_graph(3), "c")
        assert trace.total_iterations == 1
        assert trace.final_coverage == 1.0

    def test_unknown_seed(self):
        with pytest.raises(UnknownNodeError):
            run_ic(graph_from_text("a b"), "zz")

    @settings(max_examples=50, deadline=None)
    @given(random_graphs(), st.integers(min_value=0, max_value=10))
    def test_p1_equals_bfs_balls(self, g, src):
        src = src % g.node_count
        trace = run_ic(g, g.label(src))
        dist = bfs_distances(g, src)
        horizon = trace.total_iterations
        for t in range(horizon + 1):
            ball = {g.label(v) for v, d in dist.items() if d <= t}
            assert trace.cumulative_labels(t) == ball

    @settings(max_examples=30, deadline=None)
    @given(random_graphs(), st.integers(min_value=0, max_value=3))
    def test_stochastic_reproducible_and_valid(self, g, run_index):
        params = ModelParams(ic_probability=0.5, rng_seed=7)
        a = run_ic(g, g.label(0), params, run_index=run_index)
        b = run_ic(g, g.label(0), params, run_index=run_index)
        assert trace_to_json(a) == trace_to_json(b)
        check_monotone_and_closed(g, a)


class TestRunSi:
    def test_beta1_matches_ic_p1(self, karate):
        si = run_si(karate, "2", ModelParams(si_beta=1.0))
        ic = run_ic(karate, "2")
        assert si.iterations == ic.iterations
        assert not si.truncated

    def test_beta0_truncates_at_cap(self):
        g = graph_from_text("a b\nb c")
        trace = run_si(g, "a", ModelParams(si_beta=0.0))
        assert trace.iterations == ()
        assert trace.truncated
        assert trace.final_coverage == pytest.approx(1 / 3)

    def test_unreachable_remainder_flags_truncation(self):
        g = graph_from_text("a b\nc d")
        trace = run_si(g, "a", ModelParams(si_beta=1.0))
        assert trace.cumulative_labels() == {"a", "b"}
        assert trace.truncated

    def test_explicit_cap_overrides_default(self, karate):
        trace = run_si(karate, "2", ModelParams(si_beta=1.0), max_iterations=1)
        assert trace.total_iterations == 1
        assert trace.truncated

    def test_unknown_seed(self):
        with pytest.raises(UnknownNodeError):
            run_si(graph_from_text("a b"), "zz")

    @settings(max_examples=30, deadline=None)
    @given(random_graphs(), st.integers(min_value=0, max_value=3))
    def test_reproducible_and_valid(self, g, run_index):
        params = ModelParams(si_beta=0.5, rng_seed=11)
        a = run_si(g, g.label(0), params, run_index=run_index)
        b = run_si(g, g.label(0), params, run_index=run_index)
        assert trace_to_json(a) == trace_to_json(b)
        check_monotone_and_closed(g, a)

    def test_different_run_indices_diverge_somewhere(self, karate):
        params = ModelParams(si_beta=0.5, rng_seed=42)
        traces = [run_si(karate, "2", params, run_index=k) for k in range(8)]
        payloads = {trace_to_json(t) for t in traces}
        assert len(payloads) > 1


class TestTraceSerialization:
    def test_roundtrip_karate(self, karate):
        trace = run_cns(karate, "2")
        assert trace_from_json(trace_to_json(trace)) == trace

    @settings(max_examples=30, deadline=None)
    @given(random_graphs())
    def test_roundtrip_random(self, g):
        trace = run_si(g, g.label(0), ModelParams(si_beta=0.7, rng_seed=3))
        assert trace_from_json(trace_to_json(trace)) == trace

    def test_payload_shape(self):
        trace = run_cns(graph_from_text("a b"), "a")
        text = trace_to_json(trace)
        assert '"model": "cns"' in text
        assert '"seed": "a"' in text
        assert '"newly_active"' in text
