"""Shared fixtures and graph generators for the test suite."""
from __future__ import annotations

import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from netdiffuse.graph import Graph, graph_from_edges, load_edge_list_path

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def er_edges(n: int, p: float, rng: random.Random) -> list[tuple[str, str]]:
    """Erdos-Renyi edge list over labels '0'..'n-1'; never empty."""
    edges = [
        (str(i), str(j))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    if not edges:
        edges = [("0", "1")]
    return edges


def er_graph(n: int, p: float, rng: random.Random) -> Graph:
    return graph_from_edges(er_edges(n, p, rng))


@st.composite
def random_graphs(draw, max_nodes: int = 20, min_nodes: int = 2):
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    p = draw(st.sampled_from([0.1, 0.3, 0.6]))
    seed = draw(st.integers(min_value=0, max_value=2**20))
    return er_graph(n, p, random.Random(seed))


def complete_graph(n: int) -> Graph:
    return graph_from_edges(
        [(str(i), str(j)) for i in range(n) for j in range(i + 1, n)]
    )


def path_graph(n: int) -> Graph:
    return graph_from_edges([(str(i), str(i + 1)) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    edges = [(str(i), str((i + 1) % n)) for i in range(n)]
    return graph_from_edges(edges)


def star_graph(leaves: int) -> Graph:
    return graph_from_edges([("c", f"l{i}") for i in range(leaves)])


@pytest.fixture(scope="session")
def karate() -> Graph:
    return load_edge_list_path(DATA_DIR / "karate.txt")


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR
