"""Regenerate the vendored edge lists under data/.

karate and lesmis come from networkx's bundled copies (labels: 1-indexed
integers for karate, character names for lesmis). jazz and polblogs are
deterministic synthetic stand-ins sized to the registry's expected
node/edge counts: a preferential-attachment core topped up with random
extra edges until the edge count matches exactly. Stand-in files say so
in their header comment.

Requires networkx (not a package runtime dependency):
    python scripts/make_datasets.py [data_dir]
"""
from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from netdiffuse.graph import graph_from_edges, serialize_edge_list  # noqa: E402


def karate_edges() -> list[tuple[str, str]]:
    g = nx.karate_club_graph()
    return [(str(a + 1), str(b + 1)) for a, b in g.edges()]


def lesmis_edges() -> list[tuple[str, str]]:
    g = nx.les_miserables_graph()
    for name in g.nodes():
        assert " " not in name, f"label with whitespace: {name!r}"
    return [(str(a), str(b)) for a, b in g.edges()]


def synthetic_edges(n: int, target_edges: int, m: int, seed: int) -> list[tuple[str, str]]:
    g = nx.barabasi_albert_graph(n, m, seed=seed)
    assert g.number_of_edges() <= target_edges
    rng = nx.utils.create_random_state(seed + 1)
    nodes = list(g.nodes())
    while g.number_of_edges() < target_edges:
        a, b = rng.choice(len(nodes), size=2, replace=False)
        if not g.has_edge(a, b):
            g.add_edge(a, b)
    assert nx.is_connected(g)
    return [(str(a + 1), str(b + 1)) for a, b in g.edges()]


def write(path: Path, header: list[str], edges: list[tuple[str, str]],
          expect: tuple[int, int]) -> None:
    g = graph_from_edges(edges)
    assert (g.node_count, g.edge_count) == expect, (
        path.name, g.node_count, g.edge_count, expect
    )
    body = serialize_edge_list(g)
    text = "".join(f"# {line}\n" for line in header) + body
    path.write_text(text, encoding="utf-8")
    print(f"{path}: {g.node_count} nodes, {g.edge_count} edges")


def main() -> None:
    data_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parents[1] / "data"
    )
    data_dir.mkdir(parents=True, exist_ok=True)
    write(
        data_dir / "karate.txt",
        ["karate: Zachary's karate club, 1-indexed node labels"],
        karate_edges(),
        (34, 78),
    )
    write(
        data_dir / "lesmis.txt",
        ["lesmis: Les Miserables character co-occurrence network"],
        lesmis_edges(),
        (77, 254),
    )
    write(
        data_dir / "jazz.txt",
        [
            "jazz: SYNTHETIC STAND-IN sized like the jazz collaboration network",
            "(198 nodes / 2742 edges); deterministic output of scripts/make_datasets.py",
        ],
        synthetic_edges(198, 2742, m=14, seed=198),
        (198, 2742),
    )
    write(
        data_dir / "polblogs.txt",
        [
            "polblogs: SYNTHETIC STAND-IN sized like the political blogs network",
            "(1224 nodes / 16718 edges); deterministic output of scripts/make_datasets.py",
        ],
        synthetic_edges(1224, 16718, m=13, seed=1224),
        (1224, 16718),
    )


if __name__ == "__main__":
    main()
