"""Immutable undirected simple graph with loading and distance primitives.

Nodes carry dense 0-based internal indices assigned in first-appearance
order; the original dataset labels are kept as opaque strings. All
functions here are pure and the graph is safe to share between threads.
"""
from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    EdgeListParseError,
    EmptyInputError,
    UnknownNodeError,
)

__all__ = [
    "Graph",
    "load_edge_list",
    "load_edge_list_path",
    "serialize_edge_list",
    "largest_connected_component",
    "induced_subgraph",
    "bfs_distances",
    "all_pairs_distances",
    "diameter",
    "average_distance",
    "density",
    "average_degree",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: sorted adjacency lists plus a label map.

    ``labels[i]`` is the original label of internal node ``i`` and the map
    is a bijection. Adjacency is symmetric, has no self loops and no
    duplicate edges.
    """

    labels: tuple[str, ...]
    neighbors: tuple[tuple[int, ...], ...]
    _index_of: dict[str, int] = field(init=False, repr=False, compare=False)
    _neighbor_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index_of", {label: i for i, label in enumerate(self.labels)}
        )
        object.__setattr__(
            self, "_neighbor_sets", tuple(frozenset(ns) for ns in self.neighbors)
        )

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.neighbors) // 2

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def neighbors_of(self, v: int) -> tuple[int, ...]:
        return self.neighbors[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def has_node(self, v: int) -> bool:
        return 0 <= v < len(self.labels)

    def has_edge(self, v: int, u: int) -> bool:
        return u in self._neighbor_sets[v]

    def label(self, v: int) -> str:
        return self.labels[v]

    def index(self, label: str) -> int:
        try:
            return self._index_of[label]
        except KeyError:
            raise UnknownNodeError(f"unknown node label {label!r}") from None

    def has_label(self, label: str) -> bool:
        return label in self._index_of

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as an index pair (v, u) with v < u."""
        for v, ns in enumerate(self.neighbors):
            for u in ns:
                if v < u:
                    yield v, u


def _build(labels: list[str], edge_indices: set[tuple[int, int]]) -> Graph:
    adjacency: list[list[int]] = [[] for _ in labels]
    for v, u in edge_indices:
        adjacency[v].append(u)
        adjacency[u].append(v)
    return Graph(
        labels=tuple(labels),
        neighbors=tuple(tuple(sorted(ns)) for ns in adjacency),
    )


def graph_from_edges(pairs: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from label pairs, dropping self loops and duplicates.

    Node indices follow first appearance of each label in the pair stream.
    """
    labels: list[str] = []
    index_of: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    for a, b in pairs:
        for token in (a, b):
            if token not in index_of:
                index_of[token] = len(labels)
                labels.append(token)
        if a == b:
            continue
        v, u = index_of[a], index_of[b]
        edges.add((min(v, u), max(v, u)))
    return _build(labels, edges)


def load_edge_list(source: IO[bytes] | IO[str]) -> Graph:
    """Parse a whitespace-separated edge-list stream into a Graph.

    One edge per line, exactly two tokens; lines whose first
    non-whitespace character is ``#`` are comments and blank lines are
    skipped. Self loops are dropped and duplicate edges (in either
    orientation) collapse to one. Raises EdgeListParseError with the
    offending line number, or EmptyInputError if no edges survive.
    """
    raw = source.read()
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    pairs: list[tuple[str, str]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two tokens, got {len(tokens)}: {stripped!r}", line_number
            )
        pairs.append((tokens[0], tokens[1]))
    g = graph_from_edges(pairs)
    if g.edge_count == 0:
        raise EmptyInputError("edge list contains no usable edges")
    return g


def load_edge_list_path(path: str | Path) -> Graph:
    with open(path, "rb") as handle:
        return load_edge_list(handle)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: sorted ``u v`` lines with u < v by label."""
    lines = []
    for v, u in g.edges():
        a, b = sorted((g.label(v), g.label(u)))
        lines.append(f"{a} {b}")
    lines.sort()
    return "\n".join(lines) + ("\n" if lines else "")


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop counts from source; unreachable nodes are absent from the map."""
    if not g.has_node(source):
        raise UnknownNodeError(f"no node with index {source}")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors_of(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted index lists, ordered by smallest member."""
    seen: set[int] = set()
    components = []
    for start in range(g.node_count):
        if start in seen:
            continue
        members = sorted(bfs_distances(g, start))
        seen.update(members)
        components.append(members)
    return components


def largest_connected_component(g: Graph) -> Graph:
    """Induced subgraph on the largest component.

    Ties between equal-size components go to the one containing the
    smallest internal index (the first one found scanning indices).
    """
    best: list[int] | None = None
    for component in connected_components(g):
        if best is None or len(component) > len(best):
            best = component
    if best is None:
        return g
    return induced_subgraph(g, best)


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Graph:
    """Subgraph on ``nodes`` with exactly the edges internal to the set.

    Labels are preserved; new indices follow the old index order.
    """
    keep = sorted(set(nodes))
    for v in keep:
        if not g.has_node(v):
            raise UnknownNodeError(f"no node with index {v}")
    remap = {old: new for new, old in enumerate(keep)}
    labels = [g.label(v) for v in keep]
    edges = {
        (remap[v], remap[u])
        for v, u in g.edges()
        if v in remap and u in remap
    }
    return _build(labels, edges)


def _adjacency_csr(g: Graph) -> csr_matrix:
    n = g.node_count
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    indices = np.fromiter(
        (u for v in range(n) for u in g.neighbors_of(v)),
        dtype=np.int64,
        count=int(indptr[-1]),
    )
    data = np.ones(len(indices), dtype=np.int8)
    return csr_matrix((data, indices, indptr), shape=(n, n))


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Dense hop-count matrix with ``inf`` for unreachable pairs."""
    if g.node_count == 0:
        return np.zeros((0, 0))
    if g.edge_count == 0:
        out = np.full((g.node_count, g.node_count), np.inf)
        np.fill_diagonal(out, 0.0)
        return out
    return shortest_path(
        _adjacency_csr(g), method="D", directed=False, unweighted=True
    )


def diameter(g: Graph) -> int:
    """Longest shortest path over connected pairs; 0 for a single node.

    Disconnected inputs take the maximum within components (unreachable
    pairs are excluded).
    """
    if g.node_count == 0:
        raise UnknownNodeError("diameter of an empty graph is undefined")
    dm = all_pairs_distances(g)
    return int(dm[np.isfinite(dm)].max())


def average_distance(g: Graph) -> float:
    """Mean shortest-path distance over unordered connected pairs.

    Disconnected pairs are excluded from both numerator and denominator;
    returns 0.0 if no connected pair exists.
    """
    if g.node_count < 2:
        raise UnknownNodeError("average distance needs at least 2 nodes")
    dm = all_pairs_distances(g)
    upper = dm[np.triu_indices(g.node_count, k=1)]
    finite = upper[np.isfinite(upper)]
    if finite.size == 0:
        return 0.0
    return float(finite.mean())


def density(g: Graph) -> float:
    """2m / (n(n-1))."""
    n = g.node_count
    if n < 2:
        raise UnknownNodeError("density needs at least 2 nodes")
    return 2.0 * g.edge_count / (n * (n - 1))


def average_degree(g: Graph) -> float:
    """2m / n."""
    n = g.node_count
    if n == 0:
        raise UnknownNodeError("average degree of an empty graph is undefined")
    return 2.0 * g.edge_count / n


def graph_from_text(text: str) -> Graph:
    """Convenience loader for inline edge-list strings (tests, scripts)."""
    return load_edge_list(io.StringIO(text))
