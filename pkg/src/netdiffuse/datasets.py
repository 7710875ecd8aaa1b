"""Benchmark graph registry and loader.

Four vendored networks with their expected post-preprocessing sizes.
Loading always reduces to the largest connected component; a size
mismatch against the registry is logged, not fatal, because edge-list
provenance varies and the simulation itself only needs a valid graph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import MissingDatasetError
from .graph import Graph, largest_connected_component, load_edge_list_path

__all__ = [
    "DatasetDescriptor",
    "DATASET_NAMES",
    "DEFAULT_DATA_DIR",
    "dataset_registry",
    "load_dataset",
    "require_datasets",
]

logger = logging.getLogger(__name__)

DATASET_NAMES = ("karate", "lesmis", "jazz", "polblogs")

# Expected (nodes, edges) after symmetrization, dedup and LCC reduction.
_EXPECTED = {
    "karate": (34, 78),
    "lesmis": (77, 254),
    "jazz": (198, 2742),
    "polblogs": (1224, 16718),
}

DEFAULT_DATA_DIR = Path(__file__).resolve().parents[2] / "data"


@dataclass(frozen=True)
class DatasetDescriptor:
    name: str
    expected_nodes: int
    expected_edges: int
    source_path: Path

    def __post_init__(self) -> None:
        if self.expected_nodes < 0 or self.expected_edges < 0:
            raise ValueError("expected counts must be nonnegative")


def dataset_registry(data_dir: Path | str | None = None) -> dict[str, DatasetDescriptor]:
    """Descriptors for the four benchmark networks under one directory."""
    base = Path(data_dir) if data_dir is not None else DEFAULT_DATA_DIR
    registry = {}
    for name in DATASET_NAMES:
        nodes, edges = _EXPECTED[name]
        registry[name] = DatasetDescriptor(
            name=name,
            expected_nodes=nodes,
            expected_edges=edges,
            source_path=base / f"{name}.txt",
        )
    return registry


def require_datasets(registry: dict[str, DatasetDescriptor]) -> None:
    """Raise, listing every absent file, before any work starts."""
    missing = [d.name for d in registry.values() if not d.source_path.is_file()]
    if missing:
        raise MissingDatasetError(missing)


def load_dataset(descriptor: DatasetDescriptor) -> Graph:
    """Load one registered network, reduced to its largest component."""
    if not descriptor.source_path.is_file():
        raise MissingDatasetError([descriptor.name])
    g = load_edge_list_path(descriptor.source_path)
    g = largest_connected_component(g)
    if (g.node_count, g.edge_count) != (
        descriptor.expected_nodes,
        descriptor.expected_edges,
    ):
        logger.warning(
            "dataset %s: loaded %d nodes / %d edges, registry expects %d / %d",
            descriptor.name,
            g.node_count,
            g.edge_count,
            descriptor.expected_nodes,
            descriptor.expected_edges,
        )
    return g
