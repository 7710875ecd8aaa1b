"""Common-neighborhood scoring and tie strength.

For a connected pair (v, u) the neighborhood score ``rho`` is an integer
built from five counts: the common neighbors themselves, each endpoint's
overlap with every common neighbor, the number of edges among common
neighbors, and the overlap of every connected common-neighbor pair. A
pair without common neighbors degenerates to 1 when either endpoint has
degree one (the edge is then the only interaction path) and 0 otherwise.

Tie strength ``phi`` normalizes ``rho`` by the maximum score on the
source node's row, making it asymmetric; the ordered pairs that reach
1.0 form the strong-tie set consumed by the diffusion models.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import IO

from .errors import NotAnEdgeError
from .graph import Graph

__all__ = [
    "CommonNeighborhoodBreakdown",
    "ContributorSet",
    "TieStrengthTable",
    "common_neighborhood",
    "contributors",
    "build_tie_strength_table",
    "tie_strength",
    "dump_tie_table",
]

TIE_TABLE_COLUMNS = (
    "v",
    "u",
    "term_cn",
    "term_v_side",
    "term_u_side",
    "term_sigma",
    "term_ww",
    "rho",
    "phi",
)


@dataclass(frozen=True)
class CommonNeighborhoodBreakdown:
    """Per-term decomposition of the neighborhood score for one ordered pair.

    When ``term_cn`` is zero the pair is degenerate: all term fields are
    zero and ``rho`` alone holds the 0-or-1 value.
    """

    v: int
    u: int
    term_cn: int
    term_v_side: int
    term_u_side: int
    term_sigma: int
    term_ww: int
    rho: int

    def swapped(self) -> "CommonNeighborhoodBreakdown":
        """The same pair seen from the other endpoint (rho is symmetric)."""
        return CommonNeighborhoodBreakdown(
            v=self.u,
            u=self.v,
            term_cn=self.term_cn,
            term_v_side=self.term_u_side,
            term_u_side=self.term_v_side,
            term_sigma=self.term_sigma,
            term_ww=self.term_ww,
            rho=self.rho,
        )


@dataclass(frozen=True)
class ContributorSet:
    """Nodes whose membership in any score term counted for a pair."""

    v: int
    u: int
    members: frozenset[int]


def _require_edge(g: Graph, v: int, u: int) -> None:
    if not (g.has_node(v) and g.has_node(u) and g.has_edge(v, u)):
        raise NotAnEdgeError(f"({v}, {u}) is not an edge of the graph")


def _connected_common_pairs(g: Graph, common: list[int]):
    for i, w in enumerate(common):
        nw = g.neighbor_set(w)
        for z in common[i + 1 :]:
            if z in nw:
                yield w, z


def common_neighborhood(g: Graph, v: int, u: int) -> CommonNeighborhoodBreakdown:
    """Score one ordered edge (v, u).

    The second and third terms sum the endpoint overlap over every common
    neighbor; the fourth counts unordered connected common-neighbor pairs
    and the fifth sums the overlap of exactly those pairs.
    """
    _require_edge(g, v, u)
    nv = g.neighbor_set(v)
    nu = g.neighbor_set(u)
    common = sorted(nv & nu)
    if not common:
        rho = 1 if g.degree(v) == 1 or g.degree(u) == 1 else 0
        return CommonNeighborhoodBreakdown(v, u, 0, 0, 0, 0, 0, rho)
    term_cn = len(common)
    term_v_side = 0
    term_u_side = 0
    for z in common:
        nz = g.neighbor_set(z)
        term_v_side += len(nv & nz)
        term_u_side += len(nu & nz)
    term_sigma = 0
    term_ww = 0
    for w, z in _connected_common_pairs(g, common):
        term_sigma += 1
        term_ww += len(g.neighbor_set(w) & g.neighbor_set(z))
    rho = term_cn + term_v_side + term_u_side + term_sigma + term_ww
    return CommonNeighborhoodBreakdown(
        v, u, term_cn, term_v_side, term_u_side, term_sigma, term_ww, rho
    )


def contributors(g: Graph, v: int, u: int) -> ContributorSet:
    """Every node that appears in some score term of (v, u), minus v and u.

    Empty for degenerate pairs: those score without any third party.
    """
    _require_edge(g, v, u)
    nv = g.neighbor_set(v)
    nu = g.neighbor_set(u)
    common = sorted(nv & nu)
    members: set[int] = set()
    if common:
        members.update(common)
        for z in common:
            nz = g.neighbor_set(z)
            members.update(nv & nz)
            members.update(nu & nz)
        for w, z in _connected_common_pairs(g, common):
            members.update(g.neighbor_set(w) & g.neighbor_set(z))
        members.discard(v)
        members.discard(u)
    return ContributorSet(v, u, frozenset(members))


@dataclass
class TieStrengthTable:
    """All per-edge breakdowns, tie strengths and the strong-tie set.

    Built once per graph and then treated as immutable; the contributor
    cache only ever grows and is safe to share across readers.
    """

    graph: Graph
    breakdowns: dict[tuple[int, int], CommonNeighborhoodBreakdown]
    phi: dict[tuple[int, int], float]
    row_max: dict[int, int]
    strong_ties: frozenset[tuple[int, int]]
    _contributor_cache: dict[tuple[int, int], frozenset[int]] = field(
        default_factory=dict, repr=False
    )

    def rho(self, v: int, u: int) -> int:
        return self.breakdowns[(v, u)].rho

    def contributor_members(self, v: int, u: int) -> frozenset[int]:
        key = (v, u)
        if key not in self._contributor_cache:
            self._contributor_cache[key] = contributors(self.graph, v, u).members
        return self._contributor_cache[key]


def build_tie_strength_table(g: Graph) -> TieStrengthTable:
    """Compute breakdowns and tie strengths for both orientations of every edge.

    Row maxima are not tie-broken: every co-maximal neighbor of a node
    enters the strong-tie set.
    """
    breakdowns: dict[tuple[int, int], CommonNeighborhoodBreakdown] = {}
    for v, u in g.edges():
        b = common_neighborhood(g, v, u)
        breakdowns[(v, u)] = b
        breakdowns[(u, v)] = b.swapped()

    row_max: dict[int, int] = {}
    for v in range(g.node_count):
        row_max[v] = max(
            (breakdowns[(v, u)].rho for u in g.neighbors_of(v)), default=0
        )

    phi: dict[tuple[int, int], float] = {}
    strong: set[tuple[int, int]] = set()
    for (v, u), b in breakdowns.items():
        if b.rho == 0 or row_max[v] == 0:
            phi[(v, u)] = 0.0
        else:
            phi[(v, u)] = b.rho / row_max[v]
            if b.rho == row_max[v]:
                strong.add((v, u))
    return TieStrengthTable(
        graph=g,
        breakdowns=breakdowns,
        phi=phi,
        row_max=row_max,
        strong_ties=frozenset(strong),
    )


def tie_strength(g: Graph, table: TieStrengthTable, v: int, u: int) -> float:
    """Normalized score of the ordered edge (v, u); 0.0 when its score is 0."""
    _require_edge(g, v, u)
    return table.phi[(v, u)]


def dump_tie_table(table: TieStrengthTable, stream: IO[str]) -> None:
    """Write the debug CSV, one row per ordered edge, sorted by labels."""
    g = table.graph
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TIE_TABLE_COLUMNS)
    rows = sorted(
        table.breakdowns.items(), key=lambda kv: (g.label(kv[0][0]), g.label(kv[0][1]))
    )
    for (v, u), b in rows:
        writer.writerow(
            [
                g.label(v),
                g.label(u),
                b.term_cn,
                b.term_v_side,
                b.term_u_side,
                b.term_sigma,
                b.term_ww,
                b.rho,
                f"{table.phi[(v, u)]:.6f}",
            ]
        )
