"""Union graphs, exact matchings, and the matching-driven packers M1w / Mw.

Vertices are chart ids; an edge carries the best overlap (weight 2 or 1) a
pair admits together with the orientation that realizes it.  Matchings are
computed exactly with the blossom algorithm from networkx; graphs are always
handed over in canonical sorted order so equal-weight ties resolve the same
way on every run.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .model import BarChart, Instance, Placement, assemble_placement
from .unions import merge_union, pair_weight


@dataclass(frozen=True)
class UnionEdge:
    """Edge (u, v) with u < v; ``left``/``right`` orient the stored t-union."""

    u: int
    v: int
    weight: int
    left: int
    right: int
    t: int


@dataclass(frozen=True)
class WeightedGraph:
    vertices: tuple[int, ...]
    edges: tuple[UnionEdge, ...]


@dataclass(frozen=True)
class Matching:
    edges: tuple[UnionEdge, ...]
    total_weight: int


@dataclass(frozen=True)
class UnionRecord:
    round: int
    left: int
    right: int
    t: int


@dataclass(frozen=True)
class MatchResult:
    placement: Placement
    length: int


@dataclass(frozen=True)
class MwResult:
    placement: Placement
    length: int
    rounds: int
    union_trace: tuple[UnionRecord, ...]


def build_union_graph(charts: list[BarChart] | tuple[BarChart, ...]) -> WeightedGraph:
    """Graph over the given charts with one edge per pair that can unite."""
    ordered = sorted(charts, key=lambda c: c.id)
    edges = []
    for a in range(len(ordered)):
        for b in range(a + 1, len(ordered)):
            pw = pair_weight(ordered[a], ordered[b])
            if pw.weight > 0:
                edges.append(UnionEdge(u=ordered[a].id, v=ordered[b].id,
                                       weight=pw.weight, left=pw.left,
                                       right=pw.right, t=pw.t))
    return WeightedGraph(vertices=tuple(c.id for c in ordered), edges=tuple(edges))


def _solve_matching(g: WeightedGraph, cardinality: bool) -> Matching:
    nxg = nx.Graph()
    nxg.add_nodes_from(sorted(g.vertices))
    by_pair = {}
    for e in sorted(g.edges, key=lambda e: (e.u, e.v)):
        nxg.add_edge(e.u, e.v, weight=1 if cardinality else e.weight)
        by_pair[(e.u, e.v)] = e
    mate = nx.max_weight_matching(nxg)
    chosen = sorted((by_pair[(min(a, b), max(a, b))] for a, b in mate),
                    key=lambda e: (e.u, e.v))
    return Matching(edges=tuple(chosen), total_weight=sum(e.weight for e in chosen))


def max_weight_matching(g: WeightedGraph) -> Matching:
    """Exact maximum-weight matching (not merely maximal)."""
    return _solve_matching(g, cardinality=False)


def max_cardinality_matching(g: WeightedGraph) -> Matching:
    """Exact maximum-cardinality matching; total_weight still sums edge weights."""
    matching = _solve_matching(g, cardinality=True)
    return matching


def dump_graph(g: WeightedGraph) -> str:
    """Edge list text, one 'u v weight' line per edge."""
    return "".join(f"{e.u} {e.v} {e.weight}\n"
                   for e in sorted(g.edges, key=lambda e: (e.u, e.v)))


def merge_matched(charts: list[BarChart] | tuple[BarChart, ...],
                  matching: Matching) -> list[BarChart]:
    """Merge every matched pair along its stored orientation and overlap."""
    by_id = {c.id: c for c in charts}
    matched = set()
    merged = []
    for e in matching.edges:
        merged.append(merge_union(by_id[e.left], by_id[e.right], e.t))
        matched.update((e.u, e.v))
    rest = [c for c in charts if c.id not in matched]
    return sorted(merged + rest, key=lambda c: c.id)


def solve_m1w(instance: Instance) -> MatchResult:
    """One maximum-weight matching on the raw charts, then concatenate."""
    graph = build_union_graph(instance.charts)
    matching = max_weight_matching(graph)
    charts = merge_matched(instance.charts, matching)
    placement = assemble_placement(charts)
    return MatchResult(placement=placement,
                       length=sum(c.width for c in charts))


def solve_mw(instance: Instance,
             graph_sink=None) -> MwResult:
    """Iterate maximum-weight matchings, merging pairs, until no pair unites.

    ``rounds`` counts built graphs including the final edgeless one.  When
    ``graph_sink`` is given, each round's graph dump is passed to it as
    ``(round_index, text)``.
    """
    charts: list[BarChart] = list(instance.charts)
    trace: list[UnionRecord] = []
    rounds = 0
    while True:
        graph = build_union_graph(charts)
        rounds += 1
        if graph_sink is not None:
            graph_sink(rounds, dump_graph(graph))
        if not graph.edges:
            break
        matching = max_weight_matching(graph)
        for e in matching.edges:
            if e.t not in (1, 2):
                raise AssertionError(f"union with overlap t={e.t} constructed")
            trace.append(UnionRecord(round=rounds, left=e.left, right=e.right, t=e.t))
        charts = merge_matched(charts, matching)
    placement = assemble_placement(charts)
    return MwResult(placement=placement, length=sum(c.width for c in charts),
                    rounds=rounds, union_trace=tuple(trace))
