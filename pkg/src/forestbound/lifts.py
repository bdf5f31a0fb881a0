"""Edge-pair correlation scans, 2-cover forest inequalities, and lift search.

The negative-correlation statement for uniform random forests is open; the
scan here never touches probabilities as floats.  With N = #forests,
N_e = #forests through e, the tested inequality is the integer comparison
N_ef * N <= N_e * N_f.  A violation would be a discovery, not a bug, and is
reported as such by the verification layer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .forests import forest_count
from .graphs import Multigraph, SignAssignment, girth, two_lift


def forest_counts_with_edges(g: Multigraph, required: Iterable[int]) -> int:
    """Number of forests of g containing all of the required edges.

    Contracts the required edges (0 when they already close a cycle) and
    counts forests of the resulting minor.
    """
    req = list(required)
    if len(set(req)) != len(req):
        raise ValueError("required edge indices must be distinct")
    for i in req:
        if not 0 <= i < g.num_edges:
            raise ValueError(f"edge index {i} out of range")
        u, v = g.edges[i]
        if u == v:
            raise ValueError("a loop can never lie in a forest")
    # union-find over required edges: a repeat join means a cycle
    parent = list(range(g.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in req:
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            return 0
        parent[ru] = rv
    labels = [find(v) for v in range(g.num_vertices)]
    relabel = {lab: i for i, lab in enumerate(sorted(set(labels)))}
    required_set = set(req)
    minor_edges = []
    for i, (u, v) in enumerate(g.edges):
        if i in required_set:
            continue
        a, b = relabel[labels[u]], relabel[labels[v]]
        if a != b:  # an edge inside a merged block would close a cycle
            minor_edges.append((a, b))
    minor = Multigraph(len(relabel), minor_edges)
    return forest_count(minor)


@dataclass(frozen=True)
class CorrelationRecord:
    edge_pair: tuple[int, int]
    total: int          # N
    with_first: int     # N_e
    with_second: int    # N_f
    with_both: int      # N_ef
    satisfied: bool     # N_ef * N <= N_e * N_f, decided on integers

    def is_tight(self) -> bool:
        return self.with_both * self.total == self.with_first * self.with_second


def correlation_scan(g: Multigraph) -> list[CorrelationRecord]:
    """One record per unordered edge pair of a simple graph."""
    if not g.is_simple():
        raise ValueError("correlation_scan requires a simple graph")
    total = forest_count(g)
    singles = [forest_counts_with_edges(g, [i]) for i in range(g.num_edges)]
    records = []
    for i in range(g.num_edges):
        for j in range(i + 1, g.num_edges):
            both = forest_counts_with_edges(g, [i, j])
            records.append(
                CorrelationRecord(
                    edge_pair=(i, j),
                    total=total,
                    with_first=singles[i],
                    with_second=singles[j],
                    with_both=both,
                    satisfied=both * total <= singles[i] * singles[j],
                )
            )
    return records


class LiftForestComparison(NamedTuple):
    base_squared: int   # F(G)^2 = F(G union G)
    lifted: int         # F(H) for the 2-cover H
    satisfied: bool     # F(G)^2 <= F(H)


def lift_forest_comparison(g: Multigraph, signs: SignAssignment) -> LiftForestComparison:
    base = forest_count(g)
    lifted = forest_count(two_lift(g, signs))
    return LiftForestComparison(base * base, lifted, base * base <= lifted)


@dataclass(frozen=True)
class LiftSearchResult:
    graphs: list[Multigraph]
    reached_target: bool


def _short_cycle_profile(g: Multigraph) -> tuple[float, int]:
    """(girth, number of edges lying on some shortest cycle) for tie-breaks."""
    girth_len = girth(g)
    if girth_len == math.inf:
        return girth_len, 0
    adj = g.adjacency()
    on_short = 0
    for s, t in g.edges:
        if s == t:
            on_short += 1
            continue
        dist = [-1] * g.num_vertices
        dist[s] = 0
        queue = [s]
        qi = 0
        reached = None
        while qi < len(queue) and reached is None:
            x = queue[qi]
            qi += 1
            for y in adj[x]:
                if x == s and y == t:
                    continue
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    if y == t:
                        reached = dist[y]
                        break
                    queue.append(y)
        if reached is not None and reached + 1 == girth_len:
            on_short += 1
    return girth_len, on_short


def girth_climbing_lift(
    g: Multigraph,
    target_girth: int,
    seed: int,
    max_rounds: int = 12,
    draws_per_round: int = 64,
) -> LiftSearchResult:
    """Greedy randomized search for a girth-increasing tower of 2-lifts.

    Each round draws sign assignments for the current graph, keeps the lift
    with the largest girth (ties broken by fewer shortest cycles), and
    stops at the target girth or after max_rounds.  The returned sequence
    always has nondecreasing girth; reaching the target is not guaranteed,
    and a partial tower is flagged rather than raised.
    """
    if not g.is_simple() or not g.is_connected():
        raise ValueError("lift search expects a simple connected base graph")
    if target_girth < 3:
        raise ValueError("target girth must be at least 3")
    rng = random.Random(seed)
    sequence = [g]
    current = g
    current_girth = girth(current)
    for _ in range(max_rounds):
        if current_girth >= target_girth:
            return LiftSearchResult(sequence, True)
        best = None
        best_key = None
        for _ in range(draws_per_round):
            signs = SignAssignment.random(current.num_edges, rng)
            lifted = two_lift(current, signs)
            lift_girth, short_edges = _short_cycle_profile(lifted)
            key = (-lift_girth, short_edges)
            if best_key is None or key < best_key:
                best, best_key = lifted, key
        assert best is not None
        sequence.append(best)
        current = best
        current_girth = girth(current)
    return LiftSearchResult(sequence, current_girth >= target_girth)


class DegreeProductBounds(NamedTuple):
    forest_total: int
    degree_product: int
    degree_plus_one_product: int


def degree_product_bounds(g: Multigraph) -> DegreeProductBounds:
    """F(G) next to prod(d_v) and prod(d_v + 1), all exact."""
    forest_total = forest_count(g)
    prod_d = 1
    prod_d1 = 1
    for d in g.degrees():
        prod_d *= d
        prod_d1 *= d + 1
    return DegreeProductBounds(forest_total, prod_d, prod_d1)
