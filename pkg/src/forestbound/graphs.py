"""Multigraph representation, canonical generators, and 2-lifts.

Edges are an ordered list of endpoint pairs: parallel edges are distinct
(identity = position in the list) and loops are permitted, although loops
only ever arise here through contraction and are removed there.  A loop
contributes 2 to its vertex's degree, the standard multigraph convention.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GenerationError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    num_vertices: int
    edges: tuple[Edge, ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        es = []
        for e in edges:
            u, v = e
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge {(u, v)} out of range for {num_vertices} vertices")
            es.append((int(u), int(v)))
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(self, "edges", tuple(es))

    # -- basic queries --------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of edge-endpoint incidences at v; a loop counts twice."""
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"vertex {v} out of range")
        d = 0
        for u, w in self.edges:
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def degrees(self) -> list[int]:
        ds = [0] * self.num_vertices
        for u, w in self.edges:
            ds[u] += 1
            ds[w] += 1
        return ds

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def has_parallel_edges(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                return True
            seen.add(key)
        return False

    def is_simple(self) -> bool:
        return not self.has_loops() and not self.has_parallel_edges()

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        ds = self.degrees()
        if not ds:
            return None
        return ds[0] if all(d == ds[0] for d in ds) else None

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists of the underlying simple graph (no loops, deduplicated)."""
        nbr = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            if u != v:
                nbr[u].add(v)
                nbr[v].add(u)
        return [sorted(s) for s in nbr]

    def component_labels(self) -> list[int]:
        parent = list(range(self.num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return [find(v) for v in range(self.num_vertices)]

    def num_components(self) -> int:
        labels = self.component_labels()
        return len(set(labels))

    def is_connected(self) -> bool:
        return self.num_vertices <= 1 or self.num_components() == 1


@dataclass(frozen=True)
class SignAssignment:
    """A ±1 label per edge of a base graph, encoding a 2-lift."""

    signs: tuple[int, ...]

    def __init__(self, signs: Iterable[int]):
        ss = tuple(int(s) for s in signs)
        if any(s not in (1, -1) for s in ss):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "signs", ss)

    def __len__(self) -> int:
        return len(self.signs)

    @classmethod
    def all_plus(cls, m: int) -> "SignAssignment":
        return cls((1,) * m)

    @classmethod
    def all_minus(cls, m: int) -> "SignAssignment":
        return cls((-1,) * m)

    @classmethod
    def random(cls, m: int, rng: random.Random) -> "SignAssignment":
        return cls(tuple(rng.choice((1, -1)) for _ in range(m)))


# -- generators ---------------------------------------------------------


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(k: int) -> Multigraph:
    if k < 3:
        raise ValueError("cycle graph needs k >= 3")
    return Multigraph(k, [(i, (i + 1) % k) for i in range(k)])


def glued_cycles(k: int, r: int) -> Multigraph:
    """r cycles of length k sharing a single center vertex (vertex 0)."""
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    if r < 1:
        raise ValueError("need at least one cycle")
    n = 1 + r * (k - 1)
    edges: list[Edge] = []
    for i in range(r):
        first = 1 + i * (k - 1)
        path = [0] + list(range(first, first + k - 1)) + [0]
        edges.extend((path[j], path[j + 1]) for j in range(k))
    return Multigraph(n, edges)


def petersen() -> Multigraph:
    """The Petersen graph: 3-regular, girth 5, 10 vertices."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def random_regular(d: int, n: int, seed: int, max_attempts: int = 10_000) -> Multigraph:
    """Uniform random simple d-regular graph on n vertices (pairing model).

    Draws a uniform perfect matching on the d*n vertex stubs and rejects the
    whole pairing as soon as it produces a loop or a parallel edge, so the
    accepted graph is uniform over simple realizations.  Deterministic in
    (d, n, seed).  Raises GenerationError after max_attempts rejections;
    dense corners (e.g. d = 6, n <= 12) can need far more than the default.
    """
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    if (d * n) % 2 != 0:
        raise ValueError("d*n must be even")
    if d >= n:
        raise ValueError("need d < n for a simple graph")
    rng = random.Random(seed)
    length = d * n
    base = [v for v in range(n) for _ in range(d)]
    for _ in range(max_attempts):
        stubs = base.copy()
        seen: set[int] = set()
        edges: list[Edge] = []
        ok = True
        # lazy Fisher-Yates: shuffle only as far as needed, abort on collision
        for i in range(0, length, 2):
            j = rng.randrange(i, length)
            stubs[i], stubs[j] = stubs[j], stubs[i]
            j = rng.randrange(i + 1, length)
            stubs[i + 1], stubs[j] = stubs[j], stubs[i + 1]
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u * n + v) if u < v else (v * n + u)
            if key in seen:
                ok = False
                break
            seen.add(key)
            edges.append((u, v) if u < v else (v, u))
        if ok:
            return Multigraph(n, edges)
    raise GenerationError(
        f"no simple {d}-regular graph on {n} vertices within {max_attempts} pairing attempts"
    )


# -- lifts ---------------------------------------------------------------


def two_lift(g: Multigraph, signs: SignAssignment) -> Multigraph:
    """Double cover of g encoded by edge signs.

    Vertex (v, layer) maps to index v + layer * n.  A + edge (u, v) lifts to
    the parallel matching {(u,0)-(v,0), (u,1)-(v,1)}, a - edge to the crossed
    matching {(u,0)-(v,1), (u,1)-(v,0)}.  All-plus therefore yields two
    disjoint copies of g.
    """
    if g.has_loops():
        raise ValueError("two_lift requires a loop-free base graph")
    if len(signs) != g.num_edges:
        raise ValueError(f"{g.num_edges} edges but {len(signs)} signs")
    n = g.num_vertices
    lifted: list[Edge] = []
    for (u, v), s in zip(g.edges, signs.signs):
        if s == 1:
            lifted.append((u, v))
            lifted.append((u + n, v + n))
        else:
            lifted.append((u, v + n))
            lifted.append((u + n, v))
    return Multigraph(2 * n, lifted)


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    """g and h side by side; h's vertices are shifted by g.num_vertices."""
    n = g.num_vertices
    edges = list(g.edges) + [(u + n, v + n) for u, v in h.edges]
    return Multigraph(n + h.num_vertices, edges)


# -- girth ----------------------------------------------------------------


def girth(g: Multigraph):
    """Length of the shortest cycle; math.inf for forests.

    Conventions: a loop is a 1-cycle, a parallel pair a 2-cycle.
    """
    if any(u == v for u, v in g.edges):
        return 1
    if g.has_parallel_edges():
        return 2
    # simple graph: min over edges (s,t) of 1 + dist(s, t) in G minus that edge
    adj = g.adjacency()
    best = math.inf
    for s, t in g.edges:
        dist = [-1] * g.num_vertices
        dist[s] = 0
        queue = [s]
        qi = 0
        found = None
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if dist[x] + 1 >= best:
                break  # cannot beat the best cycle already known
            for y in adj[x]:
                if x == s and y == t:
                    continue  # the excluded edge itself
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    if y == t:
                        found = dist[y]
                        break
                    queue.append(y)
            if found is not None:
                break
        if found is not None and found + 1 < best:
            best = found + 1
    return best


# -- deletion and contraction ---------------------------------------------


def delete_edge(g: Multigraph, index: int) -> Multigraph:
    if not 0 <= index < g.num_edges:
        raise ValueError("edge index out of range")
    return Multigraph(g.num_vertices, g.edges[:index] + g.edges[index + 1 :])


def contract_edge(g: Multigraph, index: int) -> Multigraph:
    """Merge the endpoints of a non-loop edge.

    Edges parallel to the contracted edge become loops and are removed
    (nothing acyclic ever uses them); other parallels survive as parallels.
    Surviving edges keep their relative order.
    """
    if not 0 <= index < g.num_edges:
        raise ValueError("edge index out of range")
    u, v = g.edges[index]
    if u == v:
        raise ValueError("cannot contract a loop")
    keep, gone = (u, v) if u < v else (v, u)

    def remap(w: int) -> int:
        if w == gone:
            return keep
        return w if w < gone else w - 1

    edges = []
    for i, (a, b) in enumerate(g.edges):
        if i == index:
            continue
        ra, rb = remap(a), remap(b)
        if ra == rb:
            continue  # became a loop
        edges.append((ra, rb))
    return Multigraph(g.num_vertices - 1, edges)
