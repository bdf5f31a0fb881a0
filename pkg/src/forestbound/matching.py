"""Matching counts, matching polynomials, path-trees, and tree-like walks.

The matching polynomial mu_G(x) = sum_k (-1)^k m_k x^(n-2k) has only real
roots (all within (-2*sqrt(D-1), 2*sqrt(D-1)) for maximum degree D >= 2),
and the power sums of those roots count closed tree-like walks; both facts
are exercised heavily by the verification suites, so everything here is
exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ResourceLimitError
from .graphs import Multigraph
from .polynomials import IntPolynomial

_MASK_DP_LIMIT = 20  # 2^n table; matching counts stay far below 2^64 here


def _neighbor_multiplicities(g: Multigraph) -> list[list[tuple[int, int]]]:
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        mult[key] = mult.get(key, 0) + 1
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for (u, v), m in mult.items():
        nbrs[u].append((v, m))
        nbrs[v].append((u, m))
    return nbrs


def _require_loop_free(g: Multigraph, what: str) -> None:
    if g.has_loops():
        raise ValueError(f"{what} requires a loop-free graph (a loop is never matchable)")


def matching_counts(g: Multigraph) -> list[int]:
    """[m_0, m_1, ...]: exact number of k-edge matchings, trailing zeros trimmed.

    Parallel edges count as distinct matchable edges.  Computed by a
    subset DP over vertices with the count vector packed into one big
    integer (base 2^64 limbs), which keeps the inner loop to plain int adds.
    """
    _require_loop_free(g, "matching_counts")
    n = g.num_vertices
    if n > _MASK_DP_LIMIT:
        raise ResourceLimitError(f"matching_counts supports up to {_MASK_DP_LIMIT} vertices")
    if n == 0:
        return [1]
    nbrs = _neighbor_multiplicities(g)
    shift = 64
    f = [0] * (1 << n)
    f[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        acc = f[rest]
        for u, m in nbrs[v]:
            ubit = 1 << u
            if rest & ubit:
                acc += m * (f[rest ^ ubit] << shift)
        f[s] = acc
    packed = f[(1 << n) - 1]
    counts = []
    while packed:
        counts.append(packed & ((1 << shift) - 1))
        packed >>= shift
    return counts or [1]


def matching_counts_complete(n: int) -> list[int]:
    """Closed-form matching counts of K_n: m_k = n! / (2^k k! (n-2k)!)."""
    if n < 1:
        raise ValueError("n must be positive")
    return [
        math.factorial(n) // ((1 << k) * math.factorial(k) * math.factorial(n - 2 * k))
        for k in range(n // 2 + 1)
    ]


def matching_polynomial(g: Multigraph) -> IntPolynomial:
    """mu_G(x) = sum_k (-1)^k m_k(G) x^(n-2k), monic of degree n.

    Computed by the vertex-pivot recursion
    mu_G = x * mu_{G-u} - sum over edges uv of mu_{G-u-v}
    (each parallel edge contributes its own term).  Plain recursion, no
    memoization: the catalog sizes finish instantly and the transparent
    recursion is cross-checked against matching_counts.
    """
    _require_loop_free(g, "matching_polynomial")
    n = g.num_vertices
    nbrs = _neighbor_multiplicities(g)

    def rec(mask: int) -> list[int]:
        if mask == 0:
            return [1]
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        sub = rec(rest)
        out = [0] + sub  # multiply by x
        for u, m in nbrs[v]:
            ubit = 1 << u
            if rest & ubit:
                term = rec(rest ^ ubit)
                for i, c in enumerate(term):
                    out[i] -= m * c
        return out

    return IntPolynomial(rec((1 << n) - 1))


def matching_generating_value(g: Multigraph, vertex_weight: int, edge_weight: int) -> int:
    """sum over matchings M of edge_weight^|M| * vertex_weight^(#uncovered vertices).

    Exact; a subset DP with one integer per vertex mask.  This is the
    workhorse behind evaluating the matching-indexed polynomial of a regular
    graph at an integer point without materializing the m_k list.
    """
    _require_loop_free(g, "matching_generating_value")
    n = g.num_vertices
    if n > _MASK_DP_LIMIT:
        raise ResourceLimitError(f"matching_generating_value supports up to {_MASK_DP_LIMIT} vertices")
    if n == 0:
        return 1
    nbrs = _neighbor_multiplicities(g)
    f = [0] * (1 << n)
    f[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        acc = vertex_weight * f[rest]
        for u, m in nbrs[v]:
            ubit = 1 << u
            if rest & ubit:
                acc += edge_weight * m * f[rest ^ ubit]
        f[s] = acc
    return f[(1 << n) - 1]


# -- path-trees and tree-like walks --------------------------------------

PATH_TREE_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class PathTree:
    """The tree of simple paths of g starting at a root vertex.

    Node i is the path ``paths[i]``; node 0 is the trivial path (root,).
    Two nodes are adjacent iff one path extends the other by one vertex,
    which is exactly the parent relation stored here.
    """

    paths: tuple[tuple[int, ...], ...]
    parent: tuple[int | None, ...]

    @property
    def num_nodes(self) -> int:
        return len(self.paths)


def path_tree(g: Multigraph, u: int, node_budget: int = PATH_TREE_NODE_BUDGET) -> PathTree:
    if not g.is_simple():
        raise ValueError("path_tree requires a simple graph")
    if not 0 <= u < g.num_vertices:
        raise ValueError(f"vertex {u} out of range")
    adj = g.adjacency()
    paths: list[tuple[int, ...]] = [(u,)]
    parent: list[int | None] = [None]
    i = 0
    while i < len(paths):
        p = paths[i]
        tail = p[-1]
        on_path = set(p)
        for w in adj[tail]:
            if w not in on_path:
                paths.append(p + (w,))
                parent.append(i)
                if len(paths) > node_budget:
                    raise ResourceLimitError(
                        f"path tree from vertex {u} exceeds {node_budget} nodes"
                    )
        i += 1
    return PathTree(tuple(paths), tuple(parent))


def _closed_walks_at_root(tree: PathTree, length: int) -> int:
    if length == 0:
        return 1
    size = tree.num_nodes
    w = [0] * size
    w[0] = 1
    parent = tree.parent
    for _ in range(length):
        nxt = [0] * size
        for i in range(1, size):
            p = parent[i]
            nxt[i] += w[p]
            nxt[p] += w[i]
        w = nxt
    return w[0]


def tree_like_closed_walks(g: Multigraph, u: int, length: int) -> int:
    """Closed walks of the given length at the root of the path-tree T(g, u).

    Odd lengths give 0 (trees are bipartite); length 0 counts the empty walk.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    return _closed_walks_at_root(path_tree(g, u), length)


def total_tree_like_walks(g: Multigraph, length: int) -> int:
    """Tree-like closed walks summed over all starting vertices.

    Equals the unnormalized power sum of the matching polynomial's roots;
    the verification suites check that identity rather than assume it.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    return sum(_closed_walks_at_root(path_tree(g, u), length) for u in range(g.num_vertices))
