"""Exact forest enumeration and the matching-indexed bound polynomial.

Everything here returns exact integers or integer polynomials.  The same
quantity is deliberately computable along independent routes (recursive
deletion-contraction, subset enumeration, a component-partition DP, a
weighted reduction engine, and a Laplacian determinant), and the test and
verification suites insist the routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .graphs import Multigraph, contract_edge, delete_edge
from .matching import matching_counts, matching_generating_value
from .polynomials import IntPolynomial

SUBSET_ORACLE_EDGE_LIMIT = 30
DELETION_CONTRACTION_BUDGET = 10**8
_PARTITION_DP_LIMIT = 13
_REDUCTION_BUDGET = 10**7


@dataclass(frozen=True)
class ForestPolynomial:
    """F_G(z) = sum_k f_k z^(n-k), where f_k counts forests with k edges."""

    poly: IntPolynomial
    num_vertices: int

    def forest_numbers(self) -> list[int]:
        """[f_0, f_1, ...] up to the largest k with f_k > 0."""
        n = self.num_vertices
        out = [self.poly.coefficient(n - k) for k in range(n + 1)]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def eval_at(self, x):
        return self.poly.eval_at(x)

    def total(self) -> int:
        return self.poly.eval_at(1)


def _loop_free(g: Multigraph) -> Multigraph:
    if not g.has_loops():
        return g
    return Multigraph(g.num_vertices, [e for e in g.edges if e[0] != e[1]])


def _incidence(g: Multigraph) -> list[list[tuple[int, int]]]:
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for i, (u, v) in enumerate(g.edges):
        inc[u].append((v, i))
        if u != v:
            inc[v].append((u, i))
    return inc


def _bridges(g: Multigraph) -> set[int]:
    """Edge indices whose removal disconnects their component.

    Edge-id-aware DFS lowlink, so one member of a parallel pair is never a
    bridge and loops are never bridges.
    """
    inc = _incidence(g)
    n = g.num_vertices
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]  # vertex, entry edge id, child idx
        while stack:
            v, entry, ptr = stack[-1]
            if ptr == 0:
                disc[v] = low[v] = timer
                timer += 1
            if ptr < len(inc[v]):
                stack[-1] = (v, entry, ptr + 1)
                w, eid = inc[v][ptr]
                if eid == entry or w == v:
                    continue
                if disc[w] == -1:
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add(entry)
    return bridges


def forest_polynomial(g: Multigraph, node_budget: int = DELETION_CONTRACTION_BUDGET) -> ForestPolynomial:
    """Exact forest polynomial by deletion-contraction.

    Recursion F_G = F_{G-e} + F_{G/e} on the first non-bridge edge (falling
    back to the first edge of a forest); an edgeless graph on m vertices
    contributes z^m.  Contraction drops loops, so a parallel pair can never
    jointly survive into a forest.  Verified against the subset oracle.
    """
    base = _loop_free(g)
    remaining = [node_budget]

    def rec(h: Multigraph) -> IntPolynomial:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise ResourceLimitError("deletion-contraction budget exceeded")
        if h.num_edges == 0:
            return IntPolynomial.monomial(h.num_vertices)
        bridge_ids = _bridges(h)
        idx = next((i for i in range(h.num_edges) if i not in bridge_ids), 0)
        return rec(delete_edge(h, idx)) + rec(contract_edge(h, idx))

    return ForestPolynomial(rec(base), g.num_vertices)


def forest_polynomial_oracle(g: Multigraph) -> ForestPolynomial:
    """Independent oracle: every edge subset, acyclicity by union-find."""
    m = g.num_edges
    if m > SUBSET_ORACLE_EDGE_LIMIT:
        raise ResourceLimitError(f"subset oracle capped at {SUBSET_ORACLE_EDGE_LIMIT} edges")
    n = g.num_vertices
    edges = g.edges
    coeff = [0] * (n + 1)  # index = number of edges in the forest
    for mask in range(1 << m):
        parent = list(range(n))
        acyclic = True
        count = 0
        mm = mask
        i = 0
        while mm:
            if mm & 1:
                u, v = edges[i]
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u == v:
                    acyclic = False
                    break
                parent[u] = v
                count += 1
            mm >>= 1
            i += 1
        if acyclic:
            coeff[count] += 1
    poly = [0] * (n + 1)
    for k, c in enumerate(coeff):
        if c and n - k >= 0:
            poly[n - k] = c
    return ForestPolynomial(IntPolynomial(poly), n)


# -- fast exact forest counting -------------------------------------------


def _bareiss_determinant(mat: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact integer determinant."""
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        rowk = mat[k]
        for i in range(k + 1, n):
            rowi = mat[i]
            factor = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - factor * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * mat[n - 1][n - 1]


def spanning_tree_count(g: Multigraph) -> int:
    """Spanning trees via a reduced-Laplacian determinant (exact arithmetic).

    Returns 0 for disconnected graphs.  Parallel edges enter the Laplacian
    with multiplicity; loops are ignored.
    """
    n = g.num_vertices
    if n == 0:
        return 1
    if not g.is_connected():
        return 0
    if n == 1:
        return 1
    lap = [[0] * (n - 1) for _ in range(n - 1)]
    for u, v in g.edges:
        if u == v:
            continue
        if u < n - 1:
            lap[u][u] += 1
        if v < n - 1:
            lap[v][v] += 1
        if u < n - 1 and v < n - 1:
            lap[u][v] -= 1
            lap[v][u] -= 1
    return _bareiss_determinant(lap)


def _induced(g: Multigraph, verts: list[int]) -> Multigraph:
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Multigraph(len(verts), edges)


def _forest_count_partition_dp(g: Multigraph) -> int:
    """Forests = sum over partitions into blocks of products of block tree counts.

    t(B) is the spanning-tree count of the induced subgraph on block B
    (0 unless connected); the subset DP then assembles forests componentwise.
    Exponential in vertices (3^n submask pairs), exact, and fast to ~13
    vertices regardless of density.
    """
    n = g.num_vertices
    mult: dict[tuple[int, int], int] = {}
    adj_mask = [0] * n
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        mult[key] = mult.get(key, 0) + 1
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    pairs = list(mult.items())
    full = (1 << n) - 1

    tree_count = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= adj_mask[bit.bit_length() - 1]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        if comp != mask:
            continue
        verts = []
        mm = mask
        while mm:
            bit = mm & -mm
            mm ^= bit
            verts.append(bit.bit_length() - 1)
        k = len(verts)
        if k == 1:
            tree_count[mask] = 1
            continue
        if k == 2:
            tree_count[mask] = mult.get((verts[0], verts[1]), 0)
            continue
        index = {v: i for i, v in enumerate(verts)}
        size = k - 1
        lap = [[0] * size for _ in range(size)]
        for (a, b), m in pairs:
            if (mask >> a) & 1 and (mask >> b) & 1:
                ia, ib = index[a], index[b]
                if ia < size:
                    lap[ia][ia] += m
                if ib < size:
                    lap[ib][ib] += m
                if ia < size and ib < size:
                    lap[ia][ib] -= m
                    lap[ib][ia] -= m
        tree_count[mask] = _bareiss_determinant(lap)

    forests = [0] * (full + 1)
    forests[0] = 1
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        acc = 0
        sub = rest
        while True:
            block = sub | low
            t = tree_count[block]
            if t:
                acc += t * forests[mask ^ block]
            if sub == 0:
                break
            sub = (sub - 1) & rest
        forests[mask] = acc
    return forests[full]


def _forest_count_reduction(g: Multigraph, node_budget: int = _REDUCTION_BUDGET) -> int:
    """Weighted deletion-contraction with series/parallel/pendant collapsing.

    Each remaining edge carries a pair (a, b): the weight of subsets that
    exclude it and the weight of subsets that include it.  Reductions keep
    the graph minimal between branchings, which makes sparse instances
    (cycle rank up to ~20) tractable far beyond the subset oracle.
    """
    remaining = [node_budget]

    def simplify(adj: dict[int, dict[int, tuple[int, int]]]) -> int:
        factor = 1
        changed = True
        while changed:
            changed = False
            for u in list(adj.keys()):
                if u not in adj:
                    continue
                nbr = adj[u]
                if u in nbr:  # loop: only exclusion survives
                    a, _ = nbr.pop(u)
                    factor *= a
                    changed = True
                if not nbr:
                    del adj[u]
                    changed = True
                    continue
                if len(nbr) == 1:  # pendant edge: never on a cycle
                    (v, (a, b)), = nbr.items()
                    factor *= a + b
                    del adj[u]
                    del adj[v][u]
                    if not adj[v]:
                        del adj[v]
                    changed = True
                    continue
                if len(nbr) == 2:  # series vertex: splice the two edges
                    (v1, (a1, b1)), (v2, (a2, b2)) = nbr.items()
                    del adj[u]
                    del adj[v1][u]
                    del adj[v2][u]
                    na = a1 * a2 + b1 * a2 + a1 * b2
                    nb = b1 * b2
                    if v2 in adj[v1]:  # merged edge is parallel to an existing one
                        pa, pb = adj[v1][v2]
                        na, nb = pa * na, pa * nb + pb * na
                    adj[v1][v2] = (na, nb)
                    adj[v2][v1] = (na, nb)
                    changed = True
        return factor

    def solve(adj: dict[int, dict[int, tuple[int, int]]]) -> int:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise ResourceLimitError("forest-count reduction budget exceeded")
        factor = simplify(adj)
        if not adj:
            return factor
        # branch on an edge of a triangle when one exists: its contraction
        # immediately merges parallels and drops the cycle rank
        branch = None
        for u, nbr in adj.items():
            for v in nbr:
                if any(w in adj[v] for w in nbr if w != v):
                    branch = (u, v)
                    break
            if branch:
                break
        if branch is None:
            u = next(iter(adj))
            v = next(iter(adj[u]))
            branch = (u, v)
        u, v = branch
        a, b = adj[u][v]

        deleted = {x: dict(y) for x, y in adj.items()}
        del deleted[u][v]
        del deleted[v][u]
        total = a * solve(deleted)

        contracted = {x: dict(y) for x, y in adj.items()}
        del contracted[u][v]
        del contracted[v][u]
        for w, (aw, bw) in contracted.pop(v).items():
            del contracted[w][v]
            if w in contracted[u]:
                pa, pb = contracted[u][w]
                aw, bw = pa * aw, pa * bw + pb * aw
            contracted[u][w] = (aw, bw)
            contracted[w][u] = (aw, bw)
        if u in contracted and not contracted[u]:
            del contracted[u]
        total += b * solve(contracted)
        return factor * total

    adj: dict[int, dict[int, tuple[int, int]]] = {}
    for u, v in g.edges:
        if u == v:
            continue
        adj.setdefault(u, {})
        adj.setdefault(v, {})
        if v in adj[u]:
            a, b = adj[u][v]  # unit edge parallel to an existing class
            adj[u][v] = (a, a + b)
            adj[v][u] = (a, a + b)
        else:
            adj[u][v] = (1, 1)
            adj[v][u] = (1, 1)
    return solve(adj)


def forest_count(g: Multigraph) -> int:
    """F(G) = F_G(1): the number of acyclic edge subsets, exactly.

    Multiplicative over connected components; each component is routed to
    the partition DP (dense-friendly, up to 13 vertices) or the weighted
    reduction engine (sparse-friendly) as appropriate.
    """
    h = _loop_free(g)
    labels = h.component_labels()
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        groups.setdefault(lab, []).append(v)
    result = 1
    for verts in groups.values():
        sub = _induced(h, verts)
        if sub.num_edges == 0:
            continue
        if sub.num_vertices <= _PARTITION_DP_LIMIT:
            result *= _forest_count_partition_dp(sub)
        else:
            result *= _forest_count_reduction(sub)
    return result


# -- pseudo-forests ---------------------------------------------------------


def pseudo_forest_polynomial(g: Multigraph) -> IntPolynomial:
    """sum over pseudo-forests A of 2^(#cycles) * z^(n - |A|).

    A pseudo-forest is an edge subset whose components are trees or
    unicyclic; its cycle count is |A| - n + #components(A).  Enumerated by
    a depth-first search over the edge list with a rollback union-find,
    pruning any branch that puts two cycles into one component.
    """
    m = g.num_edges
    if m > SUBSET_ORACLE_EDGE_LIMIT:
        raise ResourceLimitError(f"pseudo-forest enumeration capped at {SUBSET_ORACLE_EDGE_LIMIT} edges")
    n = g.num_vertices
    edges = g.edges
    parent = list(range(n))
    size = [1] * n
    cycles = [0] * n  # per component root
    coeff_by_edges = [0] * (max(m, n) + 1)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, chosen: int, total_cycles: int) -> None:
        if i == len(edges):
            coeff_by_edges[chosen] += 1 << total_cycles
            return
        # exclude edge i
        rec(i + 1, chosen, total_cycles)
        # include edge i when it keeps every component at most unicyclic
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            if cycles[ru] == 0:
                cycles[ru] = 1
                rec(i + 1, chosen + 1, total_cycles + 1)
                cycles[ru] = 0
            return
        if cycles[ru] and cycles[rv]:
            return  # union would carry two cycles
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        carried = cycles[rv]
        cycles[ru] += carried
        rec(i + 1, chosen + 1, total_cycles)
        cycles[ru] -= carried
        size[ru] -= size[rv]
        parent[rv] = rv

    rec(0, 0, 0)
    poly = [0] * (n + 1)
    for k in range(min(len(coeff_by_edges) - 1, n) + 1):
        if coeff_by_edges[k]:
            poly[n - k] = coeff_by_edges[k]
    return IntPolynomial(poly)


# -- the matching-indexed bound polynomial ----------------------------------


def r_polynomial(g: Multigraph) -> IntPolynomial:
    """sum over matchings M of (-z)^|M| * prod over uncovered v of (z + d_v - 1).

    Degrees are taken in g itself.  Enumerates matchings directly; exact.
    """
    if g.has_loops():
        raise ValueError("r_polynomial requires a loop-free graph")
    n = g.num_vertices
    degs = g.degrees()
    factors = [IntPolynomial((d - 1, 1)) for d in degs]
    edges = g.edges
    m = len(edges)
    acc = IntPolynomial.zero()

    def leaf(covered: int, msize: int) -> None:
        nonlocal acc
        term = IntPolynomial.one()
        for v in range(n):
            if not (covered >> v) & 1:
                term = term * factors[v]
        sign = -1 if msize % 2 else 1
        acc = acc + IntPolynomial.monomial(msize, sign) * term

    def rec(i: int, covered: int, msize: int) -> None:
        if i == m:
            leaf(covered, msize)
            return
        rec(i + 1, covered, msize)
        u, v = edges[i]
        bits = (1 << u) | (1 << v)
        if not covered & bits:
            rec(i + 1, covered | bits, msize + 1)

    rec(0, 0, 0)
    return acc


def r_polynomial_regular(g: Multigraph, d: int) -> IntPolynomial:
    """Regular-graph form: sum_k (-1)^k m_k z^k (z + d - 1)^(n - 2k)."""
    if g.regular_degree() != d:
        raise ValueError(f"graph is not {d}-regular")
    counts = matching_counts(g)
    n = g.num_vertices
    base = IntPolynomial((d - 1, 1))
    acc = IntPolynomial.zero()
    for k, mk in enumerate(counts):
        sign = -1 if k % 2 else 1
        acc = acc + IntPolynomial.monomial(k, sign * mk) * base ** (n - 2 * k)
    return acc


def r_at_two_exact(g: Multigraph, d: int) -> int:
    """The bound value at z = 2 as one exact integer:
    sum_k (-1)^k m_k 2^k (d+1)^(n-2k).
    """
    if g.regular_degree() != d:
        raise ValueError(f"graph is not {d}-regular")
    return matching_generating_value(g, d + 1, -2)
