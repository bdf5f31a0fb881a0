"""Shared hypothesis strategies for graph-valued properties."""

from hypothesis import strategies as st

from forestbound import Multigraph


@st.composite
def multigraphs(draw, min_vertices=1, max_vertices=6, max_edges=10, allow_loops=True):
    n = draw(st.integers(min_vertices, max_vertices))
    m = draw(st.integers(0, max_edges))
    edges = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u == v and not allow_loops:
            continue
        edges.append((u, v))
    return Multigraph(n, edges)


@st.composite
def simple_graphs(draw, min_vertices=2, max_vertices=7, max_edges=12):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    subset = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_edges, len(pairs))))
    return Multigraph(n, subset)


@st.composite
def int_polynomials(draw, max_degree=6, coeff_bound=20):
    coeffs = draw(
        st.lists(st.integers(-coeff_bound, coeff_bound), min_size=0, max_size=max_degree + 1)
    )
    from forestbound import IntPolynomial

    return IntPolynomial(coeffs)
