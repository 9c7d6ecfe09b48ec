"""Shared strategies and independent oracles for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
from hypothesis import strategies as st

from sspgraph.graph import Graph
from sspgraph.linalg import RatMatrix


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    order = {v: k for k, v in enumerate(sorted(h.nodes()))}
    return Graph(len(order), [(order[u], order[v]) for u, v in h.edges()])


def atlas(max_n: int) -> list[Graph]:
    """All graphs up to isomorphism on 1..max_n vertices (max_n <= 7)."""
    return [from_nx(h) for h in nx.graph_atlas_g()[1:] if h.number_of_nodes() <= max_n]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices(draw, min_n: int = 1, max_n: int = 5, cols: int | None = None, elems=small_fracs) -> RatMatrix:
    r = draw(st.integers(min_n, max_n))
    c = cols if cols is not None else draw(st.integers(min_n, max_n))
    return RatMatrix([[draw(elems) for _ in range(c)] for _ in range(r)])


@st.composite
def symmetric_matrices(draw, min_n: int = 1, max_n: int = 5, elems=small_fracs) -> RatMatrix:
    n = draw(st.integers(min_n, max_n))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(elems)
    return RatMatrix(rows)


def column_pivot_rank(m: RatMatrix) -> int:
    """Rank by Gaussian elimination that scans columns right to left."""
    a = [list(r) for r in m.tolist()]
    rank = 0
    for c in reversed(range(m.cols)):
        piv = next((r for r in range(rank, m.rows) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(m.rows):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def prufer_trees(n: int):
    """Every labeled tree on n >= 2 vertices, via Prufer sequences."""
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield from_nx(nx.from_prufer_sequence(list(seq)))
