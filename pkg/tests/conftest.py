from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import settings, strategies as st

from trivalent.graph import Graph
from trivalent.valuation import format_valuation

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def laplacian_oracle(g: Graph) -> set[tuple[int, str]]:
    """Canonical ternary eigenvectors by dense matrix products.

    Independent of the package kernels: the Laplacian comes from networkx and
    every vector in {-1,0,1}^n is multiplied out.
    """
    if g.n == 0:
        return set()
    L = nx.laplacian_matrix(to_nx(g), nodelist=range(g.n)).toarray()
    V = np.array(list(itertools.product((-1, 0, 1), repeat=g.n)))
    LV = V @ L.T
    out = set()
    for v, lv in zip(V, LV):
        nz = np.flatnonzero(v)
        if len(nz) == 0 or v[nz[0]] != 1:
            continue
        lam = int(lv[nz[0]])
        if lam >= 1 and np.array_equal(lv, lam * v):
            out.add((lam, format_valuation(v)))
    return out


def keyset(pairs) -> set[tuple[int, str]]:
    """(lam, tuple) keys as (lam, '+0-') strings."""
    return {(lam, format_valuation(v)) for lam, v in pairs}


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if connected and n > 1:
        # a random spanning tree keeps the graph connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            e = tuple(sorted((order[i], order[j])))
            if e not in chosen:
                chosen.append(e)
    return Graph.from_edges(n, chosen)


def ternary(n: int):
    return st.lists(st.sampled_from((-1, 0, 1)), min_size=n, max_size=n).map(tuple)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_cactus(rnd, max_n: int = 10) -> Graph:
    """Random connected cactus: blocks (edges or cycles) hung one at a time
    on a random existing vertex."""
    n = 1
    edges: list[tuple[int, int]] = []
    while True:
        size = rnd.choice((2, 2, 3, 4, 5, 6))
        if n + size - 1 > max_n:
            break
        at = rnd.randrange(n)
        ring = [at] + list(range(n, n + size - 1))
        n += size - 1
        edges += list(zip(ring, ring[1:]))
        if size > 2:
            edges.append((ring[-1], at))
        if rnd.random() < 0.15:
            break
    return Graph.from_edges(n, edges)
