from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from trivalent.generate import gen_B1, gen_diamond
from trivalent.graph import (
    ContractViolation,
    Family,
    Graph,
    complete_graph,
    cycle_graph,
    is_cactus,
    is_connected,
    path_graph,
    star_graph,
)
from trivalent.recognize import (
    CATALOG,
    bicyclic_prediction,
    bicyclic_shape,
    classify,
    recognize,
    recognize_bicyclic,
    recognize_cactus,
    recognize_tree,
    recognize_unicyclic,
)
from trivalent.search import brute_force
from trivalent.solver import StructuralSolver
from trivalent.valuation import Certificate, equal_links, verify

from conftest import keyset, random_cactus


def lambdas(report) -> set[int]:
    return set(report.lambdas())


def glue(a: Graph, b: Graph, x: int = 0, y: int = 0) -> Graph:
    """Identify vertex x of a with vertex y of b."""
    ids = [v for v in range(b.n) if v != y]
    pos = {v: a.n + i for i, v in enumerate(ids)}
    pos[y] = x
    return Graph.from_edges(a.n + b.n - 1, list(a.edges) + [(pos[u], pos[v]) for u, v in b.edges])


# examples ---------------------------------------------------------------------

def test_tree_examples():
    rep = recognize_tree(path_graph(2), enumerate_all=True)
    assert keyset(rep.keys()) == {(2, "+-")} and rep.valences() == {2: {"bivalent"}}
    s7 = recognize_tree(star_graph(7), enumerate_all=True)
    assert lambdas(s7) == {1}
    assert all(f.certificate.valuation[0] == 0 for f in s7.found)
    assert keyset(recognize_tree(path_graph(3), True).keys()) == {(1, "+0-")}


def test_unicyclic_examples():
    assert lambdas(recognize_unicyclic(cycle_graph(12))) == {1, 2, 3, 4}
    assert not recognize_unicyclic(cycle_graph(5))
    tri_tail = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
    assert keyset(recognize_unicyclic(tri_tail, True).keys()) == {(3, "0+-00")}


def test_bicyclic_examples():
    assert 2 in lambdas(recognize_bicyclic(gen_B1(4, 8).graph))
    assert {2, 3} <= lambdas(recognize_bicyclic(gen_B1(6, 6).graph))
    d = recognize_bicyclic(complete_graph(4).without_edge(0, 1), True)
    assert (4, "00+-") in keyset(d.keys())  # +1/-1 on the two degree-3 vertices


def test_b1_3_4_has_soft_extensions():
    # frozen from the dense oracle: both certificates hang an all-zero cycle on the joint
    g = glue(cycle_graph(3), cycle_graph(4))
    rep = recognize_bicyclic(g, True)
    assert keyset(rep.keys()) == {(2, "000+0-"), (3, "0+-000")}
    assert not any(bicyclic_prediction(bicyclic_shape(g)))


def test_cactus_examples():
    c8c4 = glue(cycle_graph(8), cycle_graph(4))
    rep = recognize_cactus(c8c4, True)
    assert 2 in lambdas(rep)
    assert any(f.lam == 2 and f.certificate.valuation[0] == 0 and not equal_links(f.certificate)
               for f in rep.found)
    b66 = glue(cycle_graph(6), cycle_graph(6))
    assert lambdas(recognize_cactus(b66)) == lambdas(recognize_bicyclic(b66))
    assert {2, 3} <= lambdas(recognize_cactus(b66))


def test_preconditions():
    with pytest.raises(ContractViolation):
        recognize_tree(cycle_graph(4))
    with pytest.raises(ContractViolation):
        recognize_unicyclic(path_graph(4))
    with pytest.raises(ContractViolation):
        recognize_bicyclic(cycle_graph(4))
    with pytest.raises(ContractViolation):
        recognize_cactus(complete_graph(4))
    with pytest.raises(ContractViolation):
        recognize_unicyclic(cycle_graph(3).disjoint_union(cycle_graph(3)))


def test_dispatch_and_fallback():
    assert recognize(complete_graph(4)) is None
    rep = classify(complete_graph(4))
    assert rep.family is Family.GENERAL and lambdas(rep) == {4}
    assert all(f.trace == "exhaustive search" for f in rep.found)
    assert recognize(path_graph(5)).family is Family.TREE
    assert recognize(gen_diamond().graph).family is Family.BICYCLIC


# completeness and traces ---------------------------------------------------------

def family_members(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") < n - 1:
            continue
        g = Graph.from_edges(n, (e for k, e in enumerate(pairs) if mask >> k & 1))
        if is_connected(g) and (g.m <= g.n + 1 or is_cactus(g)):
            yield g


def check_report(g: Graph) -> None:
    rep = recognize(g, enumerate_all=True)
    assert rep is not None, g
    assert rep.keys() == brute_force(g).keys(), g
    assert rep.counts == {lam: sum(1 for f in rep.found if f.lam == lam) for lam in rep.counts}
    names = {c.name: c for c in CATALOG[rep.family]}
    for f in rep.found:
        assert verify(g, f.certificate.valuation) == f.lam
        assert f.trace in names, (g, f)
        assert names[f.trace].holds(f.certificate)


def test_recognizers_vs_oracle_all_members_up_to_6():
    count = 0
    for n in range(1, 7):
        for g in family_members(n):
            check_report(g)
            count += 1
    assert count == 11251  # counted independently with networkx


@given(st.integers(0, 10**9))
def test_recognizers_vs_oracle_random_cacti(seed):
    check_report(random_cactus(random.Random(seed), 11))


def _leafless_bicyclic():
    for p in range(3, 10):
        for q in range(p, 10):
            yield glue(cycle_graph(p), cycle_graph(q))
            for r in range(0, 3):
                if p + q + r <= 12:
                    g = cycle_graph(p).disjoint_union(cycle_graph(q))
                    path = [0] + list(range(p + q, p + q + r)) + [p]
                    yield Graph.from_edges(p + q + r, g.edges + tuple(zip(path, path[1:])))
    for chains in itertools.combinations_with_replacement(range(2, 9), 3):
        if chains.count(2) > 1 or sum(chains) - 4 > 12:
            continue
        n, edges = 2, []
        for c in chains:
            inner = list(range(n, n + c - 2))
            n += c - 2
            path = [0] + inner + [1]
            edges += list(zip(path, path[1:]))
        yield Graph.from_edges(n, edges)


def test_bicyclic_prediction_matches_solver():
    for g in _leafless_bicyclic():
        solver = StructuralSolver(g)
        free = {lam for lam in range(1, 5) for v in solver.solutions(lam)
                if not equal_links(Certificate(g, v, lam))}
        assert set(bicyclic_prediction(bicyclic_shape(g))) == free, (g, bicyclic_shape(g))
