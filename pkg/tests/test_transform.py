from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from trivalent import transform as T
from trivalent.generate import gen_compose, gen_cycle, gen_p2_tree, gen_soft_star
from trivalent.graph import ContractViolation, Graph, cycle_graph, is_cactus, path_graph
from trivalent.search import full_spectrum
from trivalent.transform import (
    add_equal_link,
    classify_component,
    decompose,
    describe,
    extend_soft,
    reassemble,
    remove_equal_link,
    union,
)
from trivalent.valuation import Certificate, verify

from conftest import random_cactus

P2 = Certificate.of(path_graph(2), (1, -1))


def test_link_two_chains():
    two = union(Certificate.of(path_graph(2), (-1, 1)), P2)
    p4 = add_equal_link(two, 1, 2)
    assert p4.graph == path_graph(4) and p4.lam == 2


def test_chord_on_even_cycle():
    c8 = gen_cycle("c2k", 4)
    chorded = add_equal_link(c8, 0, 2)
    assert chorded.lam == 4 and chorded.graph.m == 9


def test_link_involution():
    c8 = gen_cycle("c2k", 4)
    assert remove_equal_link(add_equal_link(c8, 0, 4), 0, 4) == c8


def test_link_errors():
    c4 = gen_cycle("c4k", 1)  # +0-0
    with pytest.raises(ContractViolation):
        add_equal_link(c4, 0, 2)  # unequal
    with pytest.raises(ContractViolation):
        add_equal_link(c4, 1, 1)
    with pytest.raises(ContractViolation):
        remove_equal_link(c4, 0, 1)  # unequal ends
    with pytest.raises(ContractViolation):
        remove_equal_link(c4, 1, 3)  # not an edge
    with pytest.raises(ContractViolation):
        union(P2, c4.__class__.of(cycle_graph(3), (1, 0, -1)))


def test_soft_extension_star():
    s5 = gen_soft_star(2)
    tree = extend_soft(s5, path_graph(2), [(0, 0)])
    assert tree.graph.n == 7 and tree.graph.m == 6 and tree.lam == 1


def test_soft_extension_cycle_pendant():
    c6 = gen_cycle("c3k", 2)
    soft = c6.valuation.index(0)
    out = extend_soft(c6, Graph.empty(1), [(0, soft)])
    assert out.lam == 3 and out.graph.m == out.graph.n


def test_soft_extension_identity_and_errors():
    c6 = gen_cycle("c3k", 2)
    assert extend_soft(c6, Graph.empty(0), []) == c6
    with pytest.raises(ContractViolation):
        extend_soft(c6, Graph.empty(1), [(0, c6.valuation.index(1))])
    with pytest.raises(ContractViolation):
        extend_soft(c6, Graph.empty(1), [(1, 1)])


def test_decompose_p4():
    p4 = Certificate.of(path_graph(4), (-1, 1, 1, -1))
    dec = decompose(p4)
    assert [c.kind for c in dec.classes()] == [T.CHAIN_P2, T.CHAIN_P2]
    assert dec.links == ((1, 2),)


def _cactus_with_extras() -> Certificate:
    # C8 and C4 sharing a soft node, a P2 joined by an equal link, an all-zero C5 hung on a soft node
    c8 = Certificate.of(cycle_graph(8), (0, 1, 0, -1, 0, 1, 0, -1))
    c4 = Certificate.of(cycle_graph(4), (0, 1, 0, -1))
    both = union(c8, c4)
    # identify vertex 8 (soft, C4) with vertex 0 (soft, C8)
    edges = [(0 if u == 8 else u, 0 if v == 8 else v) for u, v in both.graph.edges]
    ids = [x for x in range(12) if x != 8]
    remap = {x: i for i, x in enumerate(ids)}
    glued = Certificate.of(Graph.from_edges(11, ((remap[u], remap[v]) for u, v in edges)),
                           tuple(both.valuation[x] for x in ids))
    with_p2 = add_equal_link(union(glued, P2), 1, 11)
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    return extend_soft(with_p2, c5, [(0, 2)])


def test_decompose_cactus_with_extras():
    cert = _cactus_with_extras()
    assert cert.lam == 2
    dec = decompose(cert)
    kinds = sorted(str(c) for c in dec.classes())
    assert kinds == ["B1(4,8)", "ChainP2", "IsolatedZeros"]
    zeros = next(c for c in dec if c.cls.kind == T.ISOLATED_ZEROS)
    assert zeros.graph.m == 5  # the soft cycle keeps its edges
    assert reassemble(dec) == cert.graph
    assert len(describe(dec)) == 3


def test_equal_link_free_is_single_component():
    c = gen_cycle("c3k", 3)
    dec = decompose(c)
    assert len(dec) == 1 and dec.classes()[0] == T.ComponentClass(T.CYCLE_3K, (3,), 3)


def test_classify_component_catalog():
    assert classify_component(cycle_graph(5), (0,) * 5, 2).kind == T.ISOLATED_ZEROS
    assert classify_component(cycle_graph(4), (1, -1, 1, -1), 4).kind == T.EVEN_CYCLE
    assert classify_component(cycle_graph(8), (1, 0, -1, 0) * 2, 2).kind == T.CYCLE_4K
    assert str(classify_component(*_star(3), 1)) == "SoftStar(3)"


def _star(k):
    g = Graph.from_edges(2 * k + 1, [(0, i) for i in range(1, 2 * k + 1)])
    return g, (0,) + (-1, 1) * k


# properties -------------------------------------------------------------------

@given(st.integers(0, 10**9))
def test_surgery_preserves_lambda(seed):
    rnd = random.Random(seed)
    base = rnd.choice([gen_p2_tree(3, "star"), gen_soft_star(2), gen_cycle("c3k", 2),
                       gen_cycle("c4k", 2), gen_cycle("c2k", 3)])
    ops = [rnd.choice([("random_link",), ("random_soft", rnd.randint(1, 3))]) for _ in range(6)]
    comp = gen_compose(base, ops, seed=seed)
    assert verify(comp.certificate.graph, comp.certificate.valuation) == base.lam


@given(st.integers(0, 10**9))
def test_decompose_reassemble(seed):
    rnd = random.Random(seed)
    g = random_cactus(rnd, 9)
    for cert in full_spectrum(g):
        dec = decompose(cert)
        assert reassemble(dec) == g
        for comp in dec:
            if comp.cls.kind != T.ISOLATED_ZEROS:
                assert verify(comp.graph, comp.valuation) == cert.lam


def test_cactus_components_are_catalogued():
    rnd = random.Random(2024)
    seen = 0
    for _ in range(400):
        g = random_cactus(rnd, 10)
        assert is_cactus(g)
        for cert in full_spectrum(g):
            for comp in decompose(cert):
                assert comp.cls.kind != T.OTHER, (g, cert, comp.cls)
                if comp.cls.kind != T.ISOLATED_ZEROS:
                    assert comp.cls.lam == cert.lam
                    assert verify(comp.graph, comp.valuation) == cert.lam
            seen += 1
    assert seen > 200
