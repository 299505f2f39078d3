from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from trivalent.generate import (
    FAMILIES,
    GenSpec,
    counterexample_orientations,
    gen_B1,
    gen_B3,
    gen_cactus,
    gen_compose,
    gen_counterexample,
    gen_cycle,
    gen_diamond,
    gen_p2_tree,
    gen_regular_bipartite,
    gen_soft_star,
    gen_star_tree,
)
from trivalent.graph import (
    ContractViolation,
    Family,
    Graph,
    complete_bipartite,
    cycle_graph,
    is_bipartite,
    is_cactus,
    is_connected,
    is_regular,
    path_graph,
)
from trivalent.matching import is_hamiltonian, max_bipartite_matching
from trivalent.transform import decompose, reassemble
from trivalent.valuation import Certificate, format_valuation, verify

from conftest import to_nx

import networkx as nx


def advertised(cert: Certificate) -> None:
    # independent of the Certificate constructor: recompute the eigen-identity
    g, v, lam = cert.graph, cert.valuation, cert.lam
    assert any(v)
    for i in range(g.n):
        assert (g.degree(i) - lam) * v[i] == sum(v[j] for j in g.adj[i])
    assert verify(g, v) == lam


# trees ----------------------------------------------------------------------------

def test_p2_tree_examples():
    c = gen_p2_tree(3)
    assert c.graph == path_graph(6) and c.lam == 2
    for wiring in ("star", "random"):
        advertised(gen_p2_tree(5, wiring, seed=3))
    with pytest.raises(ValueError):
        gen_p2_tree(3, "zigzag")
    with pytest.raises(ContractViolation):
        gen_p2_tree(0)


def test_soft_star_and_star_tree():
    s = gen_soft_star(2)
    assert s.lam == 1 and s.valuation[0] == 0 and s.graph.degree(0) == 4
    # S3, S3 and S5 chained by equal links
    t = gen_star_tree([1, 1, 2])
    assert t.lam == 1 and t.graph.n == 11 and is_connected(t.graph) and t.graph.m == 10


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5), st.integers(0, 10**6))
def test_star_tree_random(ks, seed):
    c = gen_star_tree(ks, "random", seed)
    advertised(c)
    assert c.graph.m == c.graph.n - 1 and is_connected(c.graph)


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_p2_tree_has_perfect_matching(p, seed):
    c = gen_p2_tree(p, "random", seed)
    advertised(c)
    assert is_connected(c.graph) and c.graph.m == c.graph.n - 1
    assert 2 * len(max_bipartite_matching(c.graph)) == c.graph.n


# cycles and bicyclic -----------------------------------------------------------------

def test_cycle_examples():
    assert (format_valuation(gen_cycle("C4k", 1).valuation), gen_cycle("C4k", 1).lam) == ("+0-0", 2)
    assert (format_valuation(gen_cycle("C3k", 1).valuation), gen_cycle("C3k", 1).lam) == ("+0-", 3)
    assert (format_valuation(gen_cycle("C2k", 2).valuation), gen_cycle("C2k", 2).lam) == ("+-+-", 4)
    with pytest.raises(ContractViolation):
        gen_cycle("C2k", 1)
    with pytest.raises(ValueError):
        gen_cycle("C5k", 1)


def test_b1_examples():
    assert gen_B1(4, 8).lam == 2
    c = gen_B1(6, 6, lam=2)
    g, v = c.graph, c.valuation
    assert v[0] == 0
    sides = {sum(v[j] for j in g.adj[0] if j < 6), sum(v[j] for j in g.adj[0] if j >= 6)}
    assert sides == {2, -2}
    assert gen_B1(6, 6, lam=3).lam == 3
    with pytest.raises(ContractViolation, match="mod 4"):
        gen_B1(4, 6)
    with pytest.raises(ContractViolation):
        gen_B1(4, 8, lam=3)


def test_b3_examples():
    c = gen_B3([9, 6, 3])
    assert c.lam == 3 and c.graph.n == 14
    assert {c.valuation[0], c.valuation[1]} == {1, -1}
    d = gen_diamond()
    assert d.lam == 4 and format_valuation(d.valuation) == "+-00"
    assert gen_B3([6, 3, 3]).lam == 3 and gen_B3([6, 3, 3], lam=4).lam == 4
    with pytest.raises(ContractViolation, match="mod 3"):
        gen_B3([5, 3, 3])


@given(st.integers(1, 4), st.integers(1, 4), st.sampled_from((0, 2)), st.sampled_from((2, 3)))
def test_b1_family(a, b, r, lam):
    p, q = (4 * a + r, 4 * b + r) if lam == 2 else (3 * a + 3, 3 * b + 3)
    c = gen_B1(p, q, lam)
    advertised(c)
    assert c.valuation[0] == 0
    assert [str(x) for x in decompose(c).classes()] == [f"B1({min(p, q)},{max(p, q)})"]


@given(st.lists(st.integers(1, 4), min_size=3, max_size=3))
def test_b3_family(ks):
    chains = [3 * k for k in ks]
    c = gen_B3(chains, lam=3)
    advertised(c)
    assert c.valuation[0] == -c.valuation[1] != 0
    assert [str(x) for x in decompose(c).classes()] == [f"B3({','.join(map(str, sorted(chains, reverse=True)))})"]


@given(st.integers(2, 5))
def test_b3_even_family(j):
    c = gen_B3([2 * j, 3, 3], lam=4)
    advertised(c)


@given(st.integers(2, 4), st.sampled_from((4, 7)))
def test_generalized_theta(pairs, length):
    c = gen_B3([length] * (2 * pairs), lam=3)
    advertised(c)
    assert decompose(c).classes()[0].kind == "GeneralizedTheta"


def test_generalized_theta_lambda_2():
    advertised(gen_B3([3, 3, 5, 5], lam=2))
    with pytest.raises(ContractViolation):
        gen_B3([3, 5, 5, 5], lam=2)


# cactus -----------------------------------------------------------------------

def test_cactus_examples():
    c = gen_cactus([8, 4])
    assert c.lam == 2 and c.graph.n == 11 and c.valuation[0] == 0
    c = gen_cactus([6, 3])
    assert c.lam == 3 and is_cactus(c.graph)
    assert gen_cactus([4]).graph == cycle_graph(4)
    with pytest.raises(ContractViolation, match="not soft"):
        gen_cactus([8, 4], glue=[(0, 1, 1, 0)])
    with pytest.raises(ContractViolation):
        gen_cactus([8, 6])
    with pytest.raises(ContractViolation, match="cycle of cycles"):
        gen_cactus([4, 4, 4], glue=[(0, 0, 1, 0), (1, 2, 0, 2)])


@st.composite
def cactus_recipe(draw):
    lam = draw(st.sampled_from((2, 3)))
    period = 4 if lam == 2 else 3
    cycles = draw(st.lists(st.integers(1, 3).map(lambda k: period * k), min_size=1, max_size=5))
    soft = [a for a in range(0, 12, 2 if lam == 2 else 3)]
    glue = []
    for j in range(1, len(cycles)):
        i = draw(st.integers(0, j - 1))
        a = draw(st.sampled_from([x for x in soft if x < cycles[i]]))
        b = draw(st.sampled_from([x for x in soft if x < cycles[j]]))
        glue.append((i, a, j, b))
    return cycles, glue, lam


@given(cactus_recipe())
def test_cactus_family(recipe):
    cycles, glue, lam = recipe
    c = gen_cactus(cycles, glue, lam)
    advertised(c)
    assert is_cactus(c.graph) and c.graph.m - c.graph.n + 1 == len(cycles)
    classes = decompose(c).classes()
    assert len(classes) == 1
    if len(cycles) == 1:
        assert classes[0].kind == ("Cycle4k" if lam == 2 else "Cycle3k")
    elif len(cycles) == 2:
        assert classes[0].kind == "B1"
    else:
        assert classes[0].kind == "GluedCycles"
        assert classes[0].params == tuple(sorted(cycles, reverse=True))


# regular bipartite and the counterexample ------------------------------------------------

def test_regular_bipartite_examples():
    c8 = gen_regular_bipartite(4, 0)
    assert c8.graph == cycle_graph(8) and c8.lam == 4
    r = gen_regular_bipartite(4, 2)
    assert r.lam == 8 and set(r.graph.degrees) == {4}
    k33 = gen_regular_bipartite(3, 1)
    assert k33.lam == 6 and nx.is_isomorphic(to_nx(k33.graph), to_nx(complete_bipartite(3, 3)))
    assert k33.graph.m - k33.graph.n + 1 == 4
    with pytest.raises(ContractViolation):
        gen_regular_bipartite(4, 3)


@given(st.integers(2, 12), st.data())
def test_regular_bipartite_family(k, data):
    l = data.draw(st.integers(0, k - 2))
    c = gen_regular_bipartite(k, l)
    advertised(c)
    g, d, n = c.graph, 2 + l, 2 * k
    assert is_regular(g) and set(g.degrees) == {d} and is_bipartite(g) and is_connected(g)
    assert g.m - g.n + 1 == n // 2 * (d - 2) + 1
    if n <= 16:
        assert is_hamiltonian(g)


def test_counterexample():
    g = gen_counterexample()
    assert g.n == 20 and is_regular(g) and set(g.degrees) == {3}
    side = nx.bipartite.sets(to_nx(g))
    assert sorted(map(len, side)) == [10, 10]
    assert not is_hamiltonian(g)
    assert g.m - g.n + 1 == 11
    orients = counterexample_orientations()
    assert set(orients) == {"aligned", "mixed"}
    assert all(is_regular(h) and is_bipartite(h) for h in orients.values())
    assert nx.is_isomorphic(*(to_nx(h) for h in orients.values()))


# composition and specs ---------------------------------------------------------

def test_compose_empty_is_base():
    base = gen_cycle("c3k", 2)
    comp = gen_compose(base, [])
    assert comp.certificate == base and Family.UNICYCLIC in comp.family


def test_compose_c6_c3_soft_tree_and_zero_cycle():
    # C6 linked to C3 by an equal link, then a soft tree and an all-zero C4 hung on soft nodes
    c6, c3 = gen_cycle("c3k", 2), gen_cycle("c3k", 1)
    tree = Graph.from_edges(3, [(0, 1), (1, 2)])
    comp = gen_compose(c6, [("union", c3), ("link", 0, 6), ("soft", tree, [(1, 4)]),
                            ("soft", cycle_graph(4), [(0, 7)])])
    c = comp.certificate
    advertised(c)
    assert c.lam == 3 and c.graph.n == 16 and Family.CACTUS in comp.family
    kinds = sorted(x.kind for x in decompose(c).classes())
    assert kinds == ["Cycle3k", "Cycle3k", "IsolatedZeros", "IsolatedZeros"]


def test_compose_stars():
    s3, s5 = gen_soft_star(1), gen_soft_star(2)
    comp = gen_compose(s3, [("union", s3), ("union", s5), ("link", 0, 3), ("link", 3, 6)])
    assert comp.certificate.lam == 1 and Family.TREE in comp.family


def test_compose_cycle_guard():
    with pytest.raises(ContractViolation):
        gen_compose(gen_p2_tree(2), [("link", 0, 3)], keep_cyclomatic=True)


@given(st.integers(0, 10**6))
def test_compose_random_stays_valid(seed):
    base = gen_cactus([8, 4])
    comp = gen_compose(base, [("random_link",), ("random_soft", 3), ("random_link",)],
                       seed=seed, keep_cyclomatic=True)
    advertised(comp.certificate)
    assert is_cactus(comp.certificate.graph)


def test_specs_cover_families():
    specs = [GenSpec("p2-tree", {"p": 3}), GenSpec("soft-star", {"k": 2}),
             GenSpec("star-tree", {"ks": [1, 2]}), GenSpec("cycle", {"kind": "c4k", "k": 2}),
             GenSpec("b1", {"p": 4, "q": 8}), GenSpec("b3", {"chains": [9, 6, 3]}),
             GenSpec("diamond"), GenSpec("cactus", {"cycles": [8, 4]}),
             GenSpec("regular-bipartite", {"k": 4, "l": 1})]
    assert {s.family for s in specs} | {"counterexample"} == set(FAMILIES)
    for s in specs:
        advertised(s.build())
    with pytest.raises(ValueError):
        GenSpec("petersen").build()


def test_recipes_round_trip():
    cases = {
        "p2-tree": (gen_p2_tree(4, "random", 1), ["ChainP2"] * 4),
        "star-tree": (gen_star_tree([1, 3, 2]), ["SoftStar(1)", "SoftStar(2)", "SoftStar(3)"]),
        "c4k": (gen_cycle("c4k", 3), ["Cycle4k(3)"]),
        "c2k": (gen_cycle("c2k", 5), ["EvenCycle(5)"]),
        "diamond": (gen_diamond(), ["B3(3,3,2)"]),
        "rb": (gen_regular_bipartite(5, 1), ["Other(10,15)"]),
    }
    for name, (c, expected) in cases.items():
        dec = decompose(c)
        assert sorted(map(str, dec.classes())) == sorted(expected), name
        assert reassemble(dec) == c.graph
