"""Certified constructions for every family in the catalog.

Every generator returns a :class:`~trivalent.valuation.Certificate`, whose
constructor re-verifies the eigenpair, so no unverified output can escape.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import transform as T
from .graph import (
    BicyclicShape,
    ContractViolation,
    FamilyClassification,
    Graph,
    classify_family,
    connected_components,
    is_bipartite,
    is_regular,
)
from .recognize import b1_pattern, b3_pattern, bicyclic_prediction
from .valuation import Certificate


def _rng(seed: int | None) -> random.Random:
    return random.Random(seed)


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

def gen_p2_tree(p: int, wiring: str = "path", seed: int | None = None) -> Certificate:
    """``p`` chains P2 joined into a tree by ``p - 1`` equal links (lambda = 2).

    ``wiring`` is ``"path"`` (P_2p), ``"star"`` (every chain hangs on the
    first one) or ``"random"`` (random tree over the chains).
    """
    if p < 1:
        raise ContractViolation("p must be at least 1")
    vals = []
    for i in range(p):
        vals += [-1, 1] if i % 2 == 0 else [1, -1]
    edges = [(2 * i, 2 * i + 1) for i in range(p)]
    rng = _rng(seed)
    for j in range(1, p):
        if wiring == "path":
            edges.append((2 * j - 1, 2 * j))
            continue
        if wiring == "star":
            parent = 0
            value = 1
        elif wiring == "random":
            parent = rng.randrange(j)
            value = rng.choice((-1, 1))
        else:
            raise ValueError(f"unknown wiring {wiring!r}")
        a = next(x for x in (2 * parent, 2 * parent + 1) if vals[x] == value)
        b = next(x for x in (2 * j, 2 * j + 1) if vals[x] == value)
        edges.append((a, b))
    return Certificate(Graph.from_edges(2 * p, edges), tuple(vals), 2)


def gen_soft_star(k: int) -> Certificate:
    """S_{2k+1}: soft center 0, leaves alternating -1, +1 (lambda = 1)."""
    if k < 1:
        raise ContractViolation("k must be at least 1")
    g = Graph.from_edges(2 * k + 1, [(0, i) for i in range(1, 2 * k + 1)])
    return Certificate(g, (0,) + (-1, 1) * k, 1)


def gen_star_tree(ks: Sequence[int], wiring: str = "chain", seed: int | None = None) -> Certificate:
    """Soft stars S_{2k_i+1} joined into a tree by equal links (lambda = 1).

    ``"chain"`` links consecutive centers; ``"random"`` links each star to a
    random earlier one through a random pair of equal-valued vertices.
    """
    if not ks or any(k < 1 for k in ks):
        raise ContractViolation("every star needs k >= 1")
    cert = gen_soft_star(ks[0])
    starts = [0]
    for k in ks[1:]:
        starts.append(cert.graph.n)
        cert = T.union(cert, gen_soft_star(k))
    rng = _rng(seed)
    for j in range(1, len(ks)):
        if wiring == "chain":
            a, b = starts[j - 1], starts[j]
        elif wiring == "random":
            i = rng.randrange(j)
            value = rng.choice((-1, 0, 1))
            a = rng.choice([starts[i] + x for x in range(2 * ks[i] + 1)
                            if cert.valuation[starts[i] + x] == value])
            b = rng.choice([starts[j] + x for x in range(2 * ks[j] + 1)
                            if cert.valuation[starts[j] + x] == value])
        else:
            raise ValueError(f"unknown wiring {wiring!r}")
        cert = T.add_equal_link(cert, a, b)
    return cert


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------

_CYCLE_PATTERNS = {"c4k": ((1, 0, -1, 0), 4, 2), "c3k": ((1, 0, -1), 3, 3), "c2k": ((1, -1), 2, 4)}


def gen_cycle(kind: str, k: int) -> Certificate:
    """C4k (lambda 2), C3k (lambda 3) or C2k (lambda 4) with its periodic pattern."""
    key = kind.lower()
    if key not in _CYCLE_PATTERNS:
        raise ValueError(f"unknown cycle kind {kind!r}; use C4k, C3k or C2k")
    pattern, period, lam = _CYCLE_PATTERNS[key]
    n = period * k
    if k < 1 or n < 3:
        raise ContractViolation(f"{kind}({k}) is not a simple cycle")
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return Certificate(g, pattern * k, lam)


# ---------------------------------------------------------------------------
# bicyclic
# ---------------------------------------------------------------------------

def _b1_graph(p: int, q: int) -> Graph:
    edges = [(i, (i + 1) % p) for i in range(p)]
    ring = [0] + list(range(p, p + q - 1))
    edges += [(ring[i], ring[(i + 1) % q]) for i in range(q)]
    return Graph.from_edges(p + q - 1, edges)


def _pick_lambda(available: dict, lam: int | None, what: str, tests: str) -> int:
    if not available:
        raise ContractViolation(f"{what} matches no construction: {tests}")
    if lam is None:
        return min(available)
    if lam not in available:
        raise ContractViolation(f"{what} has no construction for lambda={lam}: {tests}")
    return lam


def gen_B1(p: int, q: int, lam: int | None = None) -> Certificate:
    """Two cycles sharing the soft vertex 0.

    lambda = 2 needs p = q = 0 or p = q = 2 (mod 4); lambda = 3 needs
    p = q = 0 (mod 3). Without ``lam`` the smallest admissible one is used.
    """
    if p < 3 or q < 3:
        raise ContractViolation("cycle lengths must be at least 3")
    shape = BicyclicShape("B1", tuple(sorted((p, q))))
    tests = (f"p mod 4 = {p % 4}, q mod 4 = {q % 4} (need both 0 or both 2); "
             f"p mod 3 = {p % 3}, q mod 3 = {q % 3} (need both 0)")
    lam = _pick_lambda(bicyclic_prediction(shape), lam, f"B1({p},{q})", tests)
    g = _b1_graph(p, q)
    return Certificate(g, b1_pattern(g, lam), lam)


def _theta_graph(chains: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    # hubs are 0 and 1; each chain lists its interior vertices from hub 0
    n = 2
    edges = []
    interiors = []
    for c in chains:
        inner = list(range(n, n + c - 2))
        n += c - 2
        path = [0] + inner + [1]
        edges += list(zip(path, path[1:]))
        interiors.append(inner)
    return Graph.from_edges(n, edges), interiors


def gen_B3(chains: Sequence[int], lam: int | None = None) -> Certificate:
    """Two hubs joined by chains with the given vertex counts (hubs included).

    Three chains: all counts multiples of 3 (lambda 3, hubs -1/+1), the
    diamond (3,3,2) or (2j,3,3) (lambda 4). Four or more chains form a
    generalized theta with soft hubs: an even number of chains with counts
    1 (mod 3) gives lambda 3; odd counts, with an even number of chains in
    each residue class mod 4, give lambda 2.
    """
    chains = list(chains)
    if len(chains) < 3:
        raise ContractViolation("need at least three chains")
    if any(c < 2 for c in chains) or chains.count(2) > 1:
        raise ContractViolation("chains need at least 2 vertices and at most one may be a bare edge")
    g, interiors = _theta_graph(chains)
    if len(chains) == 3:
        shape = BicyclicShape("B3", tuple(sorted(chains, reverse=True)))
        tests = f"chain counts {chains} mod 3 = {[c % 3 for c in chains]} (need all 0), or (3,3,2), or (2j,3,3)"
        lam = _pick_lambda(bicyclic_prediction(shape), lam, f"B3{tuple(chains)}", tests)
        return Certificate(g, b3_pattern(g, lam), lam)
    options = {}
    if len(chains) % 2 == 0 and all(c % 3 == 1 for c in chains):
        options[3] = True
    residues = [c % 4 for c in chains]
    if all(c % 2 == 1 for c in chains) and residues.count(1) % 2 == 0 and residues.count(3) % 2 == 0:
        options[2] = True
    tests = (f"{len(chains)} chains with counts mod 3 = {[c % 3 for c in chains]} (lambda 3 needs an even "
             f"number of chains, all 1), counts mod 4 = {residues} (lambda 2 needs odd counts, "
             f"an even number in each class)")
    lam = _pick_lambda(options, lam, f"theta{tuple(chains)}", tests)
    vals = [0] * g.n
    if lam == 3:
        for idx, inner in enumerate(interiors):
            s = 1 if idx % 2 == 0 else -1
            for i, x in enumerate(inner, start=1):
                vals[x] = s * (0, 1, -1)[i % 3]
    else:
        seen = {1: 0, 3: 0}
        for c, inner in zip(chains, interiors):
            s = 1 if seen[c % 4] % 2 == 0 else -1
            seen[c % 4] += 1
            for i, x in enumerate(inner, start=1):
                vals[x] = 0 if i % 2 == 0 else s * (1 if (i // 2) % 2 == 0 else -1)
    return Certificate(g, tuple(vals), lam)


def gen_diamond() -> Certificate:
    """K4 minus an edge; hubs 0, 1 carry +1, -1 and the two others are soft (lambda 4)."""
    return gen_B3([3, 3, 2], lam=4)


# ---------------------------------------------------------------------------
# cactus
# ---------------------------------------------------------------------------

def gen_cactus(cycles: Sequence[int], glue: Sequence[tuple[int, int, int, int]] | None = None,
               lam: int | None = None) -> Certificate:
    """Cycles glued at soft vertices into a cactus.

    All cycles carry the C4k pattern (lambda 2) or all the C3k pattern
    (lambda 3), starting with a soft vertex at position 0. ``glue`` lists
    identifications ``(i, a, j, b)``: position ``a`` of cycle ``i`` with
    position ``b`` of cycle ``j``; they must form a tree over the cycles.
    By default every cycle is glued at its position 0.
    """
    cycles = list(cycles)
    if not cycles:
        raise ContractViolation("need at least one cycle")
    if lam is None:
        lam = 2 if all(c % 4 == 0 for c in cycles) else 3 if all(c % 3 == 0 for c in cycles) else 0
    if lam == 2 and any(c % 4 for c in cycles) or lam == 3 and any(c % 3 for c in cycles) or lam not in (2, 3):
        raise ContractViolation(f"cycle lengths {cycles} need all multiples of 4 (lambda 2) or of 3 (lambda 3)")
    pattern = (0, 1, 0, -1) if lam == 2 else (0, 1, -1)
    if glue is None:
        glue = [(0, 0, j, 0) for j in range(1, len(cycles))]
    if len(glue) != len(cycles) - 1:
        raise ContractViolation(f"{len(cycles)} cycles need {len(cycles) - 1} gluings")
    # union-find over cycle positions
    slots = [(i, a) for i, c in enumerate(cycles) for a in range(c)]
    parent = {s: s for s in slots}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    tree = {i: i for i in range(len(cycles))}

    def tfind(i):
        while tree[i] != i:
            i = tree[i]
        return i

    for i, a, j, b in glue:
        if not (0 <= i < len(cycles) and 0 <= j < len(cycles) and 0 <= a < cycles[i] and 0 <= b < cycles[j]):
            raise ContractViolation(f"gluing {(i, a, j, b)} out of range")
        for c, pos in ((i, a), (j, b)):
            if pattern[pos % len(pattern)] != 0:
                raise ContractViolation(
                    f"position {pos} of cycle {c} is not soft: gluing there raises d_i + hard degree above lambda={lam}")
        ri, rj = tfind(i), tfind(j)
        if ri == rj:
            raise ContractViolation(f"gluing {(i, a, j, b)} closes a cycle of cycles")
        tree[ri] = rj
        parent[find((i, a))] = find((j, b))
    ids = {}
    for s in slots:
        ids.setdefault(find(s), len(ids))
    edges = set()
    vals = [0] * len(ids)
    for i, c in enumerate(cycles):
        for a in range(c):
            u, w = ids[find((i, a))], ids[find((i, (a + 1) % c))]
            edges.add((min(u, w), max(u, w)))
            vals[u] = pattern[a % len(pattern)]
    return Certificate(Graph.from_edges(len(ids), sorted(edges)), tuple(vals), lam)


# ---------------------------------------------------------------------------
# regular bipartite
# ---------------------------------------------------------------------------

def gen_regular_bipartite(k: int, l: int) -> Certificate:
    """C_2k plus ``l`` matchings M_t = {2j, 2j + 2t + 1 mod 2k}; bivalent with lambda = 2(2 + l)."""
    if k < 2:
        raise ContractViolation("k must be at least 2")
    if not 0 <= l <= k - 2:
        raise ContractViolation(f"l={l} out of range 0..{k - 2}: matchings would repeat cycle edges")
    n = 2 * k
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    for t in range(1, l + 1):
        for j in range(k):
            u, w = 2 * j, (2 * j + 2 * t + 1) % n
            e = (min(u, w), max(u, w))
            if e in edges:
                raise ContractViolation(f"matching {t} repeats edge {e}")
            edges.add(e)
    g = Graph.from_edges(n, sorted(edges))
    return Certificate(g, tuple(1 if i % 2 == 0 else -1 for i in range(n)), 2 * (2 + l))


def counterexample_orientations() -> dict[str, Graph]:
    """Both ways of attaching alpha and beta to three copies of K33 minus an edge.

    Copy c has A side 6c..6c+2 and B side 6c+3..6c+5 with edge (6c, 6c+3)
    removed. ``aligned``: alpha (18) meets the B-side degree-2 vertices and
    beta (19) the A-side ones. ``mixed``: the first copy is attached the
    other way round.
    """
    base = []
    for c in range(3):
        for a in range(3):
            for b in range(3):
                if (a, b) != (0, 0):
                    base.append((6 * c + a, 6 * c + 3 + b))
    out = {}
    for name, flips in (("aligned", (False, False, False)), ("mixed", (True, False, False))):
        edges = list(base)
        for c, flip in enumerate(flips):
            a_side, b_side = 6 * c, 6 * c + 3
            if flip:
                a_side, b_side = b_side, a_side
            edges += [(b_side, 18), (a_side, 19)]
        out[name] = Graph.from_edges(20, edges)
    return out


def gen_counterexample() -> Graph:
    """A 3-regular bipartite graph on 20 vertices that has no Hamiltonian cycle."""
    for g in counterexample_orientations().values():
        if is_regular(g) and g.degrees[0] == 3 and is_bipartite(g):
            return g
    raise AssertionError("no orientation is 3-regular bipartite")


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    certificate: Certificate
    family: FamilyClassification
    log: tuple[str, ...] = ()


def _same_component(g: Graph, i: int, j: int) -> bool:
    return any(i in c and j in c for c in map(set, connected_components(g)))


def gen_compose(base: Certificate, ops: Sequence[tuple], seed: int | None = None,
                keep_cyclomatic: bool = False) -> Composition:
    """Apply surgery steps to ``base``.

    Steps: ``("link", i, j)``, ``("unlink", i, j)``,
    ``("soft", attachment, joins)``, ``("union", certificate)``,
    ``("random_link",)`` and ``("random_soft", size)`` (a random zero tree
    hung on a random soft node). With ``keep_cyclomatic`` a link may not
    close a cycle.
    """
    rng = _rng(seed)
    cert = base
    log = []
    for op in ops:
        name = op[0]
        if name in ("link", "random_link"):
            if name == "link":
                i, j = op[1], op[2]
            else:
                g, v = cert.graph, cert.valuation
                pairs = [(a, b) for a in range(g.n) for b in range(a + 1, g.n)
                         if v[a] == v[b] and not g.has_edge(a, b)
                         and not (keep_cyclomatic and _same_component(g, a, b))]
                if not pairs:
                    log.append("random_link: no candidate")
                    continue
                i, j = rng.choice(pairs)
            if keep_cyclomatic and _same_component(cert.graph, i, j):
                raise ContractViolation(f"link ({i}, {j}) would close a new cycle")
            cert = T.add_equal_link(cert, i, j)
            log.append(f"link {i} {j}")
        elif name == "unlink":
            cert = T.remove_equal_link(cert, op[1], op[2])
            log.append(f"unlink {op[1]} {op[2]}")
        elif name in ("soft", "random_soft"):
            if name == "soft":
                attachment, joins = op[1], op[2]
            else:
                soft = [x for x in range(cert.graph.n) if cert.valuation[x] == 0]
                if not soft:
                    log.append("random_soft: no soft node")
                    continue
                size = op[1]
                attachment = Graph.from_edges(size, [(rng.randrange(i), i) for i in range(1, size)])
                joins = [(0, rng.choice(soft))]
            cert = T.extend_soft(cert, attachment, joins)
            log.append(f"soft +{attachment.n}")
        elif name == "union":
            cert = T.union(cert, op[1])
            log.append(f"union +{op[1].graph.n}")
        else:
            raise ValueError(f"unknown step {name!r}")
    return Composition(cert, classify_family(cert.graph), tuple(log))


# ---------------------------------------------------------------------------
# specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenSpec:
    """Family tag, integer parameters and an optional seed; ``build`` runs the generator."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def build(self) -> Certificate:
        f, p = self.family.lower(), self.params
        if f == "p2-tree":
            return gen_p2_tree(p["p"], p.get("wiring", "path"), self.seed)
        if f == "soft-star":
            return gen_soft_star(p["k"])
        if f == "star-tree":
            return gen_star_tree(p["ks"], p.get("wiring", "chain"), self.seed)
        if f == "cycle":
            return gen_cycle(p["kind"], p["k"])
        if f == "b1":
            return gen_B1(p["p"], p["q"], p.get("lam"))
        if f == "b3":
            return gen_B3(p["chains"], p.get("lam"))
        if f == "diamond":
            return gen_diamond()
        if f == "cactus":
            return gen_cactus(p["cycles"], p.get("glue"), p.get("lam"))
        if f == "regular-bipartite":
            return gen_regular_bipartite(p["k"], p.get("l", 0))
        raise ValueError(f"unknown family {self.family!r}")


FAMILIES = ("p2-tree", "soft-star", "star-tree", "cycle", "b1", "b3", "diamond", "cactus",
            "regular-bipartite", "counterexample")
