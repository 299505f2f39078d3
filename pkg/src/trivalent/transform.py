"""Eigenpair-preserving surgery and equal-link decomposition.

Two operations never change the eigenvalue of a certificate: adding or
removing an edge between equal-valued vertices, and hanging new zero-valued
vertices on existing soft nodes. ``decompose`` runs the first one backwards
as far as it goes and names every equal-link-free piece that remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import (
    ContractViolation,
    Graph,
    bicyclic_shape,
    blocks,
    connected_components,
    is_cactus,
    is_connected,
)
from .valuation import Certificate, Valuation, format_valuation, valuation_equal_links


# ---------------------------------------------------------------------------
# surgery
# ---------------------------------------------------------------------------

def add_equal_link(cert: Certificate, i: int, j: int) -> Certificate:
    g, v = cert.graph, cert.valuation
    if not (0 <= i < g.n and 0 <= j < g.n) or i == j:
        raise ContractViolation(f"invalid vertex pair ({i}, {j})")
    if v[i] != v[j]:
        raise ContractViolation(f"vertices {i} and {j} carry different values {v[i]} and {v[j]}")
    if g.has_edge(i, j):
        raise ContractViolation(f"edge ({i}, {j}) already present")
    return Certificate(g.with_edge(i, j), v, cert.lam)


def remove_equal_link(cert: Certificate, i: int, j: int) -> Certificate:
    g, v = cert.graph, cert.valuation
    if not g.has_edge(i, j):
        raise ContractViolation(f"({i}, {j}) is not an edge")
    if v[i] != v[j]:
        raise ContractViolation(f"edge ({i}, {j}) joins different values {v[i]} and {v[j]}")
    return Certificate(g.without_edge(i, j), v, cert.lam)


def extend_soft(cert: Certificate, attachment: Graph, joins: Iterable[tuple[int, int]]) -> Certificate:
    """Append ``attachment`` as zero-valued vertices ``n..n+a-1``.

    Each join ``(a, s)`` links attachment vertex ``a`` to existing vertex
    ``s``, which must be soft.
    """
    g, v = cert.graph, cert.valuation
    edges = list(g.edges) + [(u + g.n, w + g.n) for u, w in attachment.edges]
    for a, s in joins:
        if not 0 <= a < attachment.n:
            raise ContractViolation(f"attachment vertex {a} out of range")
        if not 0 <= s < g.n:
            raise ContractViolation(f"vertex {s} out of range")
        if v[s] != 0:
            raise ContractViolation(f"join endpoint {s} is not a soft node (value {v[s]})")
        edges.append((a + g.n, s))
    return Certificate(Graph.from_edges(g.n + attachment.n, edges), v + (0,) * attachment.n, cert.lam)


def union(a: Certificate, b: Certificate) -> Certificate:
    """Disjoint union of two certificates for the same eigenvalue (b shifted by a.n)."""
    if a.lam != b.lam:
        raise ContractViolation(f"eigenvalues differ: {a.lam} and {b.lam}")
    return Certificate(a.graph.disjoint_union(b.graph), a.valuation + b.valuation, a.lam)


# ---------------------------------------------------------------------------
# component catalog
# ---------------------------------------------------------------------------

ISOLATED_ZEROS = "IsolatedZeros"
CHAIN_P2 = "ChainP2"
SOFT_STAR = "SoftStar"
CYCLE_3K = "Cycle3k"
CYCLE_4K = "Cycle4k"
EVEN_CYCLE = "EvenCycle"
B1 = "B1"
B3 = "B3"
GENERALIZED_THETA = "GeneralizedTheta"
GLUED_CYCLES = "GluedCycles"
OTHER = "Other"


@dataclass(frozen=True)
class ComponentClass:
    """Catalog entry of an equal-link-free component.

    ``params`` follow the kind: SoftStar (k,), cycles (k,) with length
    4k / 3k / 2k, B1 (p, q), B3 and GeneralizedTheta the chain vertex
    counts (endpoints included, descending), GluedCycles the cycle lengths
    (descending). ``lam`` is None only for IsolatedZeros.
    """

    kind: str
    params: tuple[int, ...] = ()
    lam: int | None = None

    def __str__(self) -> str:
        inner = ",".join(map(str, self.params))
        return f"{self.kind}({inner})" if self.params else self.kind


@dataclass(frozen=True)
class Component:
    graph: Graph
    valuation: Valuation
    cls: ComponentClass
    vertices: tuple[int, ...]

    def __iter__(self) -> Iterator:
        return iter((self.graph, self.valuation, self.cls))


@dataclass(frozen=True)
class Decomposition:
    source: Certificate
    components: tuple[Component, ...]
    links: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def classes(self) -> list[ComponentClass]:
        return [c.cls for c in self.components]


def _star_center(g: Graph) -> int | None:
    if g.n < 3 or g.m != g.n - 1:
        return None
    hubs = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    return hubs[0] if len(hubs) == 1 else None


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(d == 2 for d in g.degrees) and is_connected(g)


def _theta_chains(g: Graph) -> tuple[int, ...] | None:
    """Chain vertex counts if g is k >= 3 internally disjoint paths between two hubs."""
    hubs = [v for v in range(g.n) if g.degree(v) != 2]
    if len(hubs) != 2 or not is_connected(g):
        return None
    u, w = hubs
    k = g.degree(u)
    if k < 3 or g.degree(w) != k:
        return None
    chains = []
    for start in g.adj[u]:
        prev, cur, length = u, start, 2
        while cur != w:
            nxt = [x for x in g.adj[cur] if x != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        chains.append(length)
    if sum(chains) - 2 * (k - 1) != g.n:
        return None
    return tuple(sorted(chains, reverse=True))


def _glued_cycles(g: Graph, values: Sequence[int]) -> tuple[int, ...] | None:
    """Cycle lengths if g is a cactus of >= 2 cycles glued only at soft vertices."""
    if not is_connected(g) or not is_cactus(g):
        return None
    bl = blocks(g)
    if len(bl) < 2 or any(len(es) < 3 for _, es in bl):
        return None
    seen: dict[int, int] = {}
    for verts, _ in bl:
        for x in verts:
            seen[x] = seen.get(x, 0) + 1
    if any(cnt > 1 and values[x] != 0 for x, cnt in seen.items()):
        return None
    return tuple(sorted((len(vs) for vs, _ in bl), reverse=True))


def classify_component(g: Graph, values: Sequence[int], lam: int) -> ComponentClass:
    """Catalog class of one connected, equal-link-free piece.

    First match wins: IsolatedZeros, ChainP2, SoftStar, cycles, B1/B3,
    GeneralizedTheta, GluedCycles, Other.
    """
    if all(x == 0 for x in values):
        return ComponentClass(ISOLATED_ZEROS)
    if g.n == 2 and g.m == 1 and lam == 2:
        return ComponentClass(CHAIN_P2, (), 2)
    center = _star_center(g)
    if center is not None and lam == 1 and values[center] == 0:
        return ComponentClass(SOFT_STAR, ((g.n - 1) // 2,), 1)
    if _is_cycle(g):
        if lam == 2 and g.n % 4 == 0 and 0 in values:
            return ComponentClass(CYCLE_4K, (g.n // 4,), 2)
        if lam == 3 and g.n % 3 == 0:
            return ComponentClass(CYCLE_3K, (g.n // 3,), 3)
        if lam == 4 and g.n % 2 == 0 and 0 not in values:
            return ComponentClass(EVEN_CYCLE, (g.n // 2,), 4)
        return ComponentClass(OTHER, (g.n,), lam)
    if g.m == g.n + 1 and is_connected(g):
        shape = bicyclic_shape(g)
        if shape.kind == "B1":
            return ComponentClass(B1, shape.params, lam)
        if shape.kind == "B3":
            return ComponentClass(B3, shape.params, lam)
    chains = _theta_chains(g)
    if chains is not None:
        return ComponentClass(GENERALIZED_THETA, chains, lam)
    lengths = _glued_cycles(g, values)
    if lengths is not None and lam in (2, 3):
        return ComponentClass(GLUED_CYCLES, lengths, lam)
    return ComponentClass(OTHER, (g.n, g.m), lam)


def decompose(cert: Certificate) -> Decomposition:
    """Delete equal links and classify each connected piece.

    A 0-0 edge is kept when both ends see only zeros, so an all-zero region
    (such as a soft cycle hung on the graph) stays one IsolatedZeros piece.
    """
    g, v = cert.graph, cert.valuation
    quiet = [v[x] == 0 and all(v[y] == 0 for y in g.adj[x]) for x in range(g.n)]
    links = tuple(e for e in valuation_equal_links(g, v) if not (quiet[e[0]] and quiet[e[1]]))
    bare = Graph.from_edges(cert.graph.n, (e for e in cert.graph.edges if e not in set(links)))
    comps = []
    for verts in connected_components(bare):
        sub, ids = bare.subgraph(sorted(verts))
        vals = tuple(cert.valuation[x] for x in ids)
        comps.append(Component(sub, vals, classify_component(sub, vals, cert.lam), ids))
    comps.sort(key=lambda c: c.vertices[0])
    return Decomposition(cert, tuple(comps), links)


def reassemble(dec: Decomposition) -> Graph:
    """Inverse of :func:`decompose`: put components back and restore the links."""
    n = sum(c.graph.n for c in dec.components)
    edges = [(c.vertices[a], c.vertices[b]) for c in dec.components for a, b in c.graph.edges]
    return Graph.from_edges(n, edges + list(dec.links))


def describe(dec: Decomposition) -> list[str]:
    """One line per component: class, size, eigenvalue."""
    out = []
    for c in dec.components:
        lam = "any" if c.cls.lam is None else str(c.cls.lam)
        out.append(f"{c.cls}\tn={c.graph.n}\tm={c.graph.m}\tlambda={lam}\t{format_valuation(c.valuation)}")
    return out
