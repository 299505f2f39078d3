"""Simple undirected graphs on dense vertex ids, plus ingestion and structure.

Vertices are ``0..n-1``. A :class:`Graph` is immutable; every operation here
is a pure function of its arguments.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Malformed textual graph input.

    ``offset`` is a byte offset (graph6) or a 1-based line number (edge list).
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at {offset})"
        super().__init__(message)
        self.offset = offset


class ContractViolation(ValueError):
    """An operation was called outside its precondition."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from n")
        for i, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise ValueError(f"neighbors of {i} must be sorted and distinct")
            for j in row:
                if j == i:
                    raise ValueError(f"self-loop at {i}")
                if not 0 <= j < self.n or i not in self.adj[j]:
                    raise ValueError(f"asymmetric adjacency at {i}-{j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.n) for j in self.adj[i] if i < j)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def bitmasks(self) -> np.ndarray:
        """Adjacency as one int64 bitmask per vertex (requires n <= 62)."""
        if self.n > 62:
            raise ContractViolation(f"bitmask kernels support n <= 62, got {self.n}")
        out = np.zeros(self.n, dtype=np.int64)
        for i, row in enumerate(self.adj):
            mask = 0
            for j in row:
                mask |= 1 << j
            out[i] = mask
        return out

    def with_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, self.edges + ((u, v),))

    def without_edge(self, u: int, v: int) -> Graph:
        e = (min(u, v), max(u, v))
        return Graph.from_edges(self.n, (x for x in self.edges if x != e))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def subgraph(self, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph, renumbered in the given order; returns (graph, original ids)."""
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(verts), edges), verts

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph.from_edges(
            self.n + other.n,
            self.edges + tuple((u + shift, v + shift) for u, v in other.edges),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode the order header; returns (n, bytes consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte order header", len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated 4-byte order header", len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} outside 63..126", pos)
    n, start = _g6_size(data)
    nbits = n * (n - 1) // 2
    body = data[start:]
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"expected {need} data bytes for n={n}, got {len(body)}", start + min(len(body), need)
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise GraphFormatError("nonzero padding bits", start + len(body) - 1)
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if i in g.adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


# ---------------------------------------------------------------------------
# edge lists and DOT
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with 0-based ids.

    A line ``n N`` fixes the vertex count (needed for isolated vertices);
    otherwise n is one more than the largest id. ``#`` starts a comment.
    """
    declared = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError("bad vertex-count line", lineno)
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line!r}", lineno) from None
        edges.append((u, v, lineno))
    n = declared if declared is not None else 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    seen = set()
    for u, v, lineno in edges:
        if u < 0 or v < 0 or u >= n or v >= n:
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
    return Graph.from_edges(n, ((u, v) for u, v, _ in edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_labeled_edges(pairs: Iterable[tuple[object, object]]) -> tuple[Graph, tuple]:
    """Remap arbitrary hashable labels to 0..n-1 in first-seen order.

    Returns the graph and the label of each vertex id.
    """
    labels: dict = {}
    edges = []
    for a, b in pairs:
        for x in (a, b):
            if x not in labels:
                labels[x] = len(labels)
        edges.append((labels[a], labels[b]))
    return Graph.from_edges(len(labels), edges), tuple(labels)


_DOT_COLORS = {1: "#d62728", 0: "#ffffff", -1: "#1f77b4"}
_SIGN = {1: "+", 0: "0", -1: "-"}


def to_dot(g: Graph, valuation: Sequence[int] | None = None, name: str = "G") -> str:
    """Graphviz text; with a valuation, +1/0/-1 vertices get distinct fill colors."""
    if valuation is not None and len(valuation) != g.n:
        raise ContractViolation("valuation length differs from graph order")
    out = [f"graph {name} {{"]
    if g.n:
        out.append("  node [shape=circle, style=filled];")
    for v in range(g.n):
        if valuation is None:
            out.append(f'  {v} [fillcolor="#ffffff"];')
        else:
            x = valuation[v]
            out.append(f'  {v} [fillcolor="{_DOT_COLORS[x]}", label="{v}{_SIGN[x]}"];')
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def cyclomatic_number(g: Graph) -> int:
    return g.m - g.n + len(connected_components(g))


def bipartition(g: Graph) -> list[int] | None:
    """A 2-coloring (0/1 per vertex), or None if the graph has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def blocks(g: Graph) -> list[tuple[frozenset[int], tuple[tuple[int, int], ...]]]:
    """Biconnected components as (vertex set, edges); isolated vertices are skipped."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    out = []
    for root in range(g.n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append((min(e), max(e)))
                    if e == (parent, u):
                        break
                verts = frozenset(x for e in comp for x in e)
                out.append((verts, tuple(sorted(comp))))
    return out


def is_cactus(g: Graph) -> bool:
    """Connected, and every block is a single edge or a cycle."""
    if not is_connected(g):
        return False
    return all(len(e) == 1 or len(e) == len(v) for v, e in blocks(g))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def two_core(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Strip leaves repeatedly; returns the induced core and its original ids."""
    deg = list(g.degrees)
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return g.subgraph([v for v in range(g.n) if alive[v]])


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

class Family(enum.Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    BICYCLIC = "bicyclic"
    CACTUS = "cactus"
    REGULAR_BIPARTITE = "regular-bipartite"
    GENERAL = "general"


@dataclass(frozen=True)
class BicyclicShape:
    """Leafless bicyclic shape.

    ``B1``: two cycles of lengths (p, q) sharing one vertex, n = p + q - 1.
    ``B2``: cycles C_p and C_q joined by a path with r interior vertices, n = p + q + r.
    ``B3``: three chains with the given vertex counts (endpoints included)
    sharing both endpoints, n = sum - 4; counts are listed in descending order.
    ``WithLeaves``: the graph has a leaf; ``core`` holds the shape of its 2-core.
    """

    kind: str
    params: tuple[int, ...] = ()
    core: BicyclicShape | None = None

    def __str__(self) -> str:
        if self.kind == "WithLeaves":
            return f"WithLeaves[{self.core}]"
        return f"{self.kind}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class FamilyClassification:
    kinds: frozenset[Family]
    cyclomatic: int
    connected: bool
    shape: BicyclicShape | None = None
    regular_degree: int | None = None
    components: int = field(default=1)

    def __contains__(self, kind: Family) -> bool:
        return kind in self.kinds


def classify_family(g: Graph) -> FamilyClassification:
    comps = connected_components(g)
    connected = len(comps) == 1
    c = g.m - g.n + len(comps)
    kinds = set()
    shape = None
    if connected:
        if g.m == g.n - 1:
            kinds.add(Family.TREE)
        elif g.m == g.n:
            kinds.add(Family.UNICYCLIC)
        elif g.m == g.n + 1:
            kinds.add(Family.BICYCLIC)
            shape = bicyclic_shape(g)
        if is_cactus(g):
            kinds.add(Family.CACTUS)
    reg = None
    if g.n and is_regular(g) and is_bipartite(g):
        reg = g.degrees[0]
        kinds.add(Family.REGULAR_BIPARTITE)
    if not connected or not kinds:
        kinds.add(Family.GENERAL)
    return FamilyClassification(frozenset(kinds), c, connected, shape, reg, len(comps))


def _leafless_shape(g: Graph) -> BicyclicShape:
    deg = g.degrees
    hubs = [v for v in range(g.n) if deg[v] > 2]
    if len(hubs) == 1 and deg[hubs[0]] == 4:
        u = hubs[0]
        rest, ids = g.subgraph([v for v in range(g.n) if v != u])
        p, q = sorted(len(c) + 1 for c in connected_components(rest))
        return BicyclicShape("B1", (p, q))
    if len(hubs) != 2 or any(deg[h] != 3 for h in hubs):
        raise ContractViolation(f"unexpected leafless bicyclic degree pattern {sorted(deg)}")
    bl = blocks(g)
    if len(bl) == 1:
        u, v = hubs
        rest, _ = g.subgraph([x for x in range(g.n) if x not in (u, v)])
        chains = [len(c) + 2 for c in connected_components(rest)]
        if g.has_edge(u, v):
            chains.append(2)
        return BicyclicShape("B3", tuple(sorted(chains, reverse=True)))
    cycles = sorted(len(vs) for vs, es in bl if len(es) > 1)
    p, q = cycles
    return BicyclicShape("B2", (p, q, g.n - p - q))


def bicyclic_shape(g: Graph) -> BicyclicShape:
    if not is_connected(g) or g.m != g.n + 1:
        raise ContractViolation("bicyclic_shape needs a connected graph with m = n + 1")
    if leaves(g):
        core, _ = two_core(g)
        return BicyclicShape("WithLeaves", (), _leafless_shape(core))
    return _leafless_shape(g)
