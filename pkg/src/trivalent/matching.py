"""Matchings, cyclomatic arithmetic and Hamiltonicity for regular bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import ContractViolation, Graph, bipartition as two_coloring, is_connected

Edge = tuple[int, int]


def _check_coloring(g: Graph, side: Sequence[int]) -> None:
    if len(side) != g.n or any(s not in (0, 1) for s in side):
        raise ContractViolation("bipartition must give side 0 or 1 for every vertex")
    for u, v in g.edges:
        if side[u] == side[v]:
            raise ContractViolation(f"edge ({u}, {v}) lies inside one side of the bipartition")


def max_bipartite_matching(g: Graph, side: Sequence[int] | None = None) -> list[Edge]:
    """Maximum matching by repeated augmenting-path search (Kuhn).

    ``side`` is a 0/1 coloring; it is computed when omitted.
    """
    if side is None:
        side = two_coloring(g)
        if side is None:
            raise ContractViolation("graph is not bipartite")
    _check_coloring(g, side)
    mate = [-1] * g.n
    for root in range(g.n):
        if side[root] != 0 or mate[root] >= 0:
            continue
        # iterative DFS over alternating paths from a free left vertex
        seen = set()
        stack = [(root, iter(g.adj[root]))]
        via = {}
        found = -1
        while stack and found < 0:
            x, it = stack[-1]
            for y in it:
                if y in seen:
                    continue
                seen.add(y)
                via[y] = x
                if mate[y] < 0:
                    found = y
                    break
                stack.append((mate[y], iter(g.adj[mate[y]])))
                break
            else:
                stack.pop()
        y = found
        while y >= 0:
            x = via[y]
            nxt = mate[x]
            mate[x], mate[y] = y, x
            y = nxt
    return sorted((min(u, v), max(u, v)) for u, v in enumerate(mate) if v > u)


@dataclass(frozen=True)
class MatchingPartition:
    graph: Graph
    matchings: tuple[tuple[Edge, ...], ...]

    def __len__(self) -> int:
        return len(self.matchings)

    def violations(self) -> list[str]:
        """Broken invariants; empty when every matching is perfect and they tile E."""
        out = []
        seen: set[Edge] = set()
        for i, m in enumerate(self.matchings):
            cover = [0] * self.graph.n
            for u, v in m:
                cover[u] += 1
                cover[v] += 1
                if not self.graph.has_edge(u, v):
                    out.append(f"matching {i} uses non-edge ({u}, {v})")
            if any(c != 1 for c in cover):
                out.append(f"matching {i} is not perfect")
            if seen & set(m):
                out.append(f"matching {i} overlaps an earlier one")
            seen |= set(m)
        if seen != set(self.graph.edges):
            out.append("matchings do not cover every edge")
        return out

    def cycle_cover(self, i: int, j: int) -> bool:
        """Whether matchings i and j together give every vertex degree 2."""
        deg = [0] * self.graph.n
        for u, v in self.matchings[i] + self.matchings[j]:
            deg[u] += 1
            deg[v] += 1
        return all(d == 2 for d in deg)


def perfect_matching_partition(g: Graph) -> MatchingPartition:
    """Split the edges of a d-regular bipartite graph into d perfect matchings."""
    degs = set(g.degrees)
    if len(degs) > 1:
        raise ContractViolation(f"graph is not regular (degrees {sorted(degs)})")
    side = two_coloring(g)
    if side is None:
        raise ContractViolation("graph is not bipartite")
    d = degs.pop() if degs else 0
    rest = g
    out = []
    for _ in range(d):
        m = max_bipartite_matching(rest, side)
        if 2 * len(m) != g.n:
            raise AssertionError("regular bipartite graph without a perfect matching")
        out.append(tuple(m))
        taken = set(m)
        rest = Graph.from_edges(g.n, (e for e in rest.edges if e not in taken))
    return MatchingPartition(g, tuple(out))


# ---------------------------------------------------------------------------
# cyclomatic arithmetic
# ---------------------------------------------------------------------------

def cyclomatic_check(n: int, d: int) -> int:
    """Cyclomatic number (n/2)(d - 2) + 1 of a connected d-regular bipartite graph of order n."""
    if n % 2:
        raise ContractViolation(f"regular bipartite graphs have even order, got n={n}")
    if d < 0:
        raise ContractViolation("degree must be nonnegative")
    return n // 2 * (d - 2) + 1


def achievable_c(c: int, bound: int = 200) -> tuple[int, int] | None:
    """Smallest (n, d) with a connected d-regular bipartite graph of cyclomatic number c.

    Searches even n <= bound and 2 <= d <= n/2; the witness is built with
    :func:`~trivalent.generate.gen_regular_bipartite` and re-counted.
    """
    from .generate import gen_regular_bipartite

    for n in range(4, bound + 1, 2):
        for d in range(2, n // 2 + 1):
            if cyclomatic_check(n, d) == c:
                g = gen_regular_bipartite(n // 2, d - 2).graph
                if is_connected(g) and g.m - g.n + 1 == c:
                    return n, d
    return None


def achievable_table(cmax: int = 100, bound: int = 200) -> list[tuple[int, tuple[int, int] | None]]:
    return [(c, achievable_c(c, bound)) for c in range(1, cmax + 1)]


# ---------------------------------------------------------------------------
# Hamiltonicity
# ---------------------------------------------------------------------------

HAMILTON_BOUND = 24


class HamiltonBoundError(ValueError):
    pass


def hamiltonian_cycle(g: Graph, bound: int = HAMILTON_BOUND) -> list[int] | None:
    """A Hamiltonian cycle as a vertex list, or None.

    Depth-first path extension from vertex 0 with two prunings: every
    unvisited vertex keeps two usable neighbors, and the unvisited vertices
    stay connected to the path end.
    """
    n = g.n
    if n > bound:
        raise HamiltonBoundError(f"Hamiltonicity search limited to n <= {bound}, got n = {n}")
    if n < 3 or min(g.degrees) < 2 or not is_connected(g):
        return None
    nb = [0] * n
    for u in range(n):
        for w in g.adj[u]:
            nb[u] |= 1 << w
    full = (1 << n) - 1

    def viable(visited: int, end: int) -> bool:
        free = full & ~visited
        usable = free | (1 << end) | 1
        x = free
        while x:
            low = x & -x
            v = low.bit_length() - 1
            if bin(nb[v] & usable).count("1") < 2:
                return False
            x ^= low
        # free vertices must all be reachable from end through free vertices
        reach = nb[end] & free
        frontier = reach
        while frontier:
            low = frontier & -frontier
            v = low.bit_length() - 1
            new = nb[v] & free & ~reach
            reach |= new
            frontier = (frontier ^ low) | new
        return reach == free

    path = [0]
    visited = 1
    stack = [iter(sorted(g.adj[0]))]
    while stack:
        end = path[-1]
        if len(path) == n:
            if nb[end] & 1:
                return path[:]
            stack.pop()
            visited &= ~(1 << path.pop())
            continue
        advanced = False
        for w in stack[-1]:
            if visited >> w & 1:
                continue
            visited |= 1 << w
            path.append(w)
            if len(path) == n or viable(visited, w):
                stack.append(iter(sorted(g.adj[w])))
                advanced = True
                break
            path.pop()
            visited &= ~(1 << w)
        if not advanced:
            stack.pop()
            if len(path) > 1:
                visited &= ~(1 << path.pop())
            else:
                break
    return None


def is_hamiltonian(g: Graph, bound: int = HAMILTON_BOUND) -> bool:
    return hamiltonian_cycle(g, bound) is not None
