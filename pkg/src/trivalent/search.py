"""Exhaustive discovery of bivalent and trivalent eigenvectors.

``brute_force`` is the ground-truth oracle: it tries every ternary vector.
``csp_search`` / ``full_spectrum`` find the same set by constraint
propagation and are checked against it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels
from .graph import Graph
from .valuation import Certificate, Valuation

BRUTE_FORCE_BOUND = 16


class SearchBoundError(ValueError):
    """The requested search exceeds its configured size bound."""


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    certificates: tuple[Certificate, ...]
    stats: dict = field(default_factory=dict, compare=False)

    def keys(self) -> set[tuple[int, Valuation]]:
        return {c.key() for c in self.certificates}

    def by_lambda(self) -> dict[int, list[Certificate]]:
        groups: dict[int, list[Certificate]] = defaultdict(list)
        for c in self.certificates:
            groups[c.lam].append(c)
        return dict(sorted(groups.items()))

    def lambdas(self) -> list[int]:
        return sorted({c.lam for c in self.certificates})

    def __len__(self) -> int:
        return len(self.certificates)

    def __iter__(self):
        return iter(self.certificates)


def _result(g: Graph, pairs: Iterable[tuple[int, Valuation]], stats: dict) -> SearchResult:
    uniq = sorted(set(pairs), key=lambda p: (p[0], tuple(-x for x in p[1])))
    certs = tuple(Certificate(g, vals, lam) for lam, vals in uniq)
    return SearchResult(g, certs, stats)


def brute_force(g: Graph, bound: int = BRUTE_FORCE_BOUND) -> SearchResult:
    """Every canonical ternary eigenvector of ``g`` (lam >= 1), by enumeration."""
    if g.n > bound:
        raise SearchBoundError(f"brute force limited to n <= {bound}, got n = {g.n}")
    lams, rows = _kernels.brute_force_kernel(g.n, g.bitmasks())
    pairs = [(int(lam), tuple(int(x) for x in row)) for lam, row in zip(lams, rows)]
    return _result(g, pairs, {"vectors": (3 ** g.n - 1) // 2})


def csp_search(g: Graph, lam: int, prune: bool = True) -> SearchResult:
    """Every canonical ternary eigenvector for one eigenvalue ``lam``."""
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    rows, nodes, prunes = _kernels.csp_kernel(g.n, g.bitmasks(), lam, prune)
    pairs = [(lam, tuple(int(x) for x in row)) for row in rows]
    return _result(g, pairs, {"nodes": int(nodes), "prunes": int(prunes)})


def full_spectrum(g: Graph, prune: bool = True) -> SearchResult:
    """Union of :func:`csp_search` over lam = 1..n (the Laplacian spectral radius is at most n)."""
    pairs = []
    stats = {"nodes": 0, "prunes": 0}
    for lam in range(1, g.n + 1):
        res = csp_search(g, lam, prune)
        pairs.extend(c.key() for c in res)
        stats["nodes"] += res.stats["nodes"]
        stats["prunes"] += res.stats["prunes"]
    return _result(g, pairs, stats)


def codes(result: SearchResult) -> np.ndarray:
    """Sorted int64 codes ``lam * 3**n + base3(valuation + 1)`` for fast set comparison."""
    n = result.graph.n
    weights = 3 ** np.arange(n, dtype=np.int64)
    out = [c.lam * 3 ** n + int(np.dot(np.array(c.valuation) + 1, weights)) for c in result]
    return np.array(sorted(out), dtype=np.int64)
