"""Polynomial structural solver used by the family recognizers."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import _dp
from .graph import ContractViolation, Graph
from .valuation import Valuation


class StructuralSolver:
    """Counts and lists the ternary eigenvectors of one connected graph.

    The block structure is computed once; each query is a block-tree dynamic
    program for a fixed eigenvalue. Non-cactus blocks are handled by
    conditioning on deleted edges, so cost grows by a factor 9 per deleted
    edge (``conditioned_edges``).
    """

    def __init__(self, g: Graph):
        if g.n == 0:
            raise ContractViolation("solver needs at least one vertex")
        self.graph = g
        status, *plan = _dp.prepare(g.n, g.bitmasks())
        if status != 0:
            raise ContractViolation("solver needs a connected graph")
        self._plan = tuple(plan)

    @property
    def conditioned_edges(self) -> list[tuple[int, int]]:
        cut = self._plan[5]
        return [(int(a), int(b)) for a, b in cut]

    def count(self, lam: int, domains: Sequence[int] | None = None) -> int:
        """Number of sign-canonical solutions for ``lam``.

        ``domains`` optionally restricts each vertex (3-bit masks, bit k for
        value k - 1); the restricted count is of raw, not sign-paired, solutions.
        """
        if domains is None:
            dom = np.full(self.graph.n, _dp.FULL, dtype=np.int64)
            return int(_dp.count_nontrivial(self.graph.n, *self._plan, lam, dom)) // 2
        dom = np.asarray(domains, dtype=np.int64)
        return int(_dp.count_nontrivial(self.graph.n, *self._plan, lam, dom))

    def solutions(self, lam: int, limit: int | None = None) -> list[Valuation]:
        rows = _dp.enumerate_solutions(self.graph.n, *self._plan, lam, -1 if limit is None else limit)
        return [tuple(int(x) for x in row) for row in rows]

    def admits(self, lam: int, values: Sequence[int]) -> bool:
        dom = np.array([1 << (int(x) + 1) for x in values], dtype=np.int64)
        return int(_dp.count_all(self.graph.n, *self._plan, lam, dom)) > 0
