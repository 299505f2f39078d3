"""Ternary valuations and exact Laplacian eigenpair checks.

A valuation is a tuple of ints in {-1, 0, 1}, one per vertex. The Laplacian
is never formed: ``L v = lam v`` is checked vertex by vertex as
``d_i v_i - sum_{j ~ i} v_j == lam v_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import ContractViolation, Graph, parse_graph6, to_graph6

Valuation = tuple[int, ...]

_TO_CHAR = {1: "+", 0: "0", -1: "-"}
_FROM_CHAR = {"+": 1, "0": 0, "-": -1}


def parse_valuation(text: str) -> Valuation:
    """``"+0-0"`` -> ``(1, 0, -1, 0)``."""
    try:
        return tuple(_FROM_CHAR[c] for c in text.strip())
    except KeyError as exc:
        raise ValueError(f"valuation characters must be '+', '0' or '-': {exc}") from None


def format_valuation(values: Sequence[int]) -> str:
    return "".join(_TO_CHAR[int(x)] for x in values)


def canonical(values: Sequence[int]) -> Valuation:
    """Flip the sign so that the lowest-indexed nonzero entry is +1."""
    for x in values:
        if x:
            return tuple(values) if x > 0 else tuple(-y for y in values)
    return tuple(values)


def _check_length(g: Graph, values: Sequence[int]) -> None:
    if len(values) != g.n:
        raise ContractViolation(f"valuation has {len(values)} entries for a graph of order {g.n}")


def verify(g: Graph, values: Sequence[int]) -> int | None:
    """The eigenvalue certified by ``values`` on ``g``, or None.

    Returns lam only if every entry is ternary, some entry is nonzero, and
    ``L v = lam v`` holds exactly with an integer lam >= 1. lam = 0 is
    rejected: on a connected graph it only arises from constant vectors.
    """
    _check_length(g, values)
    if any(x not in (-1, 0, 1) for x in values):
        return None
    lam = None
    for i in range(g.n):
        if values[i]:
            s = sum(values[j] for j in g.adj[i])
            lam = g.degree(i) - s * values[i]
            break
    if lam is None or lam < 1:
        return None
    for i in range(g.n):
        s = sum(values[j] for j in g.adj[i])
        if g.degree(i) * values[i] - s != lam * values[i]:
            return None
    return lam


def hard_degree(g: Graph, values: Sequence[int], j: int) -> int:
    _check_length(g, values)
    if not 0 <= j < g.n:
        raise ContractViolation(f"vertex {j} out of range")
    return sum(1 for k in g.adj[j] if values[k])


def soft_nodes(g: Graph, values: Sequence[int]) -> frozenset[int]:
    _check_length(g, values)
    return frozenset(j for j in range(g.n) if values[j] == 0)


def valuation_equal_links(g: Graph, values: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i, j in g.edges if values[i] == values[j])


@dataclass(frozen=True)
class Certificate:
    """A graph, a ternary valuation and the integer eigenvalue it certifies.

    Construction re-verifies the identity, so every instance is valid.
    """

    graph: Graph
    valuation: Valuation
    lam: int

    def __post_init__(self):
        values = tuple(int(x) for x in self.valuation)
        object.__setattr__(self, "valuation", values)
        got = verify(self.graph, values)
        if got != self.lam:
            raise ContractViolation(
                f"{format_valuation(values)} is not an eigenvector for lambda={self.lam} (verify gave {got})"
            )

    @classmethod
    def of(cls, g: Graph, values: Sequence[int]) -> Certificate:
        lam = verify(g, values)
        if lam is None:
            raise ContractViolation(f"{format_valuation(values)} is not a ternary eigenvector")
        return cls(g, tuple(values), lam)

    @property
    def bivalent(self) -> bool:
        return all(self.valuation)

    @property
    def valence(self) -> str:
        return "bivalent" if self.bivalent else "trivalent"

    def canonical(self) -> Certificate:
        return Certificate(self.graph, canonical(self.valuation), self.lam)

    def key(self) -> tuple[int, Valuation]:
        return (self.lam, canonical(self.valuation))

    def to_record(self) -> dict:
        return {"graph": to_graph6(self.graph), "valuation": format_valuation(self.valuation),
                "lambda": self.lam}

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    @classmethod
    def from_record(cls, rec: dict) -> Certificate:
        return cls(parse_graph6(rec["graph"]), parse_valuation(rec["valuation"]), int(rec["lambda"]))

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_record(json.loads(text))

    def __str__(self) -> str:
        return f"{format_valuation(self.valuation)} lambda={self.lam}"


def equal_links(cert: Certificate) -> tuple[tuple[int, int], ...]:
    """Edges whose endpoints carry the same value."""
    return valuation_equal_links(cert.graph, cert.valuation)


@dataclass(frozen=True)
class LocalCheck:
    lam: int
    passed: tuple[bool, ...]

    @property
    def all_pass(self) -> bool:
        return all(self.passed)

    def failures(self) -> list[int]:
        return [i for i, ok in enumerate(self.passed) if not ok]


def trivalent_local_check(g: Graph, values: Sequence[int], lam: int) -> LocalCheck:
    """Per-vertex test for equal-link-free valuations.

    A nonzero vertex passes iff lam = degree + hard degree; a soft vertex
    passes iff it has as many +1 neighbors as -1 neighbors.
    """
    _check_length(g, values)
    links = valuation_equal_links(g, values)
    if links:
        raise ContractViolation(f"valuation has equal links {list(links)}")
    passed = []
    for j in range(g.n):
        if values[j]:
            passed.append(lam == g.degree(j) + hard_degree(g, values, j))
        else:
            passed.append(sum(values[k] for k in g.adj[j]) == 0)
    return LocalCheck(lam, tuple(passed))
