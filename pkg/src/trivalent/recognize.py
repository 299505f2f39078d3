"""Structural recognizers for the characterized graph families.

Each recognizer runs the block-tree dynamic program of
:class:`~trivalent.solver.StructuralSolver` for the eigenvalues its family
admits (never more than {1, 2, 3, 4}) and labels every certificate with the
catalog clause that explains it. Leafless bicyclic graphs additionally get
their equal-link-free certificates predicted from the shape parameters and
built directly from the periodic patterns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import transform as T
from .graph import (
    BicyclicShape,
    ContractViolation,
    FamilyClassification,
    Family,
    Graph,
    bicyclic_shape,
    classify_family,
    is_cactus,
    is_connected,
)
from .search import full_spectrum
from .solver import StructuralSolver
from .valuation import Certificate, Valuation, canonical, verify

LAMBDA_CAP = (1, 2, 3, 4)


# ---------------------------------------------------------------------------
# clause catalog
# ---------------------------------------------------------------------------

def _params_ok(cls: T.ComponentClass, comp: T.Component) -> bool:
    k, p, n = cls.kind, cls.params, comp.graph.n
    if k == T.ISOLATED_ZEROS:
        return all(x == 0 for x in comp.valuation)
    if verify(comp.graph, comp.valuation) != cls.lam:
        return False
    if k == T.CHAIN_P2:
        return n == 2
    if k == T.SOFT_STAR:
        return n == 2 * p[0] + 1
    if k == T.CYCLE_4K:
        return n == 4 * p[0]
    if k == T.CYCLE_3K:
        return n == 3 * p[0]
    if k == T.EVEN_CYCLE:
        return n == 2 * p[0]
    if k == T.B1:
        a, b = p
        if cls.lam == 2:
            return a % 4 == b % 4 and a % 4 in (0, 2)
        return cls.lam == 3 and a % 3 == 0 and b % 3 == 0
    if k == T.B3:
        if cls.lam == 4:
            return p[1:] == (3, 3) and p[0] % 2 == 0 or p == (3, 3, 2)
        return cls.lam == 3 and all(x % 3 == 0 for x in p)
    if k == T.GLUED_CYCLES:
        if cls.lam == 2:
            return all(x % 2 == 0 for x in p)
        return cls.lam == 3 and all(x % 3 == 0 for x in p)
    return False


@dataclass(frozen=True)
class Clause:
    """One construction of the catalog: an eigenvalue plus the component
    classes that may appear after equal links are removed."""

    name: str
    lam: int
    allowed: frozenset[str]
    required: frozenset[str]
    extra: Callable[[T.ComponentClass], bool] | None = field(default=None, compare=False)

    def holds(self, cert: Certificate) -> bool:
        if cert.lam != self.lam:
            return False
        dec = T.decompose(cert)
        kinds = {c.cls.kind for c in dec}
        if not kinds <= self.allowed or not kinds & self.required:
            return False
        for comp in dec:
            if not _params_ok(comp.cls, comp):
                return False
            if self.extra is not None and comp.cls.kind in self.required and not self.extra(comp.cls):
                return False
        return True


def _clause(name, lam, allowed, required, extra=None) -> Clause:
    return Clause(name, lam, frozenset(allowed), frozenset(required), extra)


Z = T.ISOLATED_ZEROS
STARS = _clause("soft-centred stars joined by equal links", 1, {T.SOFT_STAR, Z}, {T.SOFT_STAR})
CHAINS = _clause("P2 chains joined by equal links", 2, {T.CHAIN_P2}, {T.CHAIN_P2})
EVEN_CYCLES = _clause("even cycles joined by equal links", 4, {T.EVEN_CYCLE}, {T.EVEN_CYCLE})
C4K = _clause("C4k cycles with P2 chains, equal links and soft nodes", 2,
              {T.CYCLE_4K, T.CHAIN_P2, Z}, {T.CYCLE_4K})
C3K = _clause("C3k cycles with equal links and soft nodes", 3, {T.CYCLE_3K, Z}, {T.CYCLE_3K})
B1_MOD4 = _clause("B1(p,q) with p = q = 0 or p = q = 2 (mod 4), soft joint", 2,
                  {T.B1, T.CYCLE_4K, T.CHAIN_P2, Z}, {T.B1})
B1_MOD3 = _clause("B1(p,q) with p = q = 0 (mod 3), soft joint", 3, {T.B1, T.CYCLE_3K, Z}, {T.B1})
B3_MOD3 = _clause("B3(p,q,r) with p = q = r = 0 (mod 3), hard ends", 3, {T.B3, T.CYCLE_3K, Z}, {T.B3},
                  lambda c: c.params != (3, 3, 2))
DIAMOND = _clause("diamond B3(3,2,3)", 4, {T.B3, Z}, {T.B3}, lambda c: c.params == (3, 3, 2))
B3_EVEN = _clause("B3(2j,3,3) with an alternating chain and two soft middles, j >= 2", 4,
                  {T.B3, Z}, {T.B3}, lambda c: c.params != (3, 3, 2))
GLUED_4 = _clause("even cycles glued at soft nodes", 2,
                  {T.GLUED_CYCLES, T.B1, T.CYCLE_4K, T.CHAIN_P2, Z}, {T.GLUED_CYCLES})
GLUED_3 = _clause("C3k cycles glued at soft nodes", 3,
                  {T.GLUED_CYCLES, T.B1, T.CYCLE_3K, Z}, {T.GLUED_CYCLES})

CATALOG: dict[Family, tuple[Clause, ...]] = {
    Family.TREE: (CHAINS, STARS),
    Family.UNICYCLIC: (CHAINS, STARS, C4K, C3K, EVEN_CYCLES),
    Family.BICYCLIC: (CHAINS, STARS, B1_MOD4, B1_MOD3, B3_MOD3, DIAMOND, B3_EVEN, C4K, C3K, EVEN_CYCLES),
    Family.CACTUS: (CHAINS, STARS, B1_MOD4, B1_MOD3, GLUED_4, GLUED_3, C4K, C3K, EVEN_CYCLES),
}

FAMILY_LAMBDAS: dict[Family, tuple[int, ...]] = {
    Family.TREE: (1, 2),
    Family.UNICYCLIC: LAMBDA_CAP,
    Family.BICYCLIC: LAMBDA_CAP,
    Family.CACTUS: LAMBDA_CAP,
}


def explain(cert: Certificate, family: Family) -> Clause | None:
    """First catalog clause of ``family`` whose hypotheses hold for ``cert``."""
    for clause in CATALOG[family]:
        if clause.holds(cert):
            return clause
    return None


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    lam: int
    certificate: Certificate
    trace: str | None

    @property
    def valence(self) -> str:
        return self.certificate.valence


@dataclass(frozen=True)
class FamilyReport:
    """Certificates of one graph, grouped by eigenvalue.

    ``counts`` holds the number of sign-canonical certificates per
    eigenvalue; ``found`` lists one representative per eigenvalue, or all of
    them when the report was built with ``enumerate_all``.
    """

    graph: Graph
    family: Family
    classification: FamilyClassification
    found: tuple[Finding, ...]
    counts: dict[int, int]
    exhaustive: bool = True
    enumerated: bool = False

    def keys(self) -> set[tuple[int, Valuation]]:
        return {(f.lam, canonical(f.certificate.valuation)) for f in self.found}

    def lambdas(self) -> list[int]:
        return sorted(lam for lam, c in self.counts.items() if c)

    def valences(self) -> dict[int, set[str]]:
        out: dict[int, set[str]] = {}
        for f in self.found:
            out.setdefault(f.lam, set()).add(f.valence)
        return out

    def __bool__(self) -> bool:
        return bool(self.found)


def _report(g: Graph, family: Family, enumerate_all: bool,
            preferred: dict[int, Valuation] | None = None) -> FamilyReport:
    solver = StructuralSolver(g)
    found = []
    counts = {}
    for lam in FAMILY_LAMBDAS[family]:
        total = solver.count(lam)
        counts[lam] = total
        if not total:
            continue
        if enumerate_all:
            rows = solver.solutions(lam)
        elif preferred and lam in preferred:
            rows = [preferred[lam]]
        else:
            rows = solver.solutions(lam, limit=1)
        for row in rows:
            cert = Certificate(g, row, lam)
            clause = explain(cert, family)
            found.append(Finding(lam, cert, clause.name if clause else None))
    return FamilyReport(g, family, classify_family(g), tuple(found), counts, True, enumerate_all)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ContractViolation(message)


def recognize_tree(g: Graph, enumerate_all: bool = False) -> FamilyReport:
    """Bivalent (lambda = 2) and trivalent (lambda = 1) certificates of a tree."""
    _require(g.n >= 1 and g.m == g.n - 1 and is_connected(g), "recognize_tree needs a tree")
    return _report(g, Family.TREE, enumerate_all)


def recognize_unicyclic(g: Graph, enumerate_all: bool = False) -> FamilyReport:
    _require(g.m == g.n and is_connected(g), "recognize_unicyclic needs a connected graph with m = n")
    return _report(g, Family.UNICYCLIC, enumerate_all)


def recognize_cactus(g: Graph, enumerate_all: bool = False) -> FamilyReport:
    _require(g.n >= 1 and is_connected(g) and is_cactus(g), "recognize_cactus needs a connected cactus")
    return _report(g, Family.CACTUS, enumerate_all)


# ---------------------------------------------------------------------------
# bicyclic arithmetic
# ---------------------------------------------------------------------------

def bicyclic_prediction(shape: BicyclicShape) -> dict[int, Clause]:
    """Eigenvalues with an equal-link-free certificate, read off the shape."""
    out: dict[int, Clause] = {}
    if shape.kind == "B1":
        p, q = shape.params
        if p % 4 == q % 4 and p % 4 in (0, 2):
            out[2] = B1_MOD4
        if p % 3 == 0 and q % 3 == 0:
            out[3] = B1_MOD3
    elif shape.kind == "B3":
        if shape.params == (3, 3, 2):
            out[4] = DIAMOND
        elif shape.params[1:] == (3, 3) and shape.params[0] % 2 == 0:
            out[4] = B3_EVEN
        if all(x % 3 == 0 for x in shape.params):
            out[3] = B3_MOD3
    return out


def _walk(g: Graph, start: int, first: int, stop: Sequence[int]) -> list[int]:
    """Vertices from ``first`` along degree-2 vertices until one of ``stop``."""
    path = []
    prev, cur = start, first
    while cur not in stop:
        path.append(cur)
        nxt = [x for x in g.adj[cur] if x != prev]
        prev, cur = cur, nxt[0]
    return path


def b1_pattern(g: Graph, lam: int) -> Valuation:
    u = next(v for v in range(g.n) if g.degree(v) == 4)
    vals = [0] * g.n
    done: set[int] = set()
    sign = 1
    for first in g.adj[u]:
        if first in done:
            continue
        cyc = _walk(g, u, first, [u])
        done.update(cyc)
        for i, x in enumerate(cyc, start=1):
            if lam == 2:
                vals[x] = 0 if i % 2 == 0 else (1 if (i // 2) % 2 == 0 else -1)
            else:
                vals[x] = (0, 1, -1)[i % 3]
        if lam == 2 and (len(cyc) + 1) % 4 == 2:
            # both ends of this cycle are +1 at the joint; the other cycle is negated
            for x in cyc:
                vals[x] *= sign
            sign = -sign
    return tuple(vals)


def b3_pattern(g: Graph, lam: int) -> Valuation:
    u, w = [v for v in range(g.n) if g.degree(v) == 3]
    vals = [0] * g.n
    if lam == 4:
        # hubs +1 / -1; single-vertex chains stay soft, the even chain alternates
        vals[u], vals[w] = 1, -1
        for first in g.adj[u]:
            chain = _walk(g, u, first, [w])
            if len(chain) > 1:
                for i, x in enumerate(chain, start=1):
                    vals[x] = -1 if i % 2 else 1
        return tuple(vals)
    vals[u], vals[w] = -1, 1
    for first in g.adj[u]:
        for i, x in enumerate(_walk(g, u, first, [w]), start=1):
            vals[x] = (-1, 0, 1)[i % 3]
    return tuple(vals)


def bicyclic_patterns(g: Graph) -> dict[int, tuple[Clause, Valuation]]:
    """Equal-link-free certificates of a leafless bicyclic graph, built from its shape."""
    shape = bicyclic_shape(g)
    out = {}
    for lam, clause in bicyclic_prediction(shape).items():
        vals = b1_pattern(g, lam) if shape.kind == "B1" else b3_pattern(g, lam)
        out[lam] = (clause, canonical(vals))
    return out


def recognize_bicyclic(g: Graph, enumerate_all: bool = False) -> FamilyReport:
    """Certificates of a connected graph with m = n + 1.

    For leafless inputs the shape arithmetic predicts and builds the
    equal-link-free certificates; the dynamic program must contain them.
    Certificates that use equal links or soft extensions come from the
    dynamic program.
    """
    _require(g.m == g.n + 1 and is_connected(g), "recognize_bicyclic needs a connected graph with m = n + 1")
    preferred = {}
    if bicyclic_shape(g).kind != "WithLeaves":
        solver = StructuralSolver(g)
        for lam, (clause, vals) in bicyclic_patterns(g).items():
            Certificate(g, vals, lam)
            if not solver.admits(lam, vals):
                raise AssertionError(f"dynamic program misses the {clause.name} pattern")
            preferred[lam] = vals
    return _report(g, Family.BICYCLIC, enumerate_all, preferred)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_RECOGNIZERS = (
    (Family.TREE, recognize_tree),
    (Family.UNICYCLIC, recognize_unicyclic),
    (Family.BICYCLIC, recognize_bicyclic),
    (Family.CACTUS, recognize_cactus),
)


def recognize(g: Graph, enumerate_all: bool = False) -> FamilyReport | None:
    """Report from the most specific recognizer that applies, or None."""
    kinds = classify_family(g).kinds
    for family, fn in _RECOGNIZERS:
        if family in kinds:
            return fn(g, enumerate_all)
    return None


def classify(g: Graph, enumerate_all: bool = False) -> FamilyReport:
    """Like :func:`recognize`, falling back to exhaustive search outside the families."""
    rep = recognize(g, enumerate_all)
    if rep is not None:
        return rep
    res = full_spectrum(g)
    counts: dict[int, int] = {}
    found = []
    for lam, certs in res.by_lambda().items():
        counts[lam] = len(certs)
        for c in certs if enumerate_all else certs[:1]:
            found.append(Finding(lam, c, "exhaustive search"))
    return FamilyReport(g, Family.GENERAL, classify_family(g), tuple(found), counts, True, enumerate_all)

