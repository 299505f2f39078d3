"""Census over graph collections.

Two layers live here. ``census`` walks a stream of graphs and produces one
:class:`CensusRow` per graph (optionally cross-checking against the oracle
and the family recognizers). The ``sweep_*`` functions drive the compiled
exhaustive sweeps used to check the search engine and the recognizers on
every labeled graph of a given size.
"""

from __future__ import annotations

import itertools
import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

import numpy as np

from . import _sweep
from .graph import (
    Family,
    Graph,
    GraphFormatError,
    classify_family,
    is_connected,
    leaves,
    parse_graph6,
    to_graph6,
)
from .recognize import recognize
from .search import brute_force, full_spectrum
from .valuation import Certificate, equal_links, format_valuation

log = logging.getLogger(__name__)

FAMILY_KINDS = frozenset({Family.TREE, Family.UNICYCLIC, Family.BICYCLIC, Family.CACTUS})
CLAIMED_LAMBDAS = frozenset({1, 2, 3, 4})
CONNECTED_BOUND = 7
TREE_BOUND = 9


class CensusViolation(AssertionError):
    """A census-wide claim failed on a concrete graph."""

    def __init__(self, graph: Graph, detail: str):
        self.graph = graph
        self.detail = detail
        super().__init__(f"{to_graph6(graph)}: {detail}")

    def dump(self) -> str:
        return json.dumps({"graph6": to_graph6(self.graph), "n": self.graph.n,
                           "edges": [list(e) for e in self.graph.edges], "violation": self.detail})


@dataclass(frozen=True)
class CensusRow:
    graph6: str
    kinds: tuple[str, ...]
    spectrum: tuple[tuple[int, str, int], ...]  # (lambda, valence, count)
    seconds: float = field(default=0.0, compare=False)
    certificates: tuple[tuple[int, str], ...] = ()

    CSV_HEADER = ("graph6", "kinds", "lambdas", "spectrum", "seconds")

    def lambdas(self) -> list[int]:
        return sorted({lam for lam, _, _ in self.spectrum})

    def csv_fields(self, timing: bool = False) -> list[str]:
        spec = ";".join(f"{lam}:{val}:{c}" for lam, val, c in self.spectrum)
        return [self.graph6, "|".join(self.kinds), " ".join(map(str, self.lambdas())), spec,
                f"{self.seconds:.6f}" if timing else ""]

    def to_record(self, timing: bool = False) -> dict:
        rec = {
            "graph6": self.graph6,
            "kinds": list(self.kinds),
            "spectrum": [{"lambda": lam, "valence": val, "count": c} for lam, val, c in self.spectrum],
            "certificates": [{"lambda": lam, "valuation": v} for lam, v in self.certificates],
        }
        if timing:
            rec["seconds"] = self.seconds
        return rec

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_record(timing))


def leaf_invariant_holds(cert: Certificate) -> bool:
    """An equal-link-free certificate on a connected graph with a leaf is a
    P2 chain or a star with a soft centre."""
    g = cert.graph
    if not is_connected(g) or not leaves(g) or equal_links(cert):
        return True
    if g.n == 2:
        return cert.lam == 2
    centre = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    return (g.m == g.n - 1 and len(centre) == 1 and cert.valuation[centre[0]] == 0
            and cert.lam == 1)


def bivalent_invariant_holds(cert: Certificate) -> bool:
    """Deleting the equal links of a bivalent certificate leaves a
    (lambda/2)-regular bipartite graph split by the sign of the valuation."""
    if not cert.bivalent:
        return True
    g = cert.graph
    for u, v in g.edges:
        if cert.valuation[u] == cert.valuation[v]:
            g = g.without_edge(u, v)
    return all(2 * d == cert.lam for d in g.degrees) and all(
        cert.valuation[u] != cert.valuation[v] for u, v in g.edges)


def census_row(g: Graph, oracle_check: bool = False, families: bool = False) -> CensusRow | None:
    """Row for one graph; None when ``families`` is set and g is outside them.

    Raises :class:`CensusViolation` when a checked claim fails.
    """
    t0 = time.perf_counter()
    kinds = classify_family(g).kinds
    if families and not kinds & FAMILY_KINDS:
        return None
    found = full_spectrum(g)
    keys = found.keys()
    if oracle_check or families:
        oracle = brute_force(g).keys()
        if oracle != keys:
            raise CensusViolation(g, f"search and oracle disagree on {sorted(oracle ^ keys)[:4]}")
    if families:
        outside = sorted({lam for lam, _ in keys} - CLAIMED_LAMBDAS)
        if outside:
            raise CensusViolation(g, f"certificate with lambda {outside} outside {{1,2,3,4}}")
        rep = recognize(g, enumerate_all=True)
        if rep.keys() != keys:
            raise CensusViolation(g, f"recognizer and oracle disagree on {sorted(rep.keys() ^ keys)[:4]}")
    for cert in found:
        if not leaf_invariant_holds(cert):
            raise CensusViolation(g, f"equal-link-free certificate {cert} on a graph with a leaf")
        if not bivalent_invariant_holds(cert):
            raise CensusViolation(g, f"bivalent certificate {cert} without a regular bipartite core")
    tally = Counter((c.lam, c.valence) for c in found)
    spectrum = tuple((lam, val, tally[lam, val]) for lam, val in sorted(tally))
    certs = tuple((c.lam, format_valuation(c.valuation)) for c in found)
    return CensusRow(to_graph6(g), tuple(sorted(k.value for k in kinds)), spectrum,
                     time.perf_counter() - t0, certs)


def _row_task(args: tuple[Graph, bool, bool]) -> CensusRow | None:
    return census_row(*args)


def census(graphs: Iterable[Graph], jobs: int = 1, oracle_check: bool = False,
           families: bool = False) -> Iterator[CensusRow]:
    """Rows in input order; graphs skipped by ``families`` yield nothing.

    With ``jobs > 1`` graphs are processed by a worker pool; ``imap`` keeps
    the output in input order.
    """
    tasks = ((g, oracle_check, families) for g in graphs)
    if jobs <= 1:
        rows: Iterable[CensusRow | None] = map(_row_task, tasks)
        yield from (r for r in rows if r is not None)
        return
    import multiprocessing

    with multiprocessing.Pool(jobs) as pool:
        for r in pool.imap(_row_task, tasks, chunksize=64):
            if r is not None:
                yield r


# ---------------------------------------------------------------------------
# graph sources
# ---------------------------------------------------------------------------

def _mask_graph(n: int, mask: int) -> Graph:
    pairs = itertools.combinations(range(n), 2)
    return Graph.from_edges(n, (e for k, e in enumerate(pairs) if mask >> k & 1))


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on n vertices (n <= 7), in edge-mask order."""
    if not 1 <= n <= CONNECTED_BOUND:
        raise ValueError(f"internal enumeration of connected graphs needs 1 <= n <= {CONNECTED_BOUND}")
    total = 1 << (n * (n - 1) // 2)
    step = 1 << 16
    for lo in range(0, total, step):
        for mask in _sweep.connected_masks(n, lo, min(total, lo + step)):
            yield _mask_graph(n, int(mask))


def prufer_decode(n: int, code: Iterable[int]) -> Graph:
    adj = _sweep.prufer_tree(n, np.asarray(list(code), np.int64))
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))


def labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices (n <= 9), by Prufer sequence."""
    if not 1 <= n <= TREE_BOUND:
        raise ValueError(f"internal enumeration of trees needs 1 <= n <= {TREE_BOUND}")
    if n == 1:
        yield Graph.empty(1)
        return
    for code in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(n, code)


def enumerator(spec: str) -> Iterator[Graph]:
    """Graphs named by ``connected:N``, ``connected:A-B``, ``trees:N`` or ``trees:A-B``."""
    kind, _, size = spec.partition(":")
    try:
        lo, _, hi = size.partition("-")
        sizes = range(int(lo), int(hi or lo) + 1)
    except ValueError:
        raise ValueError(f"bad enumerator size {size!r}") from None
    sources = {"connected": connected_graphs, "trees": labeled_trees}
    if kind not in sources:
        raise ValueError(f"unknown enumerator {kind!r} (expected connected or trees)")
    for n in sizes:
        # validate eagerly so a bad size fails before any output
        if n < 1 or n > (CONNECTED_BOUND if kind == "connected" else TREE_BOUND):
            raise ValueError(f"{kind} enumeration does not support n = {n}")
    return itertools.chain.from_iterable(sources[kind](n) for n in sizes)


def read_graph6(stream: IO[str], errors: list[GraphFormatError] | None = None) -> Iterator[Graph]:
    """Graphs from a graph6 stream; blank lines and ``>>graph6<<`` headers are skipped.

    Malformed lines are logged with their line number and appended to
    ``errors`` (when given) instead of stopping the stream.
    """
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<"):]
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except GraphFormatError as exc:
            err = GraphFormatError(f"line {lineno}: {exc}")
            log.warning("skipping malformed graph6 %s", err)
            if errors is not None:
                errors.append(err)


# ---------------------------------------------------------------------------
# compiled sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepReport:
    label: str
    graphs: int
    mismatches: int
    lambda_out: int
    trees: int = 0
    unicyclic: int = 0
    bicyclic: int = 0
    cacti: int = 0
    first_bad: Graph | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and self.lambda_out == 0

    def __str__(self) -> str:
        status = "ok" if self.ok else f"FAILED (first bad {to_graph6(self.first_bad)})" if self.first_bad else "FAILED"
        return (f"{self.label}: {self.graphs} graphs, {self.mismatches} mismatches, "
                f"{self.lambda_out} outside lambda 1..4, {self.seconds:.1f}s {status}")


def _report(label: str, cnt: np.ndarray, bad: Graph | None, seconds: float) -> SweepReport:
    c = [int(x) for x in cnt]
    return SweepReport(label, c[_sweep.GRAPHS], c[_sweep.MISMATCH], c[_sweep.LAMBDA_OUT],
                       c[_sweep.TREES], c[_sweep.UNICYCLIC], c[_sweep.BICYCLIC], c[_sweep.CACTI],
                       bad, seconds)


def _search_chunk(args: tuple[int, int, int]) -> tuple[np.ndarray, int]:
    n, lo, hi = args
    return _sweep.sweep_search(n, lo, hi, True)


def sweep_connected(n: int, jobs: int = 1, chunk: int = 1 << 15) -> SweepReport:
    """full_spectrum's kernel against the brute-force kernel on every
    connected labeled graph with n vertices."""
    t0 = time.perf_counter()
    total = 1 << (n * (n - 1) // 2)
    tasks = [(n, lo, min(total, lo + chunk)) for lo in range(0, total, chunk)]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_search_chunk, tasks)
    else:
        results = [_search_chunk(t) for t in tasks]
    cnt = np.zeros(_sweep.NSLOTS, np.int64)
    bad = -1
    for c, b in results:
        cnt += c
        if bad < 0 and b >= 0:
            bad = int(b)
    return _report(f"connected n={n}", cnt, _mask_graph(n, bad) if bad >= 0 else None,
                   time.perf_counter() - t0)


def family_edge_counts(n: int) -> list[tuple[int, bool]]:
    """(m, cactus-only) pairs covering trees, unicyclic, bicyclic graphs and cacti on n vertices."""
    out = [(m, False) for m in (n - 1, n, n + 1) if 0 <= m <= n * (n - 1) // 2]
    # a cactus with c cycles needs at least 2c + 1 vertices
    out += [(n - 1 + c, True) for c in range(3, (n - 1) // 2 + 1)]
    return out


def _family_task(args: tuple[int, int, bool, bool]) -> tuple[np.ndarray, int]:
    n, m, cactus_only, full = args
    cnt = np.zeros(_sweep.NSLOTS, np.int64)
    bad = _sweep.sweep_family(n, m, cactus_only, cnt, full)
    return cnt, int(bad)


def sweep_families(n: int, full: bool = False, jobs: int = 1) -> SweepReport:
    """Solver against oracle on every connected labeled tree, unicyclic,
    bicyclic graph and cactus with n vertices.

    ``full`` compares enumerated certificate sets (the recognizers' code
    path); otherwise per-lambda counts plus membership of each oracle
    certificate, which determines the same set.
    """
    t0 = time.perf_counter()
    tasks = [(n, m, cac, full) for m, cac in family_edge_counts(n)]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_family_task, tasks)
    else:
        results = [_family_task(t) for t in tasks]
    cnt = np.zeros(_sweep.NSLOTS, np.int64)
    bad = None
    for c, b in results:
        cnt += c
        if bad is None and b >= 0:
            bad = _mask_graph(n, b)
    return _report(f"families n={n}", cnt, bad, time.perf_counter() - t0)


def sweep_trees(n: int, sample: int | None = None, seed: int = 0, full: bool = False) -> SweepReport:
    """Solver against oracle on labeled trees by Prufer index; all of them,
    or ``sample`` indices drawn uniformly with replacement."""
    t0 = time.perf_counter()
    total = n ** max(n - 2, 0)
    if sample is None:
        indices = np.arange(total, dtype=np.int64)
    else:
        indices = np.random.default_rng(seed).integers(0, total, sample, dtype=np.int64)
    cnt = np.zeros(_sweep.NSLOTS, np.int64)
    bad = int(_sweep.sweep_prufer(n, indices, cnt, full))
    bad_graph = None
    if bad >= 0:
        code = [(bad // n ** t) % n for t in range(n - 2)]
        bad_graph = prufer_decode(n, code)
    label = f"trees n={n}" + (f" (sample {sample})" if sample else "")
    return _report(label, cnt, bad_graph, time.perf_counter() - t0)
