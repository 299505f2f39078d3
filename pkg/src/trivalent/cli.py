"""Command-line interface.

Exit codes: 0 success, 1 when no certificate exists or the tested property
is false, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence

from . import census as C
from .generate import (
    gen_B1,
    gen_B3,
    gen_cactus,
    gen_counterexample,
    gen_cycle,
    gen_diamond,
    gen_p2_tree,
    gen_regular_bipartite,
    gen_soft_star,
    gen_star_tree,
)
from .graph import ContractViolation, Graph, GraphFormatError, parse_edge_list, parse_graph6, to_dot, to_graph6
from .matching import HamiltonBoundError, hamiltonian_cycle, perfect_matching_partition
from .recognize import classify
from .search import SearchBoundError, brute_force, csp_search, full_spectrum
from .transform import decompose, describe
from .valuation import Certificate, format_valuation, parse_valuation, verify

OK, FALSE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _graph(args) -> Graph:
    if args.graph is not None:
        return parse_graph6(args.graph)
    if args.edge_file is not None:
        return parse_edge_list(_read(args.edge_file))
    raise UsageError("give --graph (graph6) or --edge-file")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--graph", help="graph in graph6 format")
    g.add_argument("--edge-file", help="edge-list file ('u v' lines, '-' for stdin)")


def _write_dot(path: str, g: Graph, values=None) -> None:
    with open(path, "w") as fh:
        fh.write(to_dot(g, values))


def _emit_certificates(certs: Sequence[Certificate], fmt: str, out) -> None:
    if fmt == "jsonl":
        for c in certs:
            out.write(c.to_json() + "\n")
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(["graph6", "lambda", "valuation", "valence"])
        for c in certs:
            w.writerow([to_graph6(c.graph), c.lam, format_valuation(c.valuation), c.valence])
    else:
        for c in certs:
            out.write(f"{format_valuation(c.valuation)}\tlambda={c.lam}\t{c.valence}\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    g = _graph(args)
    values = parse_valuation(args.valuation)
    lam = verify(g, values)
    if lam is None:
        print("not a bivalent/trivalent eigenvector")
        return FALSE
    print(f"lambda={lam}")
    return OK


def cmd_search(args) -> int:
    g = _graph(args)
    if args.oracle:
        res = brute_force(g)
        if args.lam is not None:
            res = type(res)(g, tuple(c for c in res if c.lam == args.lam), res.stats)
    elif args.lam is not None:
        res = csp_search(g, args.lam, prune=not args.no_prune)
    else:
        res = full_spectrum(g, prune=not args.no_prune)
    _emit_certificates(list(res), args.format, sys.stdout)
    if args.stats:
        print(json.dumps({"certificates": len(res), **res.stats}), file=sys.stderr)
    if args.dot and len(res):
        first = res.certificates[0]
        _write_dot(args.dot, g, first.valuation)
    return OK if len(res) else FALSE


def cmd_classify(args) -> int:
    g = _graph(args)
    rep = classify(g, enumerate_all=args.all)
    if not rep:
        print("no bivalent/trivalent certificates")
        return FALSE
    if args.format == "jsonl":
        for f in rep.found:
            rec = f.certificate.to_record()
            rec.update(family=rep.family.value, trace=f.trace)
            print(json.dumps(rec))
        return OK
    kinds = ",".join(sorted(k.value for k in rep.classification.kinds))
    print(f"family={rep.family.value}\tkinds={kinds}")
    for lam in rep.lambdas():
        print(f"lambda={lam}\tcount={rep.counts[lam]}")
    for f in rep.found:
        print(f"  {format_valuation(f.certificate.valuation)}\tlambda={f.lam}\t{f.valence}\t{f.trace or '-'}")
    return OK


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _glue(items: Sequence[str] | None):
    if not items:
        return None
    out = []
    for item in items:
        parts = _ints(item.replace(":", ","))
        if len(parts) != 4:
            raise UsageError(f"--glue takes i:a:j:b, got {item!r}")
        out.append(tuple(parts))
    return out


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "counterexample":
        g = gen_counterexample()
        print(json.dumps({"graph": to_graph6(g)}) if args.format == "jsonl" else to_graph6(g))
        if args.dot:
            _write_dot(args.dot, g)
        return OK
    if fam == "p2-tree":
        cert = gen_p2_tree(args.p, args.wiring, args.seed)
    elif fam == "soft-star":
        cert = gen_soft_star(args.k)
    elif fam == "star-tree":
        cert = gen_star_tree(_ints(args.ks), args.wiring, args.seed)
    elif fam == "cycle":
        cert = gen_cycle(args.kind, args.k)
    elif fam == "b1":
        cert = gen_B1(args.p, args.q, args.lam)
    elif fam == "b3":
        cert = gen_B3(_ints(args.chains), args.lam)
    elif fam == "diamond":
        cert = gen_diamond()
    elif fam == "cactus":
        cert = gen_cactus(_ints(args.cycles), _glue(args.glue), args.lam)
    else:
        cert = gen_regular_bipartite(args.k, args.l)
    if args.format == "jsonl":
        print(cert.to_json())
    else:
        print(f"{to_graph6(cert.graph)}\t{format_valuation(cert.valuation)}\tlambda={cert.lam}")
    if args.dot:
        _write_dot(args.dot, cert.graph, cert.valuation)
    return OK


def cmd_decompose(args) -> int:
    g = _graph(args)
    values = parse_valuation(args.valuation)
    if verify(g, values) is None:
        print("not a bivalent/trivalent eigenvector")
        return FALSE
    dec = decompose(Certificate.of(g, values))
    for line in describe(dec):
        print(line)
    return OK


def cmd_partition(args) -> int:
    g = _graph(args)
    try:
        part = perfect_matching_partition(g)
    except ContractViolation as exc:
        print(exc)
        return FALSE
    for i, m in enumerate(part.matchings):
        print(f"M{i}\t" + " ".join(f"{u}-{v}" for u, v in m))
    bad = part.violations()
    for v in bad:
        print(f"violation: {v}", file=sys.stderr)
    return FALSE if bad else OK


def cmd_hamiltonian(args) -> int:
    g = _graph(args)
    cycle = hamiltonian_cycle(g, args.bound)
    if cycle is None:
        print("not hamiltonian")
        return FALSE
    print(" ".join(map(str, cycle)))
    return OK


def _sweep(spec: str, jobs: int, full: bool) -> C.SweepReport:
    kind, _, rest = spec.partition(":")
    size, _, sample = rest.partition(":")
    if not size.isdigit() or (sample and not sample.isdigit()):
        raise UsageError(f"bad sweep {spec!r} (expected connected:N, families:N or trees:N[:SAMPLE])")
    n = int(size)
    if kind == "connected":
        return C.sweep_connected(n, jobs)
    if kind == "families":
        return C.sweep_families(n, full, jobs)
    if kind == "trees":
        return C.sweep_trees(n, int(sample) if sample else None, full=full)
    raise UsageError(f"unknown sweep kind {kind!r}")


def cmd_census(args) -> int:
    if args.sweep:
        ok = True
        for spec in args.sweep:
            rep = _sweep(spec, args.jobs, args.full)
            print(rep)
            ok &= rep.ok
        return OK if ok else FALSE
    errors: list[GraphFormatError] = []
    if args.enumerate and args.input:
        raise UsageError("--enumerate and --input are exclusive")
    if args.enumerate:
        graphs = C.enumerator(args.enumerate)
    else:
        src = sys.stdin if args.input in (None, "-") else open(args.input)
        graphs = C.read_graph6(src, errors)
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    writer = csv.writer(out) if args.format == "csv" else None
    wrote_header = False
    try:
        for row in C.census(graphs, args.jobs, args.oracle_check, args.families):
            if writer is not None:
                if not wrote_header:
                    writer.writerow(C.CensusRow.CSV_HEADER)
                    wrote_header = True
                writer.writerow(row.csv_fields(args.stats))
            else:
                out.write(row.to_json(args.stats) + "\n")
    except C.CensusViolation as exc:
        out.flush()
        print(f"census violation: {exc}", file=sys.stderr)
        print(exc.dump(), file=sys.stderr)
        return FALSE
    finally:
        if out is not sys.stdout:
            out.close()
    if errors:
        print(f"{len(errors)} malformed graph6 line(s) skipped", file=sys.stderr)
        return USAGE
    return OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trivalent", description=__doc__.splitlines()[0])
    ap.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a valuation and report its eigenvalue")
    _add_graph_args(p)
    p.add_argument("--valuation", required=True, help="string over +, 0, - (write --valuation=-+ when it starts with -)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="list certificates of a graph")
    _add_graph_args(p)
    p.add_argument("--lambda", dest="lam", type=int, help="restrict to one eigenvalue")
    p.add_argument("--oracle", action="store_true", help="use brute-force enumeration")
    p.add_argument("--no-prune", action="store_true", help="disable propagation in the search")
    p.add_argument("--stats", action="store_true", help="print search statistics to stderr")
    p.add_argument("--format", choices=("text", "jsonl", "csv"), default="text")
    p.add_argument("--dot", help="write the first certificate as DOT")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", help="family recognition with certificates and traces")
    _add_graph_args(p)
    p.add_argument("--all", action="store_true", help="list every certificate, not one per eigenvalue")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="build a certified graph")
    gsub = p.add_subparsers(dest="family", required=True)
    fams = {}
    for name in ("p2-tree", "soft-star", "star-tree", "cycle", "b1", "b3", "diamond", "cactus",
                 "regular-bipartite", "counterexample"):
        fams[name] = q = gsub.add_parser(name)
        q.add_argument("--dot", help="write the graph as DOT")
        q.add_argument("--format", choices=("text", "jsonl"), default="text")
    fams["p2-tree"].add_argument("--p", type=int, required=True, help="number of P2 chains")
    fams["p2-tree"].add_argument("--wiring", choices=("path", "star", "random"), default="path")
    fams["p2-tree"].add_argument("--seed", type=int)
    fams["soft-star"].add_argument("--k", type=int, required=True, help="number of +/- leaf pairs")
    fams["star-tree"].add_argument("--ks", required=True, help="leaf-pair counts, e.g. 1,2,1")
    fams["star-tree"].add_argument("--wiring", choices=("chain", "random"), default="chain")
    fams["star-tree"].add_argument("--seed", type=int)
    fams["cycle"].add_argument("--kind", required=True, help="c4k, c3k or c2k")
    fams["cycle"].add_argument("--k", type=int, required=True)
    fams["b1"].add_argument("--p", type=int, required=True)
    fams["b1"].add_argument("--q", type=int, required=True)
    fams["b1"].add_argument("--lambda", dest="lam", type=int)
    fams["b3"].add_argument("--chains", required=True, help="chain vertex counts with hubs, e.g. 9,6,3")
    fams["b3"].add_argument("--lambda", dest="lam", type=int)
    fams["cactus"].add_argument("--cycles", required=True, help="cycle lengths, e.g. 4,4,3")
    fams["cactus"].add_argument("--glue", action="append", help="i:a:j:b glues cycle i position a to cycle j position b")
    fams["cactus"].add_argument("--lambda", dest="lam", type=int)
    fams["regular-bipartite"].add_argument("--k", type=int, required=True)
    fams["regular-bipartite"].add_argument("--l", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("decompose", help="split a certificate at its equal links")
    _add_graph_args(p)
    p.add_argument("--valuation", required=True, help="string over +, 0, - (write --valuation=-+ when it starts with -)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("partition", help="perfect matching partition of a regular bipartite graph")
    _add_graph_args(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("hamiltonian", help="search for a Hamiltonian cycle")
    _add_graph_args(p)
    p.add_argument("--bound", type=int, default=24, help="largest order searched")
    p.set_defaults(func=cmd_hamiltonian)

    p = sub.add_parser("census", help="per-graph certificate census or exhaustive sweeps")
    p.add_argument("--enumerate", help="connected:N or trees:N (ranges A-B allowed)")
    p.add_argument("--input", help="graph6 file ('-' or omitted for stdin)")
    p.add_argument("--output", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--oracle-check", action="store_true", help="compare every graph with brute force")
    p.add_argument("--families", action="store_true",
                   help="only tree/unicyclic/bicyclic/cactus graphs; assert the lambda and recognizer claims")
    p.add_argument("--stats", action="store_true", help="include per-graph timing")
    p.add_argument("--sweep", action="append",
                   help="compiled sweep: connected:N, families:N or trees:N[:SAMPLE] (repeatable)")
    p.add_argument("--full", action="store_true", help="family/tree sweeps compare enumerated sets")
    p.set_defaults(func=cmd_census)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, SearchBoundError, HamiltonBoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, ContractViolation) as exc:
        # malformed valuations, bad generator parameters
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
