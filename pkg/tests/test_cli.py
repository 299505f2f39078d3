from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from trivalent.cli import FALSE, OK, USAGE, main
from trivalent.graph import cycle_graph, parse_graph6, to_graph6
from trivalent.valuation import parse_valuation, verify

C5 = to_graph6(cycle_graph(5))
C4 = to_graph6(cycle_graph(4))
P2 = "A_"


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


MATRIX = [
    (("verify", "--graph", P2, "--valuation", "+-"), OK),
    (("verify", "--graph", P2, "--valuation", "++"), FALSE),
    (("verify", "--graph", P2, "--valuation", "+-0"), USAGE),
    (("verify", "--graph", P2, "--valuation", "+x"), USAGE),
    (("verify", "--graph", "A!", "--valuation", "+-"), USAGE),
    (("verify", "--valuation", "+-"), USAGE),
    (("search", "--graph", C4), OK),
    (("search", "--graph", C5), FALSE),
    (("search", "--graph", C4, "--lambda", "3"), FALSE),
    (("search", "--graph", C4, "--oracle", "--format", "csv"), OK),
    (("classify", "--graph", C4), OK),
    (("classify", "--graph", C5), FALSE),
    (("classify", "--graph", "Bw?"), USAGE),
    (("generate", "b1", "--p", "4", "--q", "8"), OK),
    (("generate", "b1", "--p", "4", "--q", "6"), USAGE),
    (("generate", "counterexample"), OK),
    (("decompose", "--graph", C4, "--valuation", "+0-0"), OK),
    (("decompose", "--graph", C4, "--valuation", "+000"), FALSE),
    (("partition", "--graph", C4), OK),
    (("partition", "--graph", C5), FALSE),
    (("hamiltonian", "--graph", C5), OK),
    (("hamiltonian", "--graph", to_graph6(cycle_graph(30))), USAGE),
    (("census", "--enumerate", "trees:9x"), USAGE),
    (("census", "--sweep", "bogus:3"), USAGE),
]


@pytest.mark.parametrize("argv,code", MATRIX, ids=[" ".join(a[:2]) + f"->{c}" for a, c in MATRIX])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == USAGE


def test_verify_prints_lambda(capsys):
    code, out, _ = run(capsys, "verify", "--graph", P2, "--valuation", "+-")
    assert (code, out.strip()) == (OK, "lambda=2")
    code, out, _ = run(capsys, "verify", "--graph", C4, "--valuation=-+-+")
    assert (code, out.strip()) == (OK, "lambda=4")


def test_classify_c5_message(capsys):
    code, out, _ = run(capsys, "classify", "--graph", C5)
    assert code == FALSE and "no bivalent/trivalent certificates" in out


def test_generate_cycle_dot(capsys, tmp_path):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "generate", "cycle", "--kind", "c3k", "--k", "2", "--dot", str(dot),
                       "--format", "jsonl")
    assert code == OK
    rec = json.loads(out.splitlines()[0])
    assert rec["lambda"] == 3
    g = parse_graph6(rec["graph"])
    assert g == cycle_graph(6)
    assert dot.read_text().startswith("graph") and "0 -- 1;" in dot.read_text()


def test_search_jsonl_records_verify(capsys):
    code, out, err = run(capsys, "search", "--graph", to_graph6(cycle_graph(6)), "--format", "jsonl", "--stats")
    assert code == OK
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 7
    for r in recs:
        assert verify(parse_graph6(r["graph"]), parse_valuation(r["valuation"])) == r["lambda"]
    assert json.loads(err)["certificates"] == 7


def test_edge_file_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "search", "--edge-file", "-", stdin="0 1\n1 2\n", monkeypatch=monkeypatch)
    assert code == OK and out.split() == ["+0-", "lambda=1", "trivalent"]


def test_decompose_lines(capsys):
    code, out, _ = run(capsys, "decompose", "--graph", to_graph6(cycle_graph(8)), "--valuation", "+0-0+0-0")
    assert code == OK and out.startswith("Cycle4k(2)")


def test_partition_output(capsys):
    code, out, _ = run(capsys, "partition", "--graph", to_graph6(cycle_graph(8)))
    assert code == OK and len([line for line in out.splitlines() if line.strip()]) >= 2


def test_hamiltonian_counterexample(capsys):
    code, out, _ = run(capsys, "generate", "counterexample", "--format", "jsonl")
    g6 = json.loads(out.splitlines()[0])["graph"]
    assert run(capsys, "hamiltonian", "--graph", g6)[0] == FALSE


# census ---------------------------------------------------------------------------

def test_census_empty_input(capsys, monkeypatch):
    code, out, err = run(capsys, "census", stdin="", monkeypatch=monkeypatch)
    assert (code, out) == (OK, "")


def test_census_csv_and_jsonl(capsys, monkeypatch):
    code, out, _ = run(capsys, "census", "--input", "-", stdin=f"{P2}\n{C5}\n", monkeypatch=monkeypatch)
    lines = out.strip().splitlines()
    assert code == OK and lines[0].startswith("graph6,kinds,lambdas") and len(lines) == 3
    code, out, _ = run(capsys, "census", "--format", "jsonl", "--oracle-check", stdin=f"{C4}\n",
                       monkeypatch=monkeypatch)
    rec = json.loads(out)
    g = parse_graph6(rec["graph6"])
    assert all(verify(g, parse_valuation(c["valuation"])) == c["lambda"] for c in rec["certificates"])


def test_census_malformed_lines(capsys, monkeypatch):
    code, out, err = run(capsys, "census", "--format", "jsonl", stdin=f"{P2}\nB\n{C4}\n",
                         monkeypatch=monkeypatch)
    assert code == USAGE and len(out.splitlines()) == 2 and "1 malformed" in err


def test_census_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "census", "--enumerate", "connected:1-5", "--output", str(a))[0] == OK
    assert run(capsys, "census", "--enumerate", "connected:1-5", "--output", str(b), "--jobs", "2")[0] == OK
    assert a.read_text() == b.read_text() and len(a.read_text().splitlines()) == 1 + 1 + 1 + 4 + 38 + 728


def test_census_families_and_sweep(capsys):
    code, out, _ = run(capsys, "census", "--enumerate", "trees:6", "--families", "--format", "jsonl")
    assert code == OK and len(out.splitlines()) == 1296
    code, out, _ = run(capsys, "census", "--sweep", "connected:4", "--sweep", "trees:6", "--sweep", "families:5")
    assert code == OK and out.count(" ok") == 3


def test_census_violation_exit(capsys, monkeypatch):
    import trivalent.census as C

    real = C.brute_force
    monkeypatch.setattr(C, "brute_force", lambda g: type(real(g))(g, (), {}))
    code, out, err = run(capsys, "census", "--oracle-check", stdin=f"{C4}\n", monkeypatch=monkeypatch)
    assert code == FALSE
    assert json.loads(err.strip().splitlines()[-1])["graph6"] == C4


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "trivalent.cli", "verify", "--graph", P2, "--valuation", "+-"],
                         capture_output=True, text=True)
    assert res.returncode == OK and res.stdout.strip() == "lambda=2"
