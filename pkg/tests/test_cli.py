import json
import subprocess
import sys
from pathlib import Path

import pytest

from constaqmds.cli import main
from constaqmds.code import code_from_dict

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_RUNS = [
    (["enumerate", "--q", "23", "--family", "even"], "table1_q23_even.txt"),
    (["enumerate", "--q", "17", "--family", "odd"], "table2_q17_odd.txt"),
    (["enumerate", "--q", "17", "--family", "odd", "--format", "csv"], "table2_q17_odd.csv"),
    (["enumerate", "--q", "29", "--family", "odd"], "table3_q29_odd.txt"),
    (["enumerate", "--q", "19", "--r", "4"], "example34_q19_r4.txt"),
]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,golden", GOLDEN_RUNS, ids=[g for _, g in GOLDEN_RUNS])
def test_enumerate_matches_golden(argv, golden, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.encode() == (GOLDEN / golden).read_bytes()


def test_enumerate_is_deterministic(capsys):
    for q in ("17", "23", "29"):
        outs = set()
        for fmt in ("text", "csv", "json"):
            for _ in range(2):
                _, out, _ = run(["enumerate", "--q", q, "--format", fmt, "--range", "all"], capsys)
                outs.add((fmt, out))
        assert len(outs) == 3


def test_enumerate_examples(capsys):
    _, out, _ = run(["enumerate", "--q", "23", "--family", "even", "--format", "text"], capsys)
    assert "6 4 132 [[132,100,17]]_23" in out.splitlines()
    _, out, _ = run(["enumerate", "--q", "17", "--family", "odd", "--format", "csv"], capsys)
    assert len(out.strip().splitlines()) == 1 + 4
    _, out, _ = run(["enumerate", "--q", "9", "--family", "odd", "--range", "all"], capsys)
    rows = out.strip().splitlines()[1:]
    assert rows and all(row.split()[1] == "5" for row in rows)


def test_enumerate_json_all_range(capsys):
    _, out, _ = run(["enumerate", "--q", "23", "--format", "json", "--range", "all"], capsys)
    data = json.loads(out)
    assert {rec["range"] for rec in data} == {"new", "previously known"}
    assert all(rec["k"] == rec["n"] - 2 * rec["d"] + 2 for rec in data)


def test_build_json_roundtrip(capsys):
    code, out, _ = run(["build", "--q", "19", "--r", "4", "--d", "14"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert (rec["n"], rec["k"], rec["d"]) == (90, 64, 14)
    rebuilt = code_from_dict(rec["code"])
    assert rebuilt.g.to_list() == rec["code"]["generator"]
    assert rec["code"]["field"]["modulus"] == list(rebuilt.spec.modulus)


def test_build_q5(capsys):
    code, out, _ = run(["build", "--q", "5", "--r", "2", "--d", "5"], capsys)
    rec = json.loads(out)
    assert code == 0 and (rec["n"], rec["k"], rec["d"]) == (12, 4, 5)
    assert len(rec["code"]["generator"]) == 5


@pytest.mark.parametrize("argv,needle", [
    (["build", "--q", "19", "--r", "4", "--d", "15"], "DOutOfRange"),
    (["build", "--q", "5", "--r", "6", "--d", "2"], "RTooLarge"),
    (["build", "--q", "5", "--r", "1", "--d", "2"], "ROne"),
    (["enumerate", "--q", "8"], "EvenCharacteristic"),
    (["enumerate", "--q", "15"], "NotPrimePower"),
    (["verify", "--q", "8"], "EvenCharacteristic"),
])
def test_usage_errors_exit_2(argv, needle, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and needle in err


def test_verify_q7_even_exit_0(capsys):
    code, out, _ = run(["verify", "--q", "7", "--family", "even", "--budget", "1000000"], capsys)
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("even")]
    assert lines and all("ProvenMDS" in line for line in lines)


def test_verify_q29_odd_sampled_exit_0(capsys):
    code, out, _ = run(["verify", "--q", "29", "--family", "odd", "--budget", "10000", "--seed", "1",
                        "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert {inst["report"]["result"] for inst in data["instances"]} <= {"Sampled", "ProvenMDS"}
    assert "Sampled" in {inst["report"]["result"] for inst in data["instances"]}
    assert all(c["agreements"] == c["trials"] for c in data["crosschecks"])


def test_verify_exit_1_on_equivalence_violation(monkeypatch, capsys):
    import constaqmds.oracle as oracle

    monkeypatch.setattr(oracle, "gram_check", lambda c: not oracle.dual_containing(c.Z))
    code, _, err = run(["verify", "--q", "5", "--family", "even", "--trials", "0"], capsys)
    assert code == 1
    assert err.startswith("error:") and "gram=" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "constaqmds", "enumerate", "--q", "17", "--family", "odd"],
                          capture_output=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "table2_q17_odd.txt").read_bytes()
