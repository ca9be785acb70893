"""Shared helpers and the acceptance summary printed at the end of a run."""

import pytest

from constaqmds.field import prime_power


def odd_prime_powers(limit):
    out = []
    for q in range(3, limit + 1, 2):
        try:
            prime_power(q)
        except ValueError:
            continue
        out.append(q)
    return out


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
