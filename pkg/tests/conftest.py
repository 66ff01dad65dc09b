import pytest

from extbinom import parse

CORPUS_TEXT = [
    "table:0=5,2=2,3=1",
    "table:0=3,1=2,2=1",
    "table:1=1,2=1,3=1,9=3",
    "binom",
    "id",
    "set:1,2",
    "table:0=1,1=1,2=7,3=2",
    "odd",
]

FINITE_TEXT = [t for t in CORPUS_TEXT if t not in ("id", "odd")]

# f(0) = 0 and finite support: c_f is finite and obeys a linear recurrence
ZERO_START_TEXT = ["table:1=1,2=1,3=1,9=3", "set:1,2", "table:1=1,2=3,4=2", "table:1=2,3=5"]


@pytest.fixture(scope="session")
def corpus():
    return [parse(t) for t in CORPUS_TEXT]


@pytest.fixture(scope="session")
def finite_corpus():
    return [parse(t) for t in FINITE_TEXT]


@pytest.fixture(scope="session")
def zero_start_corpus():
    return [parse(t) for t in ZERO_START_TEXT]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            for key, value in getattr(report, "user_properties", []):
                if key == "acceptance":
                    lines.append(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {value}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("#")[1].split(" ")[0])):
            terminalreporter.write_line(line)
