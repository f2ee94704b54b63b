import csv
from importlib import resources

import pytest

from linktop.weights import make_weight_system


def load_table(name):
    with resources.files("linktop").joinpath(f"data/{name}.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    for r in rows:
        r["ws"] = make_weight_system([int(x) for x in r["weights"].split()])
    return rows


TABLE1 = load_table("table1")
TABLE3 = load_table("table3")

# filled by test_acceptance.report, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table1():
    return TABLE1


@pytest.fixture(scope="session")
def table3():
    return TABLE3
