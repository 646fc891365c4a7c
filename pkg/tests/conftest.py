import pytest

from _support import ACCEPTANCE_LINES
from mwgraph.graphfile import load_example


@pytest.fixture(scope="session")
def examples():
    return {name: load_example(name) for name in ("ex1", "ex2", "ex3", "ex4")}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
