import json
from pathlib import Path

import pytest

from hooktab import jdt
from hooktab.filling import Filling

FIXTURES = Path(__file__).parent / "fixtures"

# worked example: shape (4,3,3,2), bound 7
WORKED_C = [[7, 3, 5, -2], [7, 3, 2], [5, 4, 2], [4, 6]]
WORKED_T = [[1, 1, 2, 5], [2, 4, 6], [4, 5, 7], [5, 6]]
WORKED_H = [[3, 0, -1, 0], [-1, -1, 1], [-2, -1, 0], [0, 0]]

# one forward slide from (2,2) and its backward inverse, shape (6,5,5,4)
SLIDE_IN = [[4, 1, 2, 2, 3, 4], [4, 6, 3, 4, 4], [8, 5, 5, 5, 6], [6, 6, 7, 7]]
SLIDE_OUT = [[4, 1, 2, 2, 3, 4], [4, 4, 4, 4, 4], [8, 5, 6, 6, 6], [6, 6, 7, 7]]

_acceptance_lines = []


@pytest.fixture(autouse=True)
def _checking_on():
    jdt.set_checking(True)
    yield
    jdt.set_checking(False)


@pytest.fixture
def worked_content():
    return Filling.from_rows(WORKED_C)


@pytest.fixture(scope="session")
def worked_trace():
    return json.loads((FIXTURES / "worked_hc_trace.json").read_text())


@pytest.fixture
def report():
    """Record one acceptance line; printed in the terminal summary."""
    def _report(number, passed, detail=""):
        _acceptance_lines.append(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip())
    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
