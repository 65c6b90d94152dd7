"""Shared fixtures: the two worked example systems and file helpers."""

import json

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)

EXAMPLE_ONE = {
    "system": {
        "A": [["1"]],
        "B": [["1"]],
        "C": [["1"], ["0"]],
        "D": [["0"], ["1"]],
        "Y": {"ineqs": [["-1", "0"]]},
    }
}

HBAR = {"n": 1, "graph": {"ineqs": [["0", "-1"]]}}

# x+ = Ax + u with u >= 0 componentwise and A = [[0,2],[1,0]]: the dual has
# its only eigenvalue at sqrt(2), forcing the algebraic certification path.
SQRT2_SHIFTED = {
    "system": {
        "A": [["0", "2"], ["1", "0"]],
        "B": [["1", "0"], ["0", "1"]],
        "C": [["0", "0"], ["0", "0"]],
        "D": [["1", "0"], ["0", "1"]],
        "Y": {"ineqs": [["-1", "0"], ["0", "-1"]]},
    }
}


@pytest.fixture
def write_json(tmp_path):
    def writer(payload, name="input.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)
    return writer
