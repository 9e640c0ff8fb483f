import math
import sys

import numpy as np
import pytest

SQRT2 = math.sqrt(2.0)
GRID = np.linspace(0.0, 2.0 * math.pi, 721)


@pytest.fixture
def grid():
    return GRID


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
