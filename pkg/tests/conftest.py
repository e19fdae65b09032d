import math
import sys

import pytest

from jumpjacobi.orthopoly import build_recurrence
from jumpjacobi.quadrature import WeightSpec


@pytest.fixture(scope="session")
def spec_c2():
    return WeightSpec(0.0, 0.0, 2.0)


@pytest.fixture(scope="session")
def table_c2(spec_c2):
    return build_recurrence(spec_c2, 400)


@pytest.fixture(scope="session")
def spec_legendre():
    return WeightSpec(0.0, 0.0, 1.0)


@pytest.fixture(scope="session")
def table_legendre(spec_legendre):
    return build_recurrence(spec_legendre, 256)


@pytest.fixture(scope="session")
def spec_general():
    return WeightSpec(0.5, -0.3, 0.5, (0.1, 0.3, -0.2))


@pytest.fixture(scope="session")
def log2_over_pi():
    return math.log(2.0) / math.pi


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
