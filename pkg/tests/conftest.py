from fractions import Fraction

import pytest

from meshcat.pathcat import mesh_category
from meshcat.tquiver import build_quotient, lambda_quiver, validate_type

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def lam2():
    return lambda_quiver(2)


@pytest.fixture(scope="session")
def lam3():
    return lambda_quiver(3)


@pytest.fixture(scope="session")
def mesh2(lam2):
    return mesh_category(lam2)


def quotient(kind, n, f, t=1):
    return build_quotient(validate_type(kind, n, Fraction(f), t))
