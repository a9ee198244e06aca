import sys
from fractions import Fraction

import pytest

from wreathsra.gamma import CyclicGroup, LambdaVector


def lam(*values) -> LambdaVector:
    return LambdaVector(len(values), tuple(Fraction(v) for v in values))


@pytest.fixture
def g2():
    return CyclicGroup(2)


@pytest.fixture
def g3():
    return CyclicGroup(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
