import random

import pytest

from gcrlie.context import GroupContext
from gcrlie.fields import GF, PrimeField, RationalFunctionField, Rationals, SimpleExtension
from gcrlie.linalg import Matrix
from gcrlie.liealg import bracket_closure


def mat(F, rows):
    return Matrix.from_payload(F, [[F.coerce(x) for x in r] for r in rows])


def unit(F, n, i, j):
    return Matrix.unit(F, n, i, j)


def closure(kind, n, F, gens):
    return bracket_closure(GroupContext(kind, n, F), gens)


@pytest.fixture
def Q():
    return Rationals()


@pytest.fixture
def F2():
    return PrimeField(2)


@pytest.fixture
def F3():
    return PrimeField(3)


@pytest.fixture
def F2t():
    return RationalFunctionField(PrimeField(2), "t")


@pytest.fixture
def GF4():
    return GF(4)


@pytest.fixture
def rng():
    return random.Random(0)


FIELD_FACTORIES = {
    "Q": Rationals,
    "GF5": lambda: PrimeField(5),
    "GF4": lambda: GF(4),
    "GF2(t)": lambda: RationalFunctionField(PrimeField(2), "t"),
    "GF3[w]/(w^2+1)": lambda: SimpleExtension(PrimeField(3), "w^2+1"),
}


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line; the lines are echoed in the terminal summary."""
    def record(number, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} ({detail})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
