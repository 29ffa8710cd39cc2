import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rslist.field import Field  # noqa: E402

GF8_POLY = 0b1011
GF16_POLY = 0b10011


def a(field, e):
    """alpha^e, shorthand for fixtures."""
    return field.pow_alpha(e)


@pytest.fixture(scope="session")
def gf8():
    return Field(3, GF8_POLY, 7)


@pytest.fixture(scope="session")
def gf16():
    return Field(4, GF16_POLY, 15)


def paper_generator(field):
    """The printed (7,4) generator matrix; ``None`` stands for the zero element."""
    rows = [
        [5, 1, 3, 1, 3, 2, 1],
        [6, None, 4, 3, 6, 0, 2],
        [6, 2, 2, 2, None, 5, 6],
        [4, 6, 3, 2, 0, None, 1],
    ]
    return np.array([[0 if e is None else field.pow_alpha(e) for e in row] for row in rows])


def from_exponents(field, exps):
    return np.array([0 if e is None else field.pow_alpha(e) for e in exps], dtype=np.int64)


def matrix_from_exponents(field, rows):
    return np.array([from_exponents(field, r) for r in rows], dtype=np.int64)


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcome}  {name}")
