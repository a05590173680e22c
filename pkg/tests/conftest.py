import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cfladder.algebraic import reciprocal_scale  # noqa: E402
from cfladder.cf import expand  # noqa: E402
from cfladder.ladder import build_ladder  # noqa: E402
from cfladder.numspec import parse_number_spec  # noqa: E402

BATTERY_XI = ("cbrt:2", "cbrt:3", "cbrt:6", "sqrt:2", "sqrt:3", "golden")
BATTERY_M = (1, 2, 3, 5, 6, 10)


@lru_cache(maxsize=None)
def expansion(spec: str, terms: int):
    return expand(parse_number_spec(spec), terms)


@lru_cache(maxsize=None)
def eta_expansion(spec: str, m: int, terms: int):
    return expand(reciprocal_scale(parse_number_spec(spec), m), terms)


@lru_cache(maxsize=None)
def ladder(spec: str, m: int, N: int):
    """Ladder with n, k in 1..N (N + 1 partial quotients per number)."""
    return build_ladder(expansion(spec, N + 1), eta_expansion(spec, m, N + 1), m)


@pytest.fixture(scope="session")
def cbrt2_ladder_1000():
    return ladder("cbrt:2", 2, 1000)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
