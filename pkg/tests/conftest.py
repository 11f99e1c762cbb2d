import time

import pytest

from finrings.claims import Census
from finrings.matrices import example1_ring, example2_ring


@pytest.fixture(scope="session")
def census():
    return Census(9)


@pytest.fixture(scope="session")
def all_rings(census):
    return [f.ring for f in census.rings()]


# rings are immutable, so sharing them is safe
@pytest.fixture(scope="session")
def ex1():
    return example1_ring()


@pytest.fixture(scope="session")
def ex2():
    return example2_ring()


# acceptance lines are collected by tests/test_acceptance.py and printed at the end
ACCEPTANCE_LINES: list[str] = []
SUITE_LIMIT_SECONDS = 180.0
_start = {}


def pytest_sessionstart(session):
    _start["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - _start["t"]
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    verdict = "PASS" if elapsed < SUITE_LIMIT_SECONDS else "FAIL"
    terminalreporter.write_line(
        f"[{verdict}] 7b full suite wall-clock: {elapsed:.1f} s (limit {SUITE_LIMIT_SECONDS:.0f} s)"
    )


def pytest_sessionfinish(session, exitstatus):
    if ACCEPTANCE_LINES and time.perf_counter() - _start["t"] >= SUITE_LIMIT_SECONDS:
        session.exitstatus = 1
