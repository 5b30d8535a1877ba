import time

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")

SUITE_BUDGET = 60.0
GATES = []
_start = time.perf_counter()


def gate(label: str, ok: bool, extra: str = "") -> bool:
    """Record one acceptance line; the terminal summary prints all of them."""
    GATES.append((label, bool(ok), extra))
    return bool(ok)


def pytest_sessionfinish(session, exitstatus):
    # runs before the terminal summary is written
    if not GATES:
        return
    elapsed = time.perf_counter() - _start
    ok = gate("13 full suite wall clock", elapsed < SUITE_BUDGET, f"{elapsed:.1f} s (limit {SUITE_BUDGET:.0f} s)")
    if not ok and session.exitstatus == 0:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if GATES:
        terminalreporter.section("acceptance criteria")
        for label, passed, extra in GATES:
            terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label:<50} {extra}".rstrip())


@pytest.fixture
def fixtures(tmp_path):
    from a4data import write_fixtures

    return write_fixtures(tmp_path)
