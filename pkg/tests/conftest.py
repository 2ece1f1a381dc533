"""Shared pytest configuration.

Tests in test_acceptance.py carry ``@pytest.mark.criterion(n)``; the
terminal summary prints one PASS/FAIL line per acceptance criterion.
"""
from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    max_examples=60,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CRITERIA = {
    1: "tiling fixture xxy||xxy",
    2: "purely periodic recursion t^2-52t+1",
    3: "frieze fixtures A2~, E6~, D7~",
    4: "E6~ sequence recursions",
    5: "Laurent phenomenon",
    6: "A~ frieze / tiling bridge",
    7: "randomized property suites",
    8: "band extensions E6~ and D7~",
    9: "quadratic-form corners",
    10: "Dynkin classification",
    11: "ray representations and guessed recursion",
}

_results: dict[int, list[bool]] = {}


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "criterion(n): test belongs to acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item: pytest.Item, call: pytest.CallInfo):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        outcomes = _results.get(n)
        if not outcomes:
            status = "NOT RUN"
        else:
            status = "PASS" if all(outcomes) else "FAIL"
        count = len(outcomes or [])
        terminalreporter.write_line(f"criterion {n:2d} [{status}] {title} ({count} tests)")
