"""Shared test configuration.

Registers a conservative hypothesis profile (exact arithmetic makes single
examples slow, so per-example deadlines are disabled, and example generation
is derandomized so runs are reproducible) and prints a one-line PASS/FAIL
verdict for every acceptance criterion at the end of the run.
"""
from __future__ import annotations

import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


_CRITERION = re.compile(r"test_criterion_(\d+)_([a-z0-9_]+)")
_verdicts: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    found = _CRITERION.search(report.nodeid)
    if not found:
        return
    number, slug = int(found.group(1)), found.group(2)
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _verdicts[number] = (report.outcome, slug)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_verdicts):
        outcome, slug = _verdicts[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} ({slug}): {verdict}")
