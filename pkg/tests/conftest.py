"""Shared pytest config: per-criterion verdict lines for the acceptance suite."""

import re

import pytest

_CRITERION_RE = re.compile(r"test_criterion_(\d+)_(\w+)")
_verdicts = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    match = _CRITERION_RE.search(item.name)
    if not match:
        return
    number = int(match.group(1))
    label = match.group(2).replace("_", " ")
    if report.when == "call":
        _verdicts[number] = (label, report.passed)
    elif report.when == "setup" and not report.passed:
        _verdicts[number] = (label, False)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_verdicts):
        label, passed = _verdicts[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"CRITERION {number:2d} {verdict} — {label}")
