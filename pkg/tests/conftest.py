"""Shared test configuration.

Provides the ``record`` fixture used by the acceptance tests to log one
pass/fail line per criterion, and a terminal-summary hook that prints the
collected lines in a dedicated section at the end of the run.
"""

import pytest

# (number, passed, description, detail) tuples, appended in test order.
ACCEPTANCE_RESULTS = []


@pytest.fixture
def record():
    """Record an acceptance criterion outcome, then assert it.

    Usage::

        record(3, ok, "witness condition matches brute force", f"checked {k}")

    The line is logged even when ``ok`` is false, so a failing criterion
    still shows up in the summary as FAIL rather than vanishing.
    """

    def _record(number, passed, description, detail=""):
        ACCEPTANCE_RESULTS.append((number, bool(passed), description, detail))
        assert passed, f"criterion {number:02d} failed: {description} ({detail})"

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, description, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:02d} [{status}] {description}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
