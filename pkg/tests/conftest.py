"""Shared fixtures: the acceptance-gate recorder, which replays one
pass/fail line per criterion in the terminal summary so the lines survive
output capture."""

import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    """Record and assert one acceptance criterion verdict."""

    def record(number: int, title: str, ok: bool) -> None:
        line = f"criterion {number:2d} ({title}): {'PASS' if ok else 'FAIL'}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
