"""Shared pytest plumbing: surface the acceptance verdict lines.

The acceptance tests record one pass/fail line each; printing them from a
terminal-summary hook keeps them visible even under output capture.
"""

ACCEPTANCE_LINES: list[str] = []


def record_acceptance_line(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
