"""Shared pytest plumbing.

The acceptance tests append one human-readable pass/fail line per
criterion to ACCEPTANCE_LINES; this hook prints them at the end of the
run so they are visible even when pytest captures stdout.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
