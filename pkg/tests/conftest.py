import helpers  # noqa: F401  (ensures tests/ is importable before collection)

from test_acceptance import _criterion_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)
