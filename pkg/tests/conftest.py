import pytest

acceptance_lines = []


@pytest.fixture(scope="session")
def scoreboard():
    """Shared sink for the acceptance criterion result lines."""
    return acceptance_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # emitted outside capture, so the scoreboard shows on every full run
    if acceptance_lines:
        terminalreporter.section("acceptance scoreboard")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
