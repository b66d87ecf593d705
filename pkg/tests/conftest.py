import pytest

_CRITERIA: list[str] = []


@pytest.fixture
def criterion_log():
    """Collects one verdict line per acceptance criterion for the terminal summary."""
    return _CRITERIA.append


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
