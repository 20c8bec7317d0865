import pytest

_CRITERIA: dict[str, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed at session end."""

    def _register(key: str, description: str):
        _CRITERIA[request.node.nodeid] = (key, description)

    return _register


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid in _CRITERIA:
        key, desc = _CRITERIA[report.nodeid]
        _CRITERIA[report.nodeid] = (key, f"{desc} -> {'PASS' if report.passed else 'FAIL'}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key, line in sorted(_CRITERIA.values()):
        terminalreporter.write_line(f"[{key}] {line}")
