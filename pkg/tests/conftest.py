import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(id, summary)`` after the asserts."""
    entry = {"name": request.node.name, "line": None}
    _ACCEPTANCE_LINES.append(entry)

    def report(ident, summary):
        entry["line"] = f"criterion {ident}: {summary}"
        print(f"PASS {entry['line']}")

    yield report
    if entry["line"] is None:
        entry["line"] = f"{request.node.name}: failed before reporting"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and "criterion" in item.fixturenames:
        for entry in _ACCEPTANCE_LINES:
            if entry["name"] == item.name:
                entry["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE_LINES:
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status} {entry['line'] or entry['name']}")
