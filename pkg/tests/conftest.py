import pytest

_ACCEPTANCE = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    # a failing fixture never reaches the call phase, so count it here
    if call.when == "setup" and call.excinfo is None:
        return
    if call.when not in ("setup", "call"):
        return
    number, title = marker.args
    passed = call.excinfo is None
    _ACCEPTANCE.append((number, title, passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] AC{number:02d} {title}")
