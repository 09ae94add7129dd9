import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# nodeid -> (criterion number, title, outcome)
_ACCEPTANCE: dict[str, tuple[int, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, title = marker.args
    if rep.when == "call":
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _ACCEPTANCE[item.nodeid] = (int(num), title, status)
    elif rep.when == "setup" and not rep.passed:
        status = "SKIP" if rep.skipped else "FAIL"
        _ACCEPTANCE[item.nodeid] = (int(num), title, status)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, status in sorted(_ACCEPTANCE.values()):
        terminalreporter.write_line(f"criterion {num} ({title}): {status}")
