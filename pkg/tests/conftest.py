"""Collects outcomes of tests marked ``criterion(n)`` and prints one
pass/fail line per acceptance criterion at the end of the session."""

from collections import defaultdict

import pytest

TITLES = {
    1: "adjoint H^2 table of cga(d=2), two_ell 0..5",
    2: "H^2 of cga(d=3) at two_ell 1, 2, 3",
    3: "H^2 of cga(d=1) at two_ell 0..4 and 6",
    4: "H^2 of mass extensions",
    5: "invariant cocycle and coboundary dimensions",
    6: "Hochschild-Serre prediction equals direct H^2",
    7: "property suites",
}

_results: dict[int, list[tuple[str, bool]]] = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results[marker.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        checks = _results[n]
        passed = sum(ok for _, ok in checks)
        status = "PASS" if passed == len(checks) else "FAIL"
        line = f"criterion {n} [{TITLES.get(n, '')}]: {status} ({passed}/{len(checks)} checks)"
        failing = [name for name, ok in checks if not ok]
        if failing:
            line += "; failing: " + ", ".join(failing)
        tr.write_line(line)
