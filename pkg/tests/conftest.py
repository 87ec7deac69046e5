"""Per-criterion PASS/FAIL summary for the acceptance suite."""

import pytest

_CRITERIA = {
    1: "sg_delta equals sg_combination",
    2: "MDI equals the sparse-grid sum",
    3: "reference error values",
    4: "1-d rule correctness",
    5: "expression collapse independent of K",
    6: "complexity growth fits",
    7: "Monte Carlo convergence slope",
    8: "high-dimensional smoke run",
}

_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    failed = rep.failed  # any phase failing fails the criterion
    if rep.when == "call" or failed:
        _outcomes.setdefault(n, []).append(not failed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_outcomes):
        runs = _outcomes[n]
        status = "PASS" if all(runs) else "FAIL"
        tr.write_line(f"criterion {n}: {status}  {_CRITERIA.get(n, '')} "
                      f"({sum(runs)}/{len(runs)} checks)")
