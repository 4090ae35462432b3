import pytest

from lambdagen.codec import BinMatrix

EXAMPLE_A = ((0, 1, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 1, 0))
EXAMPLE_B = ((0, 0, 1, 1), (0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 0))


@pytest.fixture
def ex_a():
    return BinMatrix.from_grid(EXAMPLE_A)


@pytest.fixture
def ex_b():
    return BinMatrix.from_grid(EXAMPLE_B)


_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        number, title = marker.args
        _criteria.append((number, title, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"C{number:<2} {status}  {title}  ({duration:.1f}s)")
