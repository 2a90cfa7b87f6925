import pytest

from pvfuchs.catalog import fixture


@pytest.fixture(scope="session")
def fx():
    return lambda name: fixture(name).value


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1][len("test_criterion_"):]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        num, _, title = name.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d} {title.replace('_', ' ')}: "
                                    f"{_CRITERIA[name]}")
