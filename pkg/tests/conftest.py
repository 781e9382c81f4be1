import pytest

from sumbounds.makarov import SumProblem


@pytest.fixture
def paper_problem():
    """X ~ N(1, 0.1^2), Y ~ N(1.5, 0.15^2)."""
    return SumProblem.from_params(1.0, 0.1, 1.5, 0.15)


@pytest.fixture
def equal_problem():
    return SumProblem.from_params(1.0, 0.1, 1.5, 0.1)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
