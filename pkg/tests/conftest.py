import numpy as np
import pytest

from triexp.prony import FitOptions, fit
from triexp.published import gdp_hu_model
from triexp.series import load_fixture

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def gdp():
    return load_fixture("gdp_hu_eq1")


@pytest.fixture(scope="session")
def published():
    return gdp_hu_model()


@pytest.fixture(scope="session")
def gdp_fit(gdp):
    return fit(gdp, FitOptions(15))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
