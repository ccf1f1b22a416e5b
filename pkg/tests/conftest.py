import pytest
from hypothesis import HealthCheck, settings

from tests.families import CURVE, NOT_TAME, STRICT_CHAIN, SURFACE

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def surface():
    return SURFACE


@pytest.fixture
def strict_chain():
    return STRICT_CHAIN


@pytest.fixture
def curve():
    return CURVE


@pytest.fixture
def not_tame():
    return NOT_TAME


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import LOG
    if LOG:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LOG):
            terminalreporter.write_line(LOG[n])
