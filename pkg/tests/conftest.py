import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    from degreg.catalog import load_catalog

    return {e.name: e for e in load_catalog()}


@pytest.fixture(scope="session")
def reference_labelled():
    from degreg.proof import reference_labelled

    return {name: reference_labelled(name) for name in ("N1", "N2", "N3", "N4", "N5", "N6")}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def classification():
    """The orientable (12, 7) run, shared by every test that needs it."""
    from degreg.enumeration import SearchConfig, enumerate_degree_regular

    return enumerate_degree_regular(12, 7, SearchConfig(orientable_only=True))
