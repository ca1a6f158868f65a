import pytest
from hypothesis import settings

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

# Filled by test_acceptance.py, one (criterion, passed, detail) entry per check.
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  ({detail})")


@pytest.fixture(scope="session")
def shared_memo():
    return {}
