import pytest

from cliffgroups.enumerator import enumerate_taxonomy

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def report3():
    return enumerate_taxonomy(3, 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
