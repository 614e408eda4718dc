import pytest

from landin.traces import PrefixLanguage


@pytest.fixture
def L1():
    return PrefixLanguage.of("ab", ["ab"], 3)


@pytest.fixture
def L2():
    return PrefixLanguage.of("bc", ["bc"], 3)


@pytest.fixture
def running(L1, L2):
    return [L1, L2]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
