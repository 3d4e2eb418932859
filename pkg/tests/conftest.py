import pytest

from amitsur.groups import presentations_of_order


def presentations_up_to(max_order):
    for N in range(1, max_order + 1):
        yield from presentations_of_order(N)


@pytest.fixture(scope="session")
def small_presentations():
    return list(presentations_up_to(200))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
