import pytest
from hypothesis import settings

from lamina.surface import make_surface, standard_pants_decomposition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def decomposition(g, r):
    return standard_pants_decomposition(make_surface(g, r))


@pytest.fixture(scope="session")
def s11():
    return decomposition(1, 1)


@pytest.fixture(scope="session")
def s04():
    return decomposition(0, 4)


@pytest.fixture(scope="session")
def s12():
    return decomposition(1, 2)


@pytest.fixture(scope="session")
def s05():
    return decomposition(0, 5)


@pytest.fixture(scope="session")
def s20():
    return decomposition(2, 0)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(mod.LINES):
            terminalreporter.write_line(mod.LINES[n])
