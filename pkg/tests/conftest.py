import pytest

from polycut.complex import skeleton_graph
from polycut.constructions import nontrivial_cut_polytope

from helpers import OCTAHEDRON


@pytest.fixture(scope="session")
def octahedron():
    return OCTAHEDRON


@pytest.fixture(scope="session")
def p4():
    return nontrivial_cut_polytope(4)


@pytest.fixture(scope="session")
def p4_graph(p4):
    return skeleton_graph(p4.complex)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
