import pytest

from matroid_blowup import Graph, arrangement_of_graph, build_arrangement
from matroid_blowup.matroid import fano_configuration, four_point_line


@pytest.fixture(scope="session")
def k3():
    return arrangement_of_graph(Graph.complete(3))


@pytest.fixture(scope="session")
def k4():
    return arrangement_of_graph(Graph.complete(4))


@pytest.fixture(scope="session")
def l4():
    return build_arrangement(four_point_line())


@pytest.fixture(scope="session")
def f7():
    return build_arrangement(fano_configuration())


def lines_by_size(poset, size):
    return [x for x in poset.flat_ids if poset.rank(x) == 2 and len(poset[x].atoms) == size]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
