import pytest

from certificates import Certifier
from checks import CheckContext
from graph_core import heawood_standard, petersen_graph, rewire_edge


@pytest.fixture(scope="session")
def heawood():
    return heawood_standard()


@pytest.fixture(scope="session")
def context(heawood):
    ctx = CheckContext(heawood)
    ctx.warm()
    return ctx


@pytest.fixture(scope="session")
def aut(context):
    return context.group


@pytest.fixture(scope="session")
def census(context):
    return context.census


@pytest.fixture(scope="session")
def certificate(context):
    return Certifier(context=context).classify()


@pytest.fixture(scope="session")
def mutated_context(heawood):
    # labels 1-2 dropped, 1-8 added
    return CheckContext(rewire_edge(heawood, (0, 1), (0, 7)))


@pytest.fixture(scope="session")
def petersen_context():
    return CheckContext(petersen_graph())
