import pytest

from lapfam import Graph, combination_graph, resolver_graph


def _star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# Small named graphs shared across the suite.  Everything is n <= 6 so the
# cofactor-expansion characteristic polynomial oracle stays cheap.
CORPUS = {
    "k1": Graph.complete(1),
    "k2": Graph.complete(2),
    "k3": Graph.complete(3),
    "k4": Graph.complete(4),
    "p2": Graph.path(2),
    "p3": Graph.path(3),
    "p4": Graph.path(4),
    "p5": Graph.path(5),
    "p6": Graph.path(6),
    "star3": _star(3),
    "star5": _star(5),
    "paw": Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "c4": Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "two_isolated": Graph(2),
    "edge_plus_isolated": Graph(3, [(0, 1)]),
    "g_3_2": combination_graph(3, 2),
    "gplus_2_1": resolver_graph(2, 1),
    "gplus_2_2": resolver_graph(2, 2),
}


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_graph(request):
    return CORPUS[request.param]
