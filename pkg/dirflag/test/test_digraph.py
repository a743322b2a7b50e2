from fractions import Fraction

import pytest

from dirflag.commonConst import *
from dirflag.dataStructures import ContractError
from dirflag.digraph import CDigraph, CWeightedDigraph, boxProduct, classifyDigraphMap, completeDigraph, \
    composeMaps, crossProduct, edgeSubdivide, inducedSubgraph, isContraction, isDag, isOriented, isPathCollapsing, isPseudoTree, \
    reciprocalPairs, shortestPathQuasimetric, starCentres, inverseStarCentres, subdivisionMaps, unitInterval, \
    weakComponents
from dirflag.experiments import fourPointSphere, reciprocalPair, weightedTriangle


def transitiveTriangle():
    return CDigraph(3, [(0, 1), (1, 2), (0, 2)])


def test_digraphRejectsLoopsAndRange():
    with pytest.raises(ContractError):
        CDigraph(2, [(0, 0)])
    with pytest.raises(ContractError):
        CDigraph(2, [(0, 2)])
    with pytest.raises(ContractError):
        CDigraph(2, [(0, 1)], labels=["a", "a"])


def test_duplicateEdgesCollapse():
    G = CDigraph(2, [(0, 1), (0, 1)])
    assert len(G.edges) == 1
    assert G.isTooreq(0, 0) and G.isTooreq(0, 1) and not G.isTooreq(1, 0)


def test_weightedDigraphNeedsPositiveWeights():
    G = CDigraph(2, [(0, 1)])
    with pytest.raises(ContractError):
        CWeightedDigraph(G, {(0, 1): 0})
    with pytest.raises(ContractError):
        CWeightedDigraph(G, {})
    assert CWeightedDigraph(G).weight == {(0, 1): 1}


def test_classifyTriangleIntoReciprocalPair():
    # outer vertices of the clique meet, the middle one does not
    assert classifyDigraphMap((0, 1, 0), transitiveTriangle(), completeDigraph(2)) == MAP_WEAK
    assert classifyDigraphMap((0, 0, 1), transitiveTriangle(), completeDigraph(2)) == MAP_TRIANGLE_COLLAPSING
    assert classifyDigraphMap((0, 1, 2), transitiveTriangle(), transitiveTriangle()) == MAP_STRONG
    assert classifyDigraphMap((1, 0), unitInterval(), unitInterval()) == MAP_NOT_WEAK
    with pytest.raises(ContractError):
        classifyDigraphMap((0, 5), unitInterval(), unitInterval())


def test_composeMaps():
    assert composeMaps((1, 2, 0), (5, 6, 7)) == (6, 7, 5)


def test_products():
    K2 = completeDigraph(2)
    assert len(crossProduct(K2, unitInterval()).edges) == 8
    box = boxProduct(K2, unitInterval())
    assert len(box.edges) == 6
    assert box.edges <= crossProduct(K2, unitInterval()).edges


def test_reciprocalPairsOfFourPointSphere():
    G = fourPointSphere()
    assert reciprocalPairs(G) == {frozenset((1, 2))}
    assert not isOriented(G)
    assert isOriented(transitiveTriangle())
    assert G.label(3) == "S"


def test_shapes():
    assert isDag(transitiveTriangle())
    assert not isDag(completeDigraph(2))
    assert isPseudoTree(CDigraph(3, [(0, 1), (2, 1)]))
    assert isPseudoTree(CDigraph(2, [(0, 1), (1, 0)]))
    assert not isPseudoTree(transitiveTriangle())
    assert weakComponents(CDigraph(3, [(0, 1)])) == [[0, 1], [2]]
    assert starCentres(transitiveTriangle()) == [0]
    assert inverseStarCentres(transitiveTriangle()) == [2]


def test_isPathCollapsing():
    path = CDigraph(3, [(0, 1), (1, 2)])
    assert isPathCollapsing((0, 0, 0), path)
    assert isPathCollapsing((0, 0, 2), path)
    assert not isPathCollapsing((0, 1, 0), path)


def test_shortestPathQuasimetric():
    d = shortestPathQuasimetric(weightedTriangle())
    assert d[0][1] == 2 and d[1][2] == 2 and d[0][2] == 3
    assert d[2][0] == INF
    assert d[1][1] == 0


def test_inclusionIsContraction():
    W = weightedTriangle()
    S = {(0, 1): (Fraction(1, 2), Fraction(1, 2))}
    assert isContraction((0, 1, 2), W, edgeSubdivide(W, S))


def test_edgeSubdivideReciprocalPair():
    S = {(0, 1): (Fraction(1, 2), Fraction(1, 2)), (1, 0): (Fraction(1, 2), Fraction(1, 2))}
    Ws = edgeSubdivide(reciprocalPair(), S)
    assert Ws.vertexCount == 4
    assert Ws.weight == {(0, 2): Fraction(1, 2), (2, 1): Fraction(1, 2),
                         (1, 3): Fraction(1, 2), (3, 0): Fraction(1, 2)}
    assert Ws.graph.label(2) == "a>b:1"


def test_subdivisionChecks():
    W = reciprocalPair()
    with pytest.raises(ContractError):
        edgeSubdivide(W, {(0, 1): (Fraction(1, 2), Fraction(1, 3))})
    with pytest.raises(ContractError):
        edgeSubdivide(W, {(0, 1): (Fraction(3, 2), Fraction(-1, 2))})
    with pytest.raises(ContractError):
        edgeSubdivide(weightedTriangle(), {(2, 0): (Fraction(1, 2), Fraction(1, 2))})


def test_subdivisionMaps():
    S = {(0, 1): (Fraction(1, 2), Fraction(1, 2)), (1, 0): (Fraction(1, 2), Fraction(1, 2))}
    f, g, h = subdivisionMaps(reciprocalPair(), S)
    assert f == (0, 1)
    assert g == (0, 1, 1, 0)
    assert h == (0, 1, 2, 3)

    S = {(0, 2): (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))}
    f, g, h = subdivisionMaps(weightedTriangle(), S)
    assert g == (0, 1, 2, 0, 2)
    assert h == (0, 1, 2, 0, 4)


def test_inducedSubgraph():
    sub, vertices = inducedSubgraph(fourPointSphere(), [3, 1, 2])
    assert vertices == [1, 2, 3]
    assert sub.edges == {(0, 1), (1, 0), (2, 0), (2, 1)}
    assert sub.labels == ("W", "E", "S")
