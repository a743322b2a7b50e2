import itertools

import networkx as nx
import pytest

from dirflag.commonConst import *
from dirflag.dataStructures import ContractError, MorphismError, RetractionError
from dirflag.digraph import CDigraph, classifyDigraphMap, completeDigraph, constantMap, identityMap, unitInterval
from dirflag.complexes import directedFlagComplex
from dirflag.chains import bettiNumbers, omegaComplex
from dirflag.homotopy import CDflOracle, CEquivalenceCertificate, CMultiStepWitness, checkADeformationRetraction, \
    checkDeformationRetraction, checkDflDeformationRetraction, concatenateWitnesses, contractionCertificate, \
    greedyContract, identityCertificate, multiStepSearch, oneStep, oneStepA, oneStepDfl, oneStepDflRelative, \
    retractAToB0, reverseWitness, verifyCertificate, verifyWitness, witnessTransport
from dirflag.randomGraphs import createGenerator, randomDigraph, randomMapOfClass, randomNeighbourMap
from dirflag.experiments import fourPointSphere


def transitiveTriangle():
    return CDigraph(3, [(0, 1), (1, 2), (0, 2)])


def test_witnessShape():
    with pytest.raises(ContractError):
        CMultiStepWitness([])
    with pytest.raises(ContractError):
        CMultiStepWitness([(0, 1), (1, 1)], [])
    witness = CMultiStepWitness([(0, 1), (1, 1), (1, 0)], [True, False])
    assert len(witness) == 2
    assert witness.source == (0, 1) and witness.target == (1, 0)


def test_witnessAlgebra():
    first = CMultiStepWitness([(0, 1), (1, 1)], [True])
    second = CMultiStepWitness([(1, 1), (0, 0)], [False])
    joined = concatenateWitnesses(first, second)
    assert joined.maps == [(0, 1), (1, 1), (0, 0)]
    assert joined.forward == [True, False]
    assert reverseWitness(joined) == CMultiStepWitness([(0, 0), (1, 1), (0, 1)], [True, False])
    with pytest.raises(ContractError):
        concatenateWitnesses(second, first)
    moved = witnessTransport(first, post=(5, 6))
    assert moved.maps == [(5, 6), (6, 6)]
    moved = witnessTransport(first, pre=(1, 0, 1))
    assert moved.maps == [(1, 0, 1), (1, 1, 1)]


def test_oneStepOnReciprocalPair():
    K2 = completeDigraph(2)
    identity, swap = identityMap(2), (1, 0)
    assert oneStepA(identity, swap, K2, K2)
    assert not oneStepDfl(identity, swap, K2, K2)
    assert oneStepA(identity, constantMap(2, 0), K2, K2)
    assert not oneStepDfl(identity, constantMap(2, 0), K2, K2)


def test_oneStepDflOnUnitInterval():
    I = unitInterval()
    assert oneStepDfl(constantMap(2, 0), identityMap(2), I, I)
    assert oneStepDfl(identityMap(2), constantMap(2, 1), I, I)
    assert not oneStepDfl(identityMap(2), constantMap(2, 0), I, I)
    assert oneStep(constantMap(2, 0), identityMap(2), I, I, SYSTEM_DFL)
    assert not oneStep(constantMap(2, 0), identityMap(2), I, I, SYSTEM_DFL, fixed=[1])
    assert oneStepDflRelative(constantMap(2, 0), identityMap(2), I, I, [0])
    assert not oneStepDflRelative(constantMap(2, 0), identityMap(2), I, I, [1])
    with pytest.raises(ContractError):
        oneStep(constantMap(2, 0), identityMap(2), I, I, 7)


def test_oneStepNeedsValidMaps():
    K2 = completeDigraph(2)
    weakOnly = (0, 1, 0)
    with pytest.raises(MorphismError):
        oneStepDfl(weakOnly, weakOnly, transitiveTriangle(), K2)
    assert oneStepA(weakOnly, weakOnly, transitiveTriangle(), K2)
    with pytest.raises(MorphismError):
        oneStepA((1, 0), (1, 0), unitInterval(), unitInterval())


@pytest.mark.parametrize("G", [completeDigraph(2), unitInterval(), CDigraph(3, [(0, 1), (2, 1)]),
                               CDigraph(3, [(0, 1), (1, 2), (2, 0)]), transitiveTriangle()])
def test_dflConditionsAgreeWithCylinderClosure(G):
    oracle = CDflOracle(G, G)
    maps = [f for f in itertools.product(range(G.vertexCount), repeat=G.vertexCount)
            if classifyDigraphMap(f, G, G) >= MAP_TRIANGLE_COLLAPSING]
    for f, g in itertools.product(maps, repeat=2):
        assert oneStepDfl(f, g, G, G) == oracle.isOneStep(f, g)


def _digraphClasses(maxVertices):
    classes = []
    for n in range(1, maxVertices + 1):
        pairs = list(itertools.permutations(range(n), 2))
        found = []
        for mask in range(2 ** len(pairs)):
            G = CDigraph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            if not any(nx.is_isomorphic(G.toNetworkx(), other.toNetworkx()) for other in found):
                found.append(G)
        classes.extend(found)
    return classes


def test_dflConditionsAgreeWithCylinderClosureOnSmallDigraphs():
    classes = _digraphClasses(3)
    assert len(classes) == 20
    for G, H in itertools.product(classes, repeat=2):
        oracle = CDflOracle(G, H)
        maps = [f for f in itertools.product(range(H.vertexCount), repeat=G.vertexCount)
                if classifyDigraphMap(f, G, H) >= MAP_TRIANGLE_COLLAPSING]
        for f, g in itertools.product(maps, repeat=2):
            assert oneStepDfl(f, g, G, H) == oracle.isOneStep(f, g), (G, H, f, g)


@pytest.mark.parametrize("seed", range(10))
def test_dflConditionsAgreeWithCylinderClosureOnRandomDigraphs(seed):
    rng = createGenerator(seed)
    G = randomDigraph(rng, int(rng.integers(4, 6)), 0.4)
    H = randomDigraph(rng, 4, 0.5)
    oracle = CDflOracle(G, H)
    for _ in range(10):
        f = randomMapOfClass(rng, G, H, MAP_TRIANGLE_COLLAPSING)
        if f is None:
            continue
        for isForward in (True, False):
            g = randomNeighbourMap(rng, f, H, isForward)
            if classifyDigraphMap(g, G, H) < MAP_TRIANGLE_COLLAPSING:
                continue
            assert oneStepDfl(f, g, G, H) == oracle.isOneStep(f, g)
            assert oneStepDfl(g, f, G, H) == oracle.isOneStep(g, f)


def test_searchReciprocalPair():
    K2 = completeDigraph(2)
    result = multiStepSearch(identityMap(2), constantMap(2, 0), K2, K2, SYSTEM_DFL, 1000)
    assert result.status == SEARCH_ABSENT
    result = multiStepSearch(identityMap(2), constantMap(2, 0), K2, K2, SYSTEM_A, 1000)
    assert result.isFound
    assert len(result.witness) == 1
    assert verifyWitness(result.witness, K2, K2, SYSTEM_A, source=identityMap(2), target=constantMap(2, 0))[0]


def test_searchEdgeCases():
    K2 = completeDigraph(2)
    result = multiStepSearch(identityMap(2), identityMap(2), K2, K2, SYSTEM_DFL, 1)
    assert result.isFound and len(result.witness) == 0
    result = multiStepSearch(identityMap(2), constantMap(2, 0), K2, K2, SYSTEM_DFL, 1)
    assert result.status == SEARCH_INCONCLUSIVE
    result = multiStepSearch(identityMap(2), constantMap(2, 0), K2, K2, SYSTEM_A, 1000, fixed=[1])
    assert result.status == SEARCH_ABSENT
    with pytest.raises(MorphismError):
        multiStepSearch((0, 1, 0), (0, 1, 0), transitiveTriangle(), K2, SYSTEM_DFL, 10)


def test_searchFindsMultiStepWitness():
    path = CDigraph(3, [(0, 1), (2, 1)])
    result = multiStepSearch(identityMap(3), constantMap(3, 1), path, path, SYSTEM_DFL, 10000)
    assert result.isFound
    isOk, failures = verifyWitness(result.witness, path, path, SYSTEM_DFL,
                                   source=identityMap(3), target=constantMap(3, 1))
    assert isOk, failures


def test_verifyWitnessNamesStep():
    K2 = completeDigraph(2)
    witness = CMultiStepWitness([identityMap(2), (0, 0)], [True])
    isOk, failures = verifyWitness(witness, K2, K2, SYSTEM_DFL)
    assert not isOk
    assert failures[0].startswith("step 0")


def test_certificates():
    assert verifyCertificate(identityCertificate(fourPointSphere()), SYSTEM_DFL)[0]
    I, point = unitInterval(), CDigraph(1)
    witness = CMultiStepWitness([constantMap(2, 0), identityMap(2)], [True])
    cert = CEquivalenceCertificate(I, point, constantMap(2, 0), (0,), witness, CMultiStepWitness([(0,)]))
    assert verifyCertificate(cert, SYSTEM_DFL) == (True, [])
    cert = CEquivalenceCertificate(I, point, constantMap(2, 0), (1,), witness, CMultiStepWitness([(0,)]))
    isOk, failures = verifyCertificate(cert, SYSTEM_DFL)
    assert not isOk and any(s.startswith("G:") for s in failures)


def test_starRetraction():
    star = transitiveTriangle()
    witness = checkDflDeformationRetraction(star, [0], constantMap(3, 0))
    assert witness is not None and witness.forward == [False]
    reciprocalStar = CDigraph(3, [(0, 1), (1, 2), (0, 2), (1, 0)])
    assert checkDflDeformationRetraction(reciprocalStar, [0], constantMap(3, 0)) is None
    assert checkADeformationRetraction(reciprocalStar, [0], constantMap(3, 0)) is not None
    assert checkDeformationRetraction(star, [0], constantMap(3, 0), SYSTEM_A) is not None


def test_retractionContract():
    star = transitiveTriangle()
    with pytest.raises(RetractionError):
        checkADeformationRetraction(star, [0, 1], constantMap(3, 0))
    with pytest.raises(RetractionError):
        checkADeformationRetraction(star, [0], (0, 0, 1))


def test_retractAToB0():
    assert retractAToB0(unitInterval(), 0, 1) == (True, True)
    assert retractAToB0(completeDigraph(2), 0, 1) == (True, False)
    coned = CDigraph(3, [(0, 1), (0, 2), (1, 2), (2, 1)])
    assert retractAToB0(coned, 0, 1) == (True, False)
    assert retractAToB0(CDigraph(3, [(0, 1), (0, 2)]), 0, 1) == (False, False)
    with pytest.raises(ContractError):
        retractAToB0(CDigraph(3, [(0, 1)]), 0, 2)


def test_greedyContractOrientedPseudoTree():
    tree = CDigraph(5, [(0, 1), (2, 1), (2, 3), (4, 3)])
    steps = greedyContract(tree, SYSTEM_DFL)
    assert steps is not None and len(steps) == 4
    cert = contractionCertificate(tree, steps, SYSTEM_DFL)
    assert verifyCertificate(cert, SYSTEM_DFL) == (True, [])


def test_greedyContractNonOrientedPseudoTree():
    tree = CDigraph(3, [(0, 1), (1, 0), (1, 2)])
    assert greedyContract(tree, SYSTEM_DFL) is None
    betti = bettiNumbers(omegaComplex(directedFlagComplex(tree, 2), 1))
    assert betti[1] == len(tree.edges) - tree.vertexCount + 1
    steps = greedyContract(tree, SYSTEM_A)
    assert verifyCertificate(contractionCertificate(tree, steps, SYSTEM_A), SYSTEM_A)[0]


def test_greedyContractFourPointSphere():
    G = fourPointSphere()
    assert greedyContract(G, SYSTEM_DFL) is None
    steps = greedyContract(G, SYSTEM_A)
    assert steps is not None
    assert verifyCertificate(contractionCertificate(G, steps, SYSTEM_A), SYSTEM_A)[0]


def test_greedyContractTrivialCases():
    assert greedyContract(CDigraph(0), SYSTEM_DFL) is None
    assert greedyContract(CDigraph(2), SYSTEM_DFL) is None
    assert greedyContract(CDigraph(1), SYSTEM_DFL) == []
