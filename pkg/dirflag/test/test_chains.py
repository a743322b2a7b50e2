from fractions import Fraction

import numpy as np
import pytest

from dirflag.commonConst import *
from dirflag.dataStructures import ContractError, DirflagError, TruncationError, WitnessError
from dirflag.digraph import CDigraph, classifyDigraphMap, completeDigraph, composeMaps, constantMap, identityMap, \
    unitInterval
from dirflag.complexes import CPathComplex, allowedPathComplex, cylinder, directedFlagComplex
from dirflag.chains import bettiNumbers, checkBoundarySquaredZero, checkChainHomotopy, checkChainMap, \
    chainHomotopyFromWitness, cylinderMap, eulerCharacteristic, eulerCharacteristicFromBetti, homotopyVanishesOn, inducedChainMap, liftChain, \
    liftingMap, mapChain, omegaComplex, pathFaces, regularBoundary
from dirflag.homotopy import CMultiStepWitness, oneStepDfl
from dirflag.linearAlgebra import CField, matrixProduct
from dirflag.randomGraphs import createGenerator, randomDigraph, randomMapOfClass, randomNeighbourMap
from dirflag.experiments import fourPointSphere


def test_pathFaces():
    assert pathFaces((0, 1, 2)) == [(1, (1, 2)), (-1, (0, 2)), (1, (0, 1))]
    assert pathFaces((0, 1, 0)) == [(1, (1, 0)), (1, (0, 1))]
    assert pathFaces((3,)) == []


def test_regularBoundary():
    assert regularBoundary({(0, 1, 2): Fraction(1)}) == {(1, 2): 1, (0, 2): -1, (0, 1): 1}
    assert regularBoundary({(0, 1, 0): Fraction(1)}) == {(1, 0): 1, (0, 1): 1}
    assert regularBoundary(regularBoundary({(0, 1, 2, 3): Fraction(1)})) == {}
    with pytest.raises(ContractError):
        regularBoundary({(0, 0): Fraction(1)})


def test_mapAndLiftChains():
    field = CField()
    assert mapChain((0, 0, 1), {(0, 1): Fraction(1), (1, 2): Fraction(2)}, field) == {(0, 1): 2}
    assert liftChain({(0, 1): Fraction(1)}, field) == {(0, 1, 3): 1, (0, 2, 3): -1}
    assert cylinderMap((0, 1), (1, 1)) == (0, 1, 1, 1)


def test_bettiNumbersOfFourPointSphere():
    G = fourPointSphere()
    for field in (CField(), CField(2), CField(3)):
        assert bettiNumbers(omegaComplex(directedFlagComplex(G, 3), 2, field)) == [1, 0, 1]
        assert bettiNumbers(omegaComplex(allowedPathComplex(G, 3), 2, field)) == [1, 0, 0]
    assert eulerCharacteristic(directedFlagComplex(G, 3)) == 2
    assert eulerCharacteristicFromBetti([1, 0, 1]) == 2


def test_reciprocalPairCycle():
    K2 = completeDigraph(2)
    assert bettiNumbers(omegaComplex(directedFlagComplex(K2, 2), 1)) == [1, 1]
    # the 2-path 010 fills the cycle once walks are allowed
    assert bettiNumbers(omegaComplex(allowedPathComplex(K2, 2), 1)) == [1, 0]


def test_omegaDimensions():
    path = CDigraph(3, [(0, 1), (1, 2)])
    rep = omegaComplex(allowedPathComplex(path, 2), 1)
    assert rep.dimensions() == [3, 2, 0]
    square = CDigraph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    rep = omegaComplex(allowedPathComplex(square, 2), 1)
    # 013 - 023 is the only boundary-regular combination
    assert rep.dimension(2) == 1
    assert bettiNumbers(rep) == [1, 0]
    assert checkBoundarySquaredZero(rep)


def test_coordinatesOutsideOmega():
    rep = omegaComplex(allowedPathComplex(CDigraph(3, [(0, 1), (1, 2)]), 2), 1)
    with pytest.raises(DirflagError):
        rep.coordinatesOfChain(2, {(0, 1, 2): Fraction(1)})


def test_omegaContracts():
    with pytest.raises(TruncationError):
        omegaComplex(directedFlagComplex(completeDigraph(3), 1), 2)
    with pytest.raises(ContractError):
        omegaComplex(CPathComplex(2, 1, [(0, 0)]), 1)
    rep = omegaComplex(directedFlagComplex(completeDigraph(3), 2), 1)
    with pytest.raises(TruncationError):
        bettiNumbers(rep, 2)


def test_truncationSensitiveTopDegree():
    rep = omegaComplex(directedFlagComplex(completeDigraph(3), 1), 1)
    assert rep.isTruncationSensitive
    rep = omegaComplex(directedFlagComplex(completeDigraph(3), 2), 2)
    assert not rep.isTruncationSensitive


def test_derangementTopBetti():
    rep = omegaComplex(directedFlagComplex(completeDigraph(3), 2), 2)
    assert bettiNumbers(rep)[2] == 2


def test_inducedChainMapOfIdentity():
    rep = omegaComplex(directedFlagComplex(fourPointSphere(), 3), 2)
    maps = inducedChainMap(identityMap(4), rep, rep)
    assert checkChainMap(maps, rep, rep)
    for k, matrix in enumerate(maps):
        assert np.array_equal(matrix, rep.field.identity(rep.dimension(k)))


def test_liftingMap():
    P = directedFlagComplex(unitInterval(), 1)
    rep = omegaComplex(P, 1)
    cylinderRep = omegaComplex(cylinder(P), 1)
    matrix = liftingMap(rep, cylinderRep, 1)
    assert matrix.shape == (cylinderRep.dimension(2), 1)
    with pytest.raises(TruncationError):
        liftingMap(rep, omegaComplex(directedFlagComplex(unitInterval(), 1), 1), 1)


def test_chainHomotopyFromWitness():
    I = unitInterval()
    src = omegaComplex(directedFlagComplex(I, 1), 1)
    dst = omegaComplex(directedFlagComplex(I, 2), 1)
    f, g = constantMap(2, 0), identityMap(2)
    L = chainHomotopyFromWitness(CMultiStepWitness([f, g], [True]), src, dst)
    assert len(L) == 2
    assert checkChainHomotopy(L, f, g, src, dst)
    assert homotopyVanishesOn(L, src, [0])
    assert not homotopyVanishesOn(L, src, [1])

    L = chainHomotopyFromWitness(CMultiStepWitness([g, f], [False]), src, dst)
    assert checkChainHomotopy(L, g, f, src, dst)


def test_chainHomotopyRejectsBadStep():
    K2 = completeDigraph(2)
    src = omegaComplex(directedFlagComplex(K2, 1), 1)
    dst = omegaComplex(directedFlagComplex(K2, 2), 1)
    with pytest.raises(WitnessError) as error:
        chainHomotopyFromWitness(CMultiStepWitness([(0, 1), (1, 0)], [True]), src, dst)
    assert error.value.step == 0


def _inclusions(n):
    return tuple(2 * v for v in range(n)), tuple(2 * v + 1 for v in range(n))


@pytest.mark.parametrize("seed", range(6))
def test_liftingMapSatisfiesProductRule(seed):
    rng = createGenerator(seed)
    G = randomDigraph(rng, 4, 0.35)
    field = CField()
    P = allowedPathComplex(G, 2)
    rep = omegaComplex(P, 1, field)
    cylinderRep = omegaComplex(cylinder(P), 1, field)
    bottom, top = _inclusions(G.vertexCount)
    bottomMaps = inducedChainMap(bottom, rep, cylinderRep)
    topMaps = inducedChainMap(top, rep, cylinderRep)
    for k in (0, 1):
        left = matrixProduct(cylinderRep.boundary[k + 1], liftingMap(rep, cylinderRep, k), field)
        if k > 0:
            left = left + matrixProduct(liftingMap(rep, cylinderRep, k - 1), rep.boundary[k], field)
        assert np.array_equal(left, topMaps[k] - bottomMaps[k])


def _randomWitness(rng, G, steps):
    maps, forward = [identityMap(G.vertexCount)], []
    for _ in range(steps):
        isForward = bool(rng.random() < 0.5)
        last = maps[-1]
        for _ in range(20):
            g = randomNeighbourMap(rng, last, G, isForward)
            if g == last or classifyDigraphMap(g, G, G) < MAP_TRIANGLE_COLLAPSING:
                continue
            if (isForward and oneStepDfl(last, g, G, G)) or (not isForward and oneStepDfl(g, last, G, G)):
                maps.append(g)
                forward.append(isForward)
                break
    return CMultiStepWitness(maps, forward)


@pytest.mark.parametrize("seed", range(8))
def test_chainHomotopyFromRandomWitness(seed):
    rng = createGenerator(seed)
    G = randomDigraph(rng, 4, 0.45)
    witness = _randomWitness(rng, G, 4)
    src = omegaComplex(directedFlagComplex(G, 2), 1)
    dst = omegaComplex(directedFlagComplex(G, 3), 2)
    L = chainHomotopyFromWitness(witness, src, dst)
    assert checkChainHomotopy(L, witness.source, witness.target, src, dst)


@pytest.mark.parametrize("seed", range(6))
def test_inducedChainMapsCompose(seed):
    rng = createGenerator(seed)
    G = randomDigraph(rng, 4, 0.5)
    H = randomDigraph(rng, 3, 0.6)
    K = completeDigraph(3)
    f = randomMapOfClass(rng, G, H, MAP_TRIANGLE_COLLAPSING) or constantMap(4, 0)
    g = randomMapOfClass(rng, H, K, MAP_TRIANGLE_COLLAPSING) or constantMap(3, 0)
    h = composeMaps(f, g)
    assert classifyDigraphMap(h, G, K) >= MAP_TRIANGLE_COLLAPSING
    reps = [omegaComplex(directedFlagComplex(X, 3), 2) for X in (G, H, K)]
    fMaps = inducedChainMap(f, reps[0], reps[1])
    gMaps = inducedChainMap(g, reps[1], reps[2])
    hMaps = inducedChainMap(h, reps[0], reps[2])
    assert len(hMaps) == 4
    for k in range(4):
        assert np.array_equal(hMaps[k], matrixProduct(gMaps[k], fMaps[k], CField()))
