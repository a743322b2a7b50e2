# chains.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Regular chain complexes: Omega bases, boundaries, Betti numbers,
# induced chain maps, lifting map and chain homotopies
# ---------------------------------------------------------

import logging

import numpy as np

from .dataStructures import *
from .complexes import cylinder, findPathMorphismViolation, imagePath, isRegularPath, liftedPath, skeleton
from .linearAlgebra import CField, isZeroMatrix, matrixProduct, nullSpace, rank

logger = logging.getLogger(__name__)


# --------------------------- chains as {path: coefficient} ---------------------------

def pathFaces(path):
    """(sign, face) for the regular faces of a path; irregular faces are dropped"""
    faces = []
    if len(path) < 2:
        return faces
    for i in range(len(path)):
        face = path[:i] + path[i + 1:]
        if isRegularPath(face):
            faces.append((1 if i % 2 == 0 else -1, face))
    return faces


def addTerm(chain, path, coefficient, field):
    value = field.reduce(np.array([chain.get(path, field.zero) + coefficient], dtype=object))[0]
    if value == 0:
        chain.pop(path, None)
    else:
        chain[path] = value


def regularBoundary(chain, field=None):
    if field is None:
        field = CField()
    result = {}
    for path, coefficient in chain.items():
        if not isRegularPath(path):
            raise ContractError("irregular path " + str(path) + " in a chain")
        for sign, face in pathFaces(path):
            addTerm(result, face, field.element(sign) * coefficient, field)
    return result


def mapChain(f, chain, field):
    """f(p) when f(p) is regular, 0 otherwise"""
    result = {}
    for path, coefficient in chain.items():
        image = imagePath(f, path)
        if isRegularPath(image):
            addTerm(result, image, coefficient, field)
    return result


def liftChain(chain, field):
    """sum over i of (-1)^i (v0,0)...(vi,0)(vi,1)...(vk,1), cylinder vertex (v, i) = 2v + i"""
    result = {}
    for path, coefficient in chain.items():
        for i in range(len(path)):
            sign = field.element(1 if i % 2 == 0 else -1)
            addTerm(result, liftedPath(path, i), sign * coefficient, field)
    return result


def cylinderMap(f, g):
    """vertex map on V x {0, 1} equal to f on the bottom and g on the top"""
    F = []
    for v in range(len(f)):
        F.append(f[v])
        F.append(g[v])
    return tuple(F)


# --------------------------- the Omega chain complex ---------------------------

class CChainComplex:
    """
    Bases of Omega_k(P) for k = 0..builtDegree, in the path coordinates of P_k.
    Basis vector j has its free row free[k][j] as first nonzero entry, equal
    to 1, and zeros at the other free rows: coordinates are read off there.
    boundary[k] is the matrix of d_k: Omega_k -> Omega_{k-1} in these bases.
    """
    def __init__(self, complex, field, topDegree):
        self.complex = complex
        self.field = field
        self.topDegree = topDegree
        self.builtDegree = -1
        self.paths = []
        self.index = []
        self.omega = []
        self.free = []
        self.boundary = []
        self.isTruncationSensitive = False
        self._ranks = {}

    def dimension(self, k):
        if 0 <= k <= self.builtDegree:
            return self.omega[k].shape[1]
        return 0

    def dimensions(self):
        return [self.dimension(k) for k in range(self.builtDegree + 1)]

    def basisChain(self, k, j):
        column = self.omega[k][:, j]
        return {self.paths[k][i]: column[i] for i in np.nonzero(column)[0]}

    def chainToVector(self, k, chain):
        vector = np.full(len(self.paths[k]), self.field.zero, dtype=object)
        for path, coefficient in chain.items():
            row = self.index[k].get(tuple(path))
            if row is None:
                raise MorphismError("path " + str(path) + " is not in degree " + str(k) + " of the complex")
            vector[row] = coefficient
        return self.field.reduce(vector)

    def coordinates(self, k, vector):
        coordinates = vector[np.array(self.free[k], dtype=int)]
        if not np.array_equal(matrixProduct(self.omega[k], coordinates.reshape(-1, 1), self.field).ravel(),
                              self.field.reduce(vector)):
            raise DirflagError("chain is not in Omega_" + str(k))
        return coordinates

    def coordinatesOfChain(self, k, chain):
        return self.coordinates(k, self.chainToVector(k, chain))

    def boundaryRank(self, k):
        if k < 1 or k > self.builtDegree:
            return 0
        if k not in self._ranks:
            self._ranks[k] = rank(self.boundary[k], self.field)
        return self._ranks[k]


def omegaComplex(P, topDegree, field=None):
    """
    Omega_k = {c in C_k : regular boundary of c in C_{k-1}}, the kernel of the
    boundary rows that leave P. Built up to topDegree + 1 when P allows it.
    """
    if field is None:
        field = CField()
    if topDegree > P.maxDim:
        raise TruncationError("complex built to degree " + str(P.maxDim)
                              + ", Omega requested to degree " + str(topDegree))
    if not P.isRegular:
        raise ContractError("Omega complex needs a regular path complex")

    rep = CChainComplex(P, field, topDegree)
    rep.builtDegree = min(topDegree + 1, P.maxDim)
    rep.isTruncationSensitive = rep.builtDegree == topDegree and not P.isEmptyAbove(topDegree)

    for k in range(rep.builtDegree + 1):
        paths = list(P.degree(k))
        rep.paths.append(paths)
        rep.index.append({path: i for i, path in enumerate(paths)})
        if k == 0:
            rep.omega.append(field.identity(len(paths)))
            rep.free.append(list(range(len(paths))))
            rep.boundary.append(field.zeros(0, len(paths)))
            continue

        inside = field.zeros(len(rep.paths[k - 1]), len(paths))
        outsideRows = {}
        outsideEntries = []
        for col, path in enumerate(paths):
            for sign, face in pathFaces(path):
                row = rep.index[k - 1].get(face)
                if row is not None:
                    inside[row, col] += field.element(sign)
                else:
                    outsideEntries.append((outsideRows.setdefault(face, len(outsideRows)), col, sign))
        outside = field.zeros(len(outsideRows), len(paths))
        for row, col, sign in outsideEntries:
            outside[row, col] += field.element(sign)
        inside = field.reduce(inside)
        outside = field.reduce(outside)

        basis, free = nullSpace(outside, field)
        rep.omega.append(basis)
        rep.free.append(free)
        boundaryInPaths = matrixProduct(inside, basis, field)
        rep.boundary.append(boundaryInPaths[np.array(rep.free[k - 1], dtype=int), :])
        logger.debug("Omega_%d: %d allowed paths, %d outside faces, dimension %d",
                     k, len(paths), len(outsideRows), basis.shape[1])
    return rep


def bettiNumbers(rep, upTo=None):
    if upTo is None:
        upTo = rep.topDegree
    if upTo > rep.topDegree:
        raise TruncationError("Betti numbers requested beyond degree " + str(rep.topDegree))
    if upTo == rep.topDegree and rep.isTruncationSensitive:
        logger.warning("Betti number in degree %d is truncation-sensitive: build the complex one degree higher",
                       upTo)
    betti = []
    for k in range(upTo + 1):
        betti.append(rep.dimension(k) - rep.boundaryRank(k) - rep.boundaryRank(k + 1))
    return betti


def checkBoundarySquaredZero(rep):
    for k in range(2, rep.builtDegree + 1):
        if not isZeroMatrix(matrixProduct(rep.boundary[k - 1], rep.boundary[k], rep.field)):
            return False
    return True


def eulerCharacteristic(P, upTo=None):
    if upTo is None:
        upTo = P.maxDim
    return sum((-1) ** k * len(P.degree(k)) for k in range(upTo + 1))


def eulerCharacteristicFromBetti(betti):
    return sum((-1) ** k * b for k, b in enumerate(betti))


# --------------------------- chain maps ---------------------------

def _imageCoordinates(f, chain, dst, k):
    image = mapChain(f, chain, dst.field)
    return dst.coordinatesOfChain(k, image)


def inducedChainMap(f, src, dst):
    """matrices of f_#: Omega_k(P1) -> Omega_k(P2) for the degrees built in both"""
    if len(f) != src.complex.vertexCount:
        raise ContractError("map has " + str(len(f)) + " entries, complex has "
                            + str(src.complex.vertexCount) + " vertices")
    maps = []
    for k in range(min(src.builtDegree, dst.builtDegree) + 1):
        matrix = dst.field.zeros(dst.dimension(k), src.dimension(k))
        for j in range(src.dimension(k)):
            matrix[:, j] = _imageCoordinates(f, src.basisChain(k, j), dst, k)
        maps.append(matrix)
    return maps


def checkChainMap(maps, src, dst):
    field = dst.field
    for k in range(1, len(maps)):
        left = matrixProduct(dst.boundary[k], maps[k], field)
        right = matrixProduct(maps[k - 1], src.boundary[k], field)
        if not np.array_equal(left, right):
            return False
    return True


def liftingMap(rep, cylinderRep, k):
    """matrix of the lift Omega_k(P) -> Omega_{k+1}(Cyl P)"""
    if k + 1 > cylinderRep.builtDegree:
        raise TruncationError("cylinder complex not built to degree " + str(k + 1))
    matrix = rep.field.zeros(cylinderRep.dimension(k + 1), rep.dimension(k))
    for j in range(rep.dimension(k)):
        lifted = liftChain(rep.basisChain(k, j), rep.field)
        matrix[:, j] = cylinderRep.coordinatesOfChain(k + 1, lifted)
    return matrix


def _homotopyDepth(src, dst):
    return min(src.builtDegree, dst.builtDegree - 1)


def chainHomotopyFromWitness(witness, src, dst):
    """
    L_k = sum_i alpha_i F_i#(lift(c)), alpha_i = +1 for a step f_i -> f_{i+1}
    and -1 for a step f_{i+1} -> f_i. Satisfies dL + Ld = g_# - f_#.
    """
    field = dst.field
    depth = _homotopyDepth(src, dst)
    cylinderComplex = cylinder(src.complex)
    cylinderComplex = skeleton(cylinderComplex, min(cylinderComplex.maxDim, dst.complex.maxDim))
    depth = min(depth, cylinderComplex.maxDim - 1)
    L = [field.zeros(dst.dimension(k + 1), src.dimension(k)) for k in range(depth + 1)]

    for step in range(len(witness.maps) - 1):
        if witness.forward[step]:
            bottom, top, alpha = witness.maps[step], witness.maps[step + 1], 1
        else:
            bottom, top, alpha = witness.maps[step + 1], witness.maps[step], -1
        F = cylinderMap(bottom, top)
        violation = findPathMorphismViolation(F, cylinderComplex, dst.complex)
        if violation is not None:
            raise WitnessError(step, "cylinder path " + str(violation) + " maps to "
                               + str(imagePath(F, violation)) + " outside the target")
        for k in range(depth + 1):
            for j in range(src.dimension(k)):
                lifted = liftChain(src.basisChain(k, j), field)
                column = _imageCoordinates(F, lifted, dst, k + 1)
                L[k][:, j] = field.reduce(L[k][:, j] + field.element(alpha) * column)
    return L


def checkChainHomotopy(L, f, g, src, dst):
    field = dst.field
    fMaps = inducedChainMap(f, src, dst)
    gMaps = inducedChainMap(g, src, dst)
    for k in range(len(L)):
        left = matrixProduct(dst.boundary[k + 1], L[k], field)
        if k > 0:
            left = field.reduce(left + matrixProduct(L[k - 1], src.boundary[k], field))
        if not np.array_equal(left, field.reduce(gMaps[k] - fMaps[k])):
            return False
    return True


def homotopyVanishesOn(L, src, vertexSubset):
    """L_k kills every Omega generator supported on the vertex subset"""
    vertexSubset = set(vertexSubset)
    for k in range(len(L)):
        for j in range(src.dimension(k)):
            support = {v for path in src.basisChain(k, j) for v in path}
            if support <= vertexSubset and not isZeroMatrix(L[k][:, j]):
                return False
    return True
