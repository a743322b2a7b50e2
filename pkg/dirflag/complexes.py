# complexes.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Path complexes and ordered simplicial complexes
# ---------------------------------------------------------

import itertools
import logging

from .dataStructures import *

logger = logging.getLogger(__name__)


def isRegularPath(path):
    return all(path[i] != path[i + 1] for i in range(len(path) - 1))


def isSimplicialPath(path):
    return len(set(path)) == len(path)


def collapseRepeats(path):
    collapsed = [path[0]]
    for v in path[1:]:
        if v != collapsed[-1]:
            collapsed.append(v)
    return tuple(collapsed)


class CPathComplex:
    """
    Graded set of elementary paths on the vertices 0..vertexCount-1,
    truncated at degree maxDim (a k-path has k+1 vertices).
    isExhaustive is True when the complex is known to have no path above maxDim.
    isSimplicial marks an ordered simplicial complex.
    """
    def __init__(self, vertexCount, maxDim, paths=(), isSimplicial=False, isExhaustive=False):
        if maxDim < 0:
            raise ContractError("maxDim must be nonnegative")
        degrees = [set() for _ in range(maxDim + 1)]
        for v in range(vertexCount):
            degrees[0].add((v,))
        for path in paths:
            path = tuple(int(v) for v in path)
            if len(path) == 0:
                raise ContractError("empty path")
            for v in path:
                if not 0 <= v < vertexCount:
                    raise ContractError("vertex " + str(v) + " out of range in path " + str(path))
            if len(path) - 1 <= maxDim:
                degrees[len(path) - 1].add(path)
        if isSimplicial:
            for level in degrees:
                for path in level:
                    if not isSimplicialPath(path):
                        raise ContractError("non-simplicial path " + str(path) + " in a simplicial complex")

        self.vertexCount = vertexCount
        self.maxDim = maxDim
        self.paths = tuple(tuple(sorted(s)) for s in degrees)
        self.members = tuple(frozenset(s) for s in degrees)
        self.isSimplicial = isSimplicial
        self.isExhaustive = isExhaustive
        self.isRegular = all(isRegularPath(p) for s in degrees for p in s)

    def contains(self, path):
        k = len(path) - 1
        return 0 <= k <= self.maxDim and tuple(path) in self.members[k]

    def degree(self, k):
        if 0 <= k <= self.maxDim:
            return self.paths[k]
        return ()

    def counts(self):
        return [len(s) for s in self.paths]

    def allPaths(self):
        for s in self.paths:
            for path in s:
                yield path

    def isEmptyAbove(self, k):
        """True when the complex is known to have no path of degree > k"""
        if k < self.maxDim:
            return len(self.paths[k + 1]) == 0
        return self.isExhaustive or len(self.paths[self.maxDim]) == 0

    def __eq__(self, other):
        return (isinstance(other, CPathComplex) and self.vertexCount == other.vertexCount
                and self.paths == other.paths)

    def __hash__(self):
        return hash((self.vertexCount, self.paths))

    def __repr__(self):
        return "CPathComplex(" + str(self.vertexCount) + ", counts=" + str(self.counts()) + ")"


def validateComplex(P):
    violations = []
    for v in range(P.vertexCount):
        if not P.contains((v,)):
            violations.append("missing singleton " + str(v))
    for path in P.allPaths():
        if len(path) > 1:
            for truncation in (path[1:], path[:-1]):
                if not P.contains(truncation):
                    violations.append("truncation " + str(truncation) + " of " + str(path) + " missing")
        if P.isRegular and not isRegularPath(path):
            violations.append("irregular path " + str(path) + " in a regular complex")
        if P.isSimplicial:
            if not isSimplicialPath(path):
                violations.append("non-simplicial path " + str(path))
            for i in range(len(path)):
                face = path[:i] + path[i + 1:]
                if len(face) > 0 and not P.contains(face):
                    violations.append("face " + str(face) + " of " + str(path) + " missing")
    return violations


# --------------------------- functors on digraphs ---------------------------

def directedFlagComplex(G, maxDim):
    """all directed cliques of G with at most maxDim+1 vertices, lexicographic per degree"""
    level = [(v,) for v in range(G.vertexCount)]
    paths = list(level)
    for _ in range(maxDim):
        level = _extendCliques(G, level)
        paths.extend(level)
    isExhaustive = len(level) == 0 or len(_extendCliques(G, level)) == 0
    logger.debug("Directed flag complex: %d simplices up to degree %d", len(paths), maxDim)
    return CPathComplex(G.vertexCount, maxDim, paths, isSimplicial=True, isExhaustive=isExhaustive)


def _extendCliques(G, cliques):
    extended = []
    for clique in cliques:
        common = set(G.outNeighbours[clique[0]])
        for v in clique[1:]:
            common &= G.outNeighbours[v]
        for w in sorted(common):
            extended.append(clique + (w,))
    return extended


def allowedPathComplex(G, maxDim):
    """all directed walks of G with at most maxDim edges"""
    level = [(v,) for v in range(G.vertexCount)]
    paths = list(level)
    for _ in range(maxDim):
        level = _extendWalks(G, level)
        paths.extend(level)
    isExhaustive = len(level) == 0 or len(_extendWalks(G, level)) == 0
    return CPathComplex(G.vertexCount, maxDim, paths, isExhaustive=isExhaustive)


def _extendWalks(G, walks):
    return [walk + (w,) for walk in walks for w in sorted(G.outNeighbours[walk[-1]])]


# --------------------------- operations on complexes ---------------------------

def skeleton(P, k):
    if not 0 <= k <= P.maxDim:
        raise ContractError("skeleton degree " + str(k) + " outside 0.." + str(P.maxDim))
    paths = [p for s in P.paths[:k + 1] for p in s]
    return CPathComplex(P.vertexCount, k, paths, isSimplicial=P.isSimplicial,
                        isExhaustive=P.isEmptyAbove(k))


def regularise(P):
    paths = [p for p in P.allPaths() if isRegularPath(p)]
    return CPathComplex(P.vertexCount, P.maxDim, paths, isSimplicial=P.isSimplicial,
                        isExhaustive=P.isExhaustive)


def cylinderVertex(v, side):
    return 2 * v + side


def liftedPath(path, i):
    """(v0,0)...(vi,0)(vi,1)...(vk,1)"""
    return tuple(2 * v for v in path[:i + 1]) + tuple(2 * v + 1 for v in path[i:])


def _cylinderDepth(P):
    if P.isEmptyAbove(P.maxDim):
        return P.maxDim + 1
    return P.maxDim


def cylinder(P):
    """
    Cylinder on V x {0, 1}, vertex (v, i) numbered 2v + i.
    Built one degree deeper than P when P is known to stop at maxDim.
    """
    maxDim = _cylinderDepth(P)
    paths = []
    for path in P.allPaths():
        paths.append(tuple(2 * v for v in path))
        paths.append(tuple(2 * v + 1 for v in path))
        for i in range(len(path)):
            paths.append(liftedPath(path, i))
    return CPathComplex(2 * P.vertexCount, maxDim, paths,
                        isExhaustive=P.isEmptyAbove(P.maxDim))


def simplicialClosure(vertexCount, maxDim, paths):
    """smallest ordered simplicial complex containing a set of simplicial paths"""
    closed = set()
    for path in paths:
        path = tuple(path)
        if not isSimplicialPath(path):
            raise ContractError("path " + str(path) + " is not simplicial")
        if path in closed:
            continue
        for size in range(1, len(path) + 1):
            for indices in itertools.combinations(range(len(path)), size):
                closed.add(tuple(path[i] for i in indices))
    return CPathComplex(vertexCount, maxDim, closed, isSimplicial=True)


def simplicialClosureOfCylinder(K):
    if not K.isSimplicial:
        raise ContractError("simplicial closure of the cylinder needs an ordered simplicial complex")
    base = cylinder(K)
    paths = list(base.allPaths())
    for path in K.allPaths():
        for i in range(len(path) - 1):
            paths.append(tuple(2 * v for v in path[:i + 1]) + tuple(2 * v + 1 for v in path[i + 1:]))
    return CPathComplex(base.vertexCount, base.maxDim, paths, isSimplicial=True,
                        isExhaustive=base.isExhaustive)


# --------------------------- morphisms ---------------------------

def imagePath(f, path):
    return tuple(f[v] for v in path)


def _checkComplexMap(f, P1, P2):
    if len(f) != P1.vertexCount:
        raise ContractError("map has " + str(len(f)) + " entries, complex has "
                            + str(P1.vertexCount) + " vertices")
    for y in f:
        if not 0 <= y < P2.vertexCount:
            raise ContractError("map image " + str(y) + " out of range")


def _commonDepth(P1, P2):
    depth = min(P1.maxDim, P2.maxDim)
    if P1.maxDim > P2.maxDim:
        logger.warning("Morphism checked up to degree %d only: target complex is truncated", depth)
    return depth


def findPathMorphismViolation(f, P1, P2):
    """first path whose image is regular but missing from P2, or None"""
    _checkComplexMap(f, P1, P2)
    for k in range(_commonDepth(P1, P2) + 1):
        for path in P1.degree(k):
            image = imagePath(f, path)
            if not P2.contains(image) and isRegularPath(image):
                return path
    return None


def classifyPathMorphism(f, P1, P2):
    _checkComplexMap(f, P1, P2)
    isStrong = True
    for k in range(_commonDepth(P1, P2) + 1):
        for path in P1.degree(k):
            image = imagePath(f, path)
            if P2.contains(image):
                continue
            if isRegularPath(image):
                return MAP_NOT_WEAK
            isStrong = False
    if isStrong:
        return MAP_STRONG
    return MAP_WEAK


def classifySimplicialMorphism(f, K1, K2):
    _checkComplexMap(f, K1, K2)
    isStrong = True
    for k in range(_commonDepth(K1, K2) + 1):
        for path in K1.degree(k):
            image = imagePath(f, path)
            if K2.contains(image):
                continue
            if isSimplicialPath(image):
                return MAP_NOT_WEAK
            isStrong = False
    if isStrong:
        return MAP_STRONG
    for v0, v1, v2 in K1.degree(2):
        if f[v0] == f[v2] and f[v1] != f[v0]:
            return MAP_WEAK
    return MAP_TRIANGLE_COLLAPSING


# --------------------------- mapping cylinders ---------------------------

def mapCylVertex(v, side, n1):
    """(x, 0) -> x and (y, 1) -> n1 + y"""
    if side == 0:
        return v
    return n1 + v


def _mappingCylinderDepth(P1, P2):
    """deepest degree at which every path of the mapping cylinder is present"""
    isComplete1 = P1.isEmptyAbove(P1.maxDim)
    isComplete2 = P2.isEmptyAbove(P2.maxDim)
    if isComplete1 and isComplete2:
        return max(P1.maxDim + 1, P2.maxDim), True
    limits = []
    if not isComplete1:
        limits.append(P1.maxDim)
    if not isComplete2:
        limits.append(P2.maxDim)
    return min(limits), False


def mappingCylinder(f, P1, P2):
    """
    Bottom P1 on 0..n1-1, top P2 on n1.., and the paths
    (x0,0)...(xi,0)(f(xi),1)...(f(xk),1).
    The result is regular only when f is strong: call regularise before
    building its Omega complex.
    """
    violation = findPathMorphismViolation(f, P1, P2)
    if violation is not None:
        raise MorphismError("not a weak path morphism: " + str(violation) + " maps to "
                            + str(imagePath(f, violation)))
    n1 = P1.vertexCount
    maxDim, isExhaustive = _mappingCylinderDepth(P1, P2)
    paths = [tuple(n1 + y for y in path) for path in P2.allPaths()]
    for path in P1.allPaths():
        paths.append(path)
        for i in range(len(path)):
            paths.append(path[:i + 1] + tuple(n1 + f[x] for x in path[i:]))
    return CPathComplex(n1 + P2.vertexCount, maxDim, paths, isExhaustive=isExhaustive)


def mappingCylinderClosure(f, K1, K2):
    """ordered simplicial mapping cylinder of a triangle-collapsing morphism"""
    if classifySimplicialMorphism(f, K1, K2) < MAP_TRIANGLE_COLLAPSING:
        raise MorphismError("mapping cylinder closure needs a triangle-collapsing morphism")
    n1 = K1.vertexCount
    maxDim = min(K1.maxDim, K2.maxDim) + 1
    paths = [tuple(n1 + y for y in path) for path in K2.allPaths()]
    for path in K1.allPaths():
        paths.append(path)
        for i in range(len(path)):
            paths.append(collapseRepeats(path[:i + 1] + tuple(n1 + f[x] for x in path[i:])))
    return simplicialClosure(n1 + K2.vertexCount, maxDim, paths)


def mappingCylinderMaps(f, n2):
    """retraction rho: MapCyl(f) -> P2 and inclusion gamma: P2 -> MapCyl(f)"""
    n1 = len(f)
    rho = tuple(f) + tuple(range(n2))
    gamma = tuple(n1 + y for y in range(n2))
    return rho, gamma
