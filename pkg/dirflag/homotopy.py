# homotopy.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# One-step homotopies in the systems A and dfl, multi-step witnesses,
# map-space search, deformation retractions and contractions
# ---------------------------------------------------------

from collections import deque
import itertools
import logging

from .dataStructures import *
from .digraph import checkMap, classifyDigraphMap, composeMaps, identityMap, inducedSubgraph, \
    constantMap, reciprocalPairs, weakComponents, starCentres, inverseStarCentres, CDigraph
from .complexes import classifySimplicialMorphism, directedFlagComplex, simplicialClosureOfCylinder
from .chains import cylinderMap

logger = logging.getLogger(__name__)


class CMultiStepWitness:
    """
    maps[0] = f, ..., maps[-1] = g.
    forward[i] is True for a one-step homotopy maps[i] -> maps[i+1],
    False for maps[i+1] -> maps[i].
    """
    def __init__(self, maps, forward=()):
        self.maps = [tuple(int(v) for v in m) for m in maps]
        self.forward = [bool(b) for b in forward]
        if len(self.maps) == 0:
            raise ContractError("a witness needs at least one map")
        if len(self.forward) != len(self.maps) - 1:
            raise ContractError("a witness with " + str(len(self.maps)) + " maps needs "
                                + str(len(self.maps) - 1) + " direction flags")

    @property
    def source(self):
        return self.maps[0]

    @property
    def target(self):
        return self.maps[-1]

    def __len__(self):
        return len(self.forward)

    def __eq__(self, other):
        return isinstance(other, CMultiStepWitness) and self.maps == other.maps and self.forward == other.forward

    def __repr__(self):
        return "CMultiStepWitness(" + str(self.maps) + ", " + str(self.forward) + ")"


class CSearchResult:
    def __init__(self, status, witness=None, explored=0):
        self.status = status
        self.witness = witness
        self.explored = explored

    @property
    def isFound(self):
        return self.status == SEARCH_FOUND


class CEquivalenceCertificate:
    """f: G -> H, g: H -> G, witnessG from g.f to id_G, witnessH from f.g to id_H"""
    def __init__(self, G, H, f, g, witnessG, witnessH):
        self.G = G
        self.H = H
        self.f = tuple(f)
        self.g = tuple(g)
        self.witnessG = witnessG
        self.witnessH = witnessH


# --------------------------- one-step checks ---------------------------

def _requireClass(f, G, H, minimum, name):
    if classifyDigraphMap(f, G, H) < minimum:
        raise MorphismError("map " + str(tuple(f)) + " is not " + name)


def _isOneStepA(f, g, H):
    return all(H.isTooreq(f[x], g[x]) for x in range(len(f)))


def _isOneStepDfl(f, g, G, H):
    for x in range(G.vertexCount):
        if not H.isTooreq(f[x], g[x]):
            return False
    for x, y in G.edges:
        if not H.isTooreq(f[x], g[y]):
            return False
        if f[x] == g[y] and not (f[x] == f[y] == g[x]):
            return False
    return True


def _agreesOn(f, g, fixed):
    return all(f[v] == g[v] for v in fixed)


def oneStepA(f, g, G, H):
    """f(x) => g(x) for every vertex x, with f and g weak"""
    _requireClass(f, G, H, MAP_WEAK, "a weak digraph map")
    _requireClass(g, G, H, MAP_WEAK, "a weak digraph map")
    return _isOneStepA(f, g, H)


def oneStepDfl(f, g, G, H):
    """
    x => y implies f(x) => g(y), and
    x -> y with f(x) = g(y) implies f(x) = f(y) = g(x) = g(y).
    f and g must be triangle-collapsing.
    """
    _requireClass(f, G, H, MAP_TRIANGLE_COLLAPSING, "triangle-collapsing")
    _requireClass(g, G, H, MAP_TRIANGLE_COLLAPSING, "triangle-collapsing")
    return _isOneStepDfl(f, g, G, H)


def oneStepDflRelative(f, g, G, H, fixed):
    return oneStepDfl(f, g, G, H) and _agreesOn(f, g, fixed)


def oneStep(f, g, G, H, system, fixed=()):
    if system == SYSTEM_A:
        return oneStepA(f, g, G, H) and _agreesOn(f, g, fixed)
    if system == SYSTEM_DFL:
        return oneStepDflRelative(f, g, G, H, fixed)
    raise ContractError("unknown homotopy system " + str(system))


class CDflOracle:
    """
    Decides one-step dfl homotopies through the simplicial closure of the
    cylinder on dFl(G): F = f on the bottom, g on the top, must be a
    triangle-collapsing simplicial morphism into dFl(H).
    """
    def __init__(self, G, H):
        self.G = G
        self.H = H
        self.closure = simplicialClosureOfCylinder(directedFlagComplex(G, max(G.vertexCount - 1, 0)))
        self.target = directedFlagComplex(H, max(self.closure.maxDim, 1))

    def isOneStep(self, f, g):
        _requireClass(f, self.G, self.H, MAP_TRIANGLE_COLLAPSING, "triangle-collapsing")
        _requireClass(g, self.G, self.H, MAP_TRIANGLE_COLLAPSING, "triangle-collapsing")
        F = cylinderMap(f, g)
        return classifySimplicialMorphism(F, self.closure, self.target) >= MAP_TRIANGLE_COLLAPSING


def oneStepDflOracle(f, g, G, H):
    return CDflOracle(G, H).isOneStep(f, g)


# --------------------------- witnesses ---------------------------

def _mapsOfClass(G, H, minimum):
    return [f for f in itertools.product(range(H.vertexCount), repeat=G.vertexCount)
            if classifyDigraphMap(f, G, H) >= minimum]


def minimumMapClass(system):
    if system == SYSTEM_A:
        return MAP_WEAK
    return MAP_TRIANGLE_COLLAPSING


def verifyWitness(witness, G, H, system, fixed=(), source=None, target=None):
    """return: (isOk, list of failures naming the step index)"""
    failures = []
    if source is not None and witness.source != tuple(source):
        failures.append("witness starts at " + str(witness.source) + ", expected " + str(tuple(source)))
    if target is not None and witness.target != tuple(target):
        failures.append("witness ends at " + str(witness.target) + ", expected " + str(tuple(target)))
    minimum = minimumMapClass(system)
    for i, m in enumerate(witness.maps):
        try:
            if classifyDigraphMap(m, G, H) < minimum:
                failures.append("map " + str(i) + " is " + MAP_CLASS_NAMES[classifyDigraphMap(m, G, H)])
        except ContractError as error:
            failures.append("map " + str(i) + ": " + str(error))
    if len(failures) > 0:
        return False, failures
    for i in range(len(witness)):
        a, b = witness.maps[i], witness.maps[i + 1]
        if not witness.forward[i]:
            a, b = b, a
        if not oneStep(a, b, G, H, system, fixed):
            failures.append("step " + str(i) + ": no one-step " + SYSTEM_NAMES[system]
                            + " homotopy " + str(a) + " -> " + str(b))
    return len(failures) == 0, failures


def reverseWitness(witness):
    return CMultiStepWitness(witness.maps[::-1], [not b for b in witness.forward[::-1]])


def concatenateWitnesses(first, second):
    if first.target != second.source:
        raise ContractError("witnesses do not meet: " + str(first.target) + " vs " + str(second.source))
    return CMultiStepWitness(first.maps + second.maps[1:], first.forward + second.forward)


def witnessTransport(witness, pre=None, post=None):
    """every map m becomes post . m . pre"""
    maps = []
    for m in witness.maps:
        if pre is not None:
            m = composeMaps(pre, m)
        if post is not None:
            m = composeMaps(m, post)
        maps.append(m)
    return CMultiStepWitness(maps, witness.forward)


def verifyCertificate(cert, system):
    failures = []
    n, m = cert.G.vertexCount, cert.H.vertexCount
    minimum = minimumMapClass(system)
    try:
        if classifyDigraphMap(cert.f, cert.G, cert.H) < minimum:
            failures.append("f is not a valid " + SYSTEM_NAMES[system] + " map")
        if classifyDigraphMap(cert.g, cert.H, cert.G) < minimum:
            failures.append("g is not a valid " + SYSTEM_NAMES[system] + " map")
    except ContractError as error:
        return False, [str(error)]
    isOk, stepFailures = verifyWitness(cert.witnessG, cert.G, cert.G, system,
                                       source=composeMaps(cert.f, cert.g), target=identityMap(n))
    failures += ["G: " + s for s in stepFailures]
    isOk, stepFailures = verifyWitness(cert.witnessH, cert.H, cert.H, system,
                                       source=composeMaps(cert.g, cert.f), target=identityMap(m))
    failures += ["H: " + s for s in stepFailures]
    return len(failures) == 0, failures


def identityCertificate(G):
    n = G.vertexCount
    trivial = CMultiStepWitness([identityMap(n)])
    return CEquivalenceCertificate(G, G, identityMap(n), identityMap(n), trivial, trivial)


# --------------------------- search ---------------------------

def _candidates(current, G, H, isForward, fixed):
    options = []
    for x in range(G.vertexCount):
        y = current[x]
        if x in fixed:
            options.append([y])
        elif isForward:
            options.append(sorted({y} | H.outNeighbours[y]))
        else:
            options.append(sorted({y} | H.inNeighbours[y]))
    return itertools.product(*options)


def multiStepSearch(f, g, G, H, system, budget, fixed=()):
    """
    Breadth-first search from f over the graph of one-step homotopies
    between valid maps G -> H. ABSENT means the whole component of f was
    explored, INCONCLUSIVE that the budget of tested maps ran out.
    """
    f, g = tuple(f), tuple(g)
    fixed = frozenset(fixed)
    minimum = minimumMapClass(system)
    _requireClass(f, G, H, minimum, "valid for the system")
    _requireClass(g, G, H, minimum, "valid for the system")
    if f == g:
        return CSearchResult(SEARCH_FOUND, CMultiStepWitness([f]), 0)
    if not _agreesOn(f, g, fixed):
        return CSearchResult(SEARCH_ABSENT, None, 0)

    def isStep(a, b):
        if system == SYSTEM_A:
            return _isOneStepA(a, b, H)
        return _isOneStepDfl(a, b, G, H)

    parent = {f: None}
    queue = deque([f])
    explored = 0
    while queue:
        current = queue.popleft()
        for isForward in (True, False):
            for h in _candidates(current, G, H, isForward, fixed):
                if h in parent:
                    continue
                explored += 1
                if explored > budget:
                    logger.warning("Search budget of %d maps exhausted", budget)
                    return CSearchResult(SEARCH_INCONCLUSIVE, None, explored)
                if classifyDigraphMap(h, G, H) < minimum:
                    continue
                isOk = isStep(current, h) if isForward else isStep(h, current)
                if not isOk:
                    continue
                parent[h] = (current, isForward)
                if h == g:
                    return CSearchResult(SEARCH_FOUND, _witnessFromParents(parent, g), explored)
                queue.append(h)
    logger.info("Search exhausted the component of %s: %d maps", str(f), len(parent))
    return CSearchResult(SEARCH_ABSENT, None, explored)


def _witnessFromParents(parent, g):
    maps = [g]
    forward = []
    while parent[maps[-1]] is not None:
        previous, isForward = parent[maps[-1]]
        maps.append(previous)
        forward.append(isForward)
    return CMultiStepWitness(maps[::-1], forward[::-1])


# --------------------------- retractions ---------------------------

def _checkRetraction(G, subset, r):
    subset = set(subset)
    checkMap(r, G, G)
    for a in subset:
        if r[a] != a:
            raise RetractionError("r moves the fixed vertex " + str(a))
    for x in range(G.vertexCount):
        if r[x] not in subset:
            raise RetractionError("r maps " + str(x) + " outside the subset")
    if classifyDigraphMap(r, G, G) < MAP_WEAK:
        raise RetractionError("r is not a weak digraph map")


def checkADeformationRetraction(G, subset, r):
    """
    x => r(x) for all x, or r(x) => x for all x.
    return: one-step witness between id and r, or None
    """
    _checkRetraction(G, subset, r)
    n = G.vertexCount
    r = tuple(r)
    if all(G.isTooreq(x, r[x]) for x in range(n)):
        return CMultiStepWitness([identityMap(n), r], [True])
    if all(G.isTooreq(r[x], x) for x in range(n)):
        return CMultiStepWitness([identityMap(n), r], [False])
    return None


def checkDflDeformationRetraction(G, subset, r):
    """
    x => r(x) for all x and x -> r(y) for every edge (x, y), or
    r(x) => x for all x and r(x) -> y for every edge (x, y).
    return: one-step witness between id and r, or None
    """
    _checkRetraction(G, subset, r)
    if classifyDigraphMap(r, G, G) < MAP_TRIANGLE_COLLAPSING:
        raise MorphismError("retraction " + str(tuple(r)) + " is not triangle-collapsing")
    n = G.vertexCount
    r = tuple(r)
    if all(G.isTooreq(x, r[x]) for x in range(n)) and all(G.hasEdge(x, r[y]) for x, y in G.edges):
        return CMultiStepWitness([identityMap(n), r], [True])
    if all(G.isTooreq(r[x], x) for x in range(n)) and all(G.hasEdge(r[x], y) for x, y in G.edges):
        return CMultiStepWitness([identityMap(n), r], [False])
    return None


def checkDeformationRetraction(G, subset, r, system):
    if system == SYSTEM_A:
        return checkADeformationRetraction(G, subset, r)
    return checkDflDeformationRetraction(G, subset, r)


def retractAToB0(G, a, b0):
    """
    return: (isA, isDfl) for the retraction sending a to its neighbour b0.
    isA: a -> b implies b0 -> b and b -> a implies b -> b0 for the other neighbours b.
    isDfl: additionally no reciprocal a <-> b0 and no reciprocal b0 <-> b coned by a.
    """
    neighbours = G.neighbours(a)
    if b0 not in neighbours:
        raise ContractError(str(b0) + " is not a neighbour of " + str(a))
    others = [b for b in neighbours if b != b0]
    isA = all((not G.hasEdge(a, b) or G.hasEdge(b0, b)) and (not G.hasEdge(b, a) or G.hasEdge(b, b0))
              for b in others)
    if not isA:
        return False, False
    if G.hasEdge(a, b0) and G.hasEdge(b0, a):
        return True, False
    for b in others:
        if G.hasEdge(b0, b) and G.hasEdge(b, b0):
            isConed = (G.hasEdge(a, b0) and G.hasEdge(a, b)) or (G.hasEdge(b0, a) and G.hasEdge(b, a))
            if isConed:
                return True, False
    return True, True


# --------------------------- greedy contraction ---------------------------

class CRetractionStep:
    """retraction of the induced subgraph on `before` onto `after`, r in global vertex ids"""
    def __init__(self, before, after, r, forward):
        self.before = tuple(before)
        self.after = tuple(after)
        self.r = dict(r)
        self.forward = forward
        self.removed = tuple(v for v in self.before if v not in set(self.after))

    def __repr__(self):
        return "CRetractionStep(removed=" + str(self.removed) + ")"


def _localRetraction(vertices, moves):
    position = {v: i for i, v in enumerate(vertices)}
    return tuple(position[moves.get(v, v)] for v in vertices)


def _tryMove(sub, vertices, moves, system):
    """moves: global vertex -> global image for the removed vertices"""
    local = _localRetraction(vertices, moves)
    kept = [i for i, v in enumerate(vertices) if v not in moves]
    if classifyDigraphMap(local, sub, sub) < minimumMapClass(system):
        return None
    witness = checkDeformationRetraction(sub, kept, local, system)
    if witness is None:
        return None
    return CRetractionStep(vertices, [vertices[i] for i in kept],
                           {v: vertices[local[i]] for i, v in enumerate(vertices)}, witness.forward[0])


def _leafMoves(sub, vertices, system):
    for v in range(sub.vertexCount):
        neighbours = sub.neighbours(v)
        if len(neighbours) != 1:
            continue
        w = neighbours[0]
        if system == SYSTEM_DFL and sub.hasEdge(v, w) and sub.hasEdge(w, v):
            continue
        yield {vertices[v]: vertices[w]}


def _starMoves(sub, vertices, system):
    reciprocal = reciprocalPairs(sub)
    for centre in starCentres(sub) + inverseStarCentres(sub):
        if system == SYSTEM_DFL and any(centre in pair for pair in reciprocal):
            continue
        yield {vertices[v]: vertices[centre] for v in range(sub.vertexCount) if v != centre}


def _coneMoves(sub, vertices, system):
    for a in range(sub.vertexCount):
        for b0 in sub.neighbours(a):
            isA, isDfl = retractAToB0(sub, a, b0)
            if (system == SYSTEM_A and isA) or (system == SYSTEM_DFL and isDfl):
                yield {vertices[a]: vertices[b0]}


def greedyContract(G, system):
    """
    Sequence of verified deformation retractions down to one vertex, or None
    when no move applies. None does not disprove contractibility.
    """
    if G.vertexCount == 0:
        return None
    current = list(range(G.vertexCount))
    steps = []
    while len(current) > 1:
        sub, vertices = inducedSubgraph(G, current)
        if len(weakComponents(sub)) > 1:
            logger.info("Greedy contraction stopped: %d weak components", len(weakComponents(sub)))
            return None
        step = None
        for moves in itertools.chain(_leafMoves(sub, vertices, system), _starMoves(sub, vertices, system),
                                     _coneMoves(sub, vertices, system)):
            step = _tryMove(sub, vertices, moves, system)
            if step is not None:
                break
        if step is None:
            logger.info("Greedy contraction stuck at %d vertices", len(current))
            return None
        steps.append(step)
        current = list(step.after)
    return steps


def contractionCertificate(G, steps, system):
    """certificate for G ~ {*} from a greedy reduction sequence"""
    n = G.vertexCount
    point = CDigraph(1)
    R = identityMap(n)
    maps = [R]
    forward = []
    for step in steps:
        R = tuple(step.r.get(v, v) for v in R)
        maps.append(R)
        forward.append(step.forward)
    final = R[0] if n > 0 else 0
    toPoint = constantMap(n, 0)
    fromPoint = (final,)
    witnessG = reverseWitness(CMultiStepWitness(maps, forward))
    witnessPoint = CMultiStepWitness([(0,)])
    return CEquivalenceCertificate(G, point, toPoint, fromPoint, witnessG, witnessPoint)
