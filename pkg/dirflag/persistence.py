# persistence.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Digraph filtrations, persistent directed flag homology,
# bottleneck distance, grounded H1 and interleaving checks
# ---------------------------------------------------------

from fractions import Fraction
import itertools
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .dataStructures import *
from .digraph import CDigraph, classifyDigraphMap, composeMaps, edgeSubdivide, identityMap, \
    isPathCollapsing, shortestPathQuasimetric, subdivisionMaps
from .complexes import allowedPathComplex, directedFlagComplex
from .chains import bettiNumbers, omegaComplex
from .linearAlgebra import CField, rank
from .homotopy import CMultiStepWitness, multiStepSearch, verifyWitness

logger = logging.getLogger(__name__)


def _extendedValue(value):
    if value == INF:
        return INF
    return Fraction(value)


class CFiltration:
    """
    Digraph filtration given by the entrance time of every ordered pair.
    Missing pairs never enter. Vertices are present from startTime.
    """
    def __init__(self, vertexCount, entrance):
        times = {}
        for (i, j), t in entrance.items():
            i, j = int(i), int(j)
            if i == j:
                raise ContractError("self-loop key (" + str(i) + ", " + str(j) + ") in a filtration")
            if not (0 <= i < vertexCount and 0 <= j < vertexCount):
                raise ContractError("pair (" + str(i) + ", " + str(j) + ") out of range")
            t = _extendedValue(t)
            if t != INF:
                times[(i, j)] = t
        self.vertexCount = vertexCount
        self.entrance = times
        self.startTime = min([Fraction(0)] + list(times.values()))

    def entranceTime(self, i, j):
        return self.entrance.get((i, j), INF)

    def criticalValues(self):
        return sorted(set(self.entrance.values()))

    def digraphAt(self, t):
        return CDigraph(self.vertexCount, [e for e, s in self.entrance.items() if s <= t])

    def finalDigraph(self):
        return CDigraph(self.vertexCount, self.entrance.keys())


def shortestPathFiltration(W):
    d = shortestPathQuasimetric(W)
    n = W.vertexCount
    return CFiltration(n, {(i, j): d[i][j] for i in range(n) for j in range(n) if i != j and d[i][j] != INF})


# --------------------------- barcodes ---------------------------

class CBar:
    def __init__(self, degree, birth, death):
        if not birth < death:
            raise ContractError("bar with birth " + str(birth) + " >= death " + str(death))
        self.degree = int(degree)
        self.birth = birth
        self.death = death

    @property
    def isInfinite(self):
        return self.death == INF

    def key(self):
        return (self.degree, self.birth, self.death)

    def __eq__(self, other):
        return isinstance(other, CBar) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "[" + str(self.birth) + ", " + str(self.death) + ")_" + str(self.degree)


class CBarcode:
    def __init__(self, bars=()):
        self.bars = sorted(bars, key=CBar.key)

    def barsInDegree(self, k):
        return [b for b in self.bars if b.degree == k]

    def intervals(self, k):
        return [(b.birth, b.death) for b in self.barsInDegree(k)]

    def aliveCount(self, k, t):
        return sum(1 for b in self.barsInDegree(k) if b.birth <= t < b.death)

    def __len__(self):
        return len(self.bars)

    def __eq__(self, other):
        return isinstance(other, CBarcode) and self.bars == other.bars

    def __repr__(self):
        return "CBarcode(" + str(self.bars) + ")"


def _scalar(field, value):
    if field.isRational:
        return value
    return value % field.characteristic


def reduceFiltration(cells, field, maxDegree):
    """
    Standard column reduction. cells: (time, simplex) with every face present.
    Columns are ordered by (time, degree, simplex); zero-length bars are dropped.
    """
    order = sorted(cells, key=lambda c: (c[0], len(c[1]) - 1, c[1]))
    index = {simplex: j for j, (_, simplex) in enumerate(order)}
    pivotOf = {}
    reduced = {}
    bars = []
    for j, (t, simplex) in enumerate(order):
        column = {}
        if len(simplex) > 1:
            for i in range(len(simplex)):
                face = simplex[:i] + simplex[i + 1:]
                column[index[face]] = field.element(1 if i % 2 == 0 else -1)
        while column:
            low = max(column)
            if low not in pivotOf:
                break
            other = reduced[pivotOf[low]]
            factor = column[low] * field.inverse(other[low])
            for row, value in other.items():
                newValue = _scalar(field, column.get(row, field.zero) - factor * value)
                if newValue == 0:
                    column.pop(row, None)
                else:
                    column[row] = newValue
        if column:
            low = max(column)
            pivotOf[low] = j
            reduced[j] = column
            birth, born = order[low]
            if len(born) - 1 <= maxDegree and birth < t:
                bars.append(CBar(len(born) - 1, birth, t))

    for j, (t, simplex) in enumerate(order):
        if j not in reduced and j not in pivotOf and len(simplex) - 1 <= maxDegree:
            bars.append(CBar(len(simplex) - 1, t, INF))
    logger.debug("Reduced %d columns: %d bars", len(order), len(bars))
    return CBarcode(bars)


def flagEntranceTime(simplex, F):
    if len(simplex) == 1:
        return F.startTime
    return max(F.entranceTime(simplex[a], simplex[b])
               for a in range(len(simplex)) for b in range(a + 1, len(simplex)))


def persistentDflHomology(F, maxDegree, field=None):
    if field is None:
        field = CField(CDirflagParameters.persistenceField)
    K = directedFlagComplex(F.finalDigraph(), maxDegree + 1)
    cells = [(flagEntranceTime(s, F), s) for s in K.allPaths()]
    return reduceFiltration(cells, field, maxDegree)


def bettiCurve(F, degree, complexKind=COMPLEX_DFL, field=None):
    """Betti number of the time-t digraph at the start time and every critical value"""
    if field is None:
        field = CField()
    curve = []
    for t in [F.startTime] + F.criticalValues():
        G = F.digraphAt(t)
        if complexKind == COMPLEX_DFL:
            P = directedFlagComplex(G, degree + 1)
        elif complexKind == COMPLEX_ALLOWED:
            P = allowedPathComplex(G, degree + 1)
        else:
            raise ContractError("unknown complex kind " + str(complexKind))
        curve.append((t, bettiNumbers(omegaComplex(P, degree, field), degree)[degree]))
    return curve


# --------------------------- distances ---------------------------

def _linfCost(a, b):
    return max(abs(a.birth - b.birth), abs(a.death - b.death))


def _halfLength(bar):
    return (bar.death - bar.birth) / 2


def _hasPerfectMatching(first, second, epsilon):
    """first and second padded with diagonal copies of each other"""
    n, m = len(first), len(second)
    size = n + m
    rows, cols = [], []
    for i in range(n):
        for j in range(m):
            if _linfCost(first[i], second[j]) <= epsilon:
                rows.append(i)
                cols.append(j)
        if _halfLength(first[i]) <= epsilon:
            rows.append(i)
            cols.append(m + i)
    for j in range(m):
        if _halfLength(second[j]) <= epsilon:
            rows.append(n + j)
            cols.append(j)
        for i in range(n):
            rows.append(n + j)
            cols.append(m + i)
    graph = csr_matrix((np.ones(len(rows)), (np.array(rows, dtype=int), np.array(cols, dtype=int))),
                       shape=(size, size))
    matching = maximum_bipartite_matching(graph, perm_type="column")
    return bool(np.all(matching >= 0))


def bottleneckDistance(first, second, degree):
    bars1 = first.barsInDegree(degree)
    bars2 = second.barsInDegree(degree)
    infinite1 = sorted(b.birth for b in bars1 if b.isInfinite)
    infinite2 = sorted(b.birth for b in bars2 if b.isInfinite)
    if len(infinite1) != len(infinite2):
        return INF
    distance = max([Fraction(0)] + [abs(a - b) for a, b in zip(infinite1, infinite2)])

    finite1 = [b for b in bars1 if not b.isInfinite]
    finite2 = [b for b in bars2 if not b.isInfinite]
    if len(finite1) + len(finite2) == 0:
        return distance
    candidates = {Fraction(0)}
    candidates.update(_linfCost(a, b) for a in finite1 for b in finite2)
    candidates.update(_halfLength(b) for b in finite1 + finite2)
    candidates = sorted(candidates)
    low, high = 0, len(candidates) - 1
    while low < high:
        middle = (low + high) // 2
        if _hasPerfectMatching(finite1, finite2, candidates[middle]):
            high = middle
        else:
            low = middle + 1
    return max(distance, candidates[low])


def entranceTimeLinf(F1, F2):
    if F1.vertexCount != F2.vertexCount:
        raise ContractError("filtrations on " + str(F1.vertexCount) + " and " + str(F2.vertexCount) + " vertices")
    distance = Fraction(0)
    for pair in set(F1.entrance) | set(F2.entrance):
        a, b = F1.entranceTime(*pair), F2.entranceTime(*pair)
        if a == INF or b == INF:
            return INF
        distance = max(distance, abs(a - b))
    return distance


# --------------------------- grounded pipeline ---------------------------

def _groundedEntrance(W):
    """entrance time of the 1-simplices of G u SP(G)_t"""
    F = shortestPathFiltration(W)
    entrance = dict(F.entrance)
    for e in W.graph.edges:
        entrance[e] = min(entrance.get(e, INF), Fraction(GROUNDING_TIME))
    return F, entrance


def groundedPersistentH1(W, field=None):
    if field is None:
        field = CField(CDirflagParameters.persistenceField)
    F, entrance = _groundedEntrance(W)
    start = min([Fraction(GROUNDING_TIME)] + list(entrance.values()))
    cells = [(start, (v,)) for v in range(W.vertexCount)]
    cells += [(t, e) for e, t in entrance.items()]
    K = directedFlagComplex(F.finalDigraph(), 2)
    cells += [(flagEntranceTime(s, F), s) for s in K.degree(2)]
    barcode = reduceFiltration(cells, field, 1)
    return CBarcode(barcode.barsInDegree(1))


def groundedH1At(W, t, field=None):
    """dim H1 of C_2(dFl(SP(G)_t)) -> C_1(G u SP(G)_t) -> C_0 at a single t"""
    if field is None:
        field = CField()
    F, entrance = _groundedEntrance(W)
    edges = sorted(e for e, s in entrance.items() if s <= t)
    triangles = directedFlagComplex(F.digraphAt(t), 2).degree(2)
    edgeIndex = {e: i for i, e in enumerate(edges)}
    boundary1 = field.zeros(W.vertexCount, len(edges))
    for i, (u, v) in enumerate(edges):
        boundary1[v, i] = field.one
        boundary1[u, i] = field.element(-1)
    boundary2 = field.zeros(len(edges), len(triangles))
    for j, (v0, v1, v2) in enumerate(triangles):
        boundary2[edgeIndex[(v1, v2)], j] = field.element(1)
        boundary2[edgeIndex[(v0, v2)], j] = field.element(-1)
        boundary2[edgeIndex[(v0, v1)], j] = field.element(1)
    return len(edges) - rank(boundary1, field) - rank(boundary2, field)


# --------------------------- interleavings ---------------------------

class CInterleavingCertificate:
    """
    f: F1 -> F2 and g: F2 -> F1 shifting by delta.
    firstWitnesses[t] joins the identity and g.f on F1(t) -> F1(t + 2 delta),
    secondWitnesses[t] joins the identity and f.g on F2(t) -> F2(t + 2 delta).
    The key None holds the witness used at every t without its own entry.
    """
    def __init__(self, delta, f, g, firstWitnesses, secondWitnesses):
        self.delta = Fraction(delta)
        self.f = tuple(f)
        self.g = tuple(g)
        self.firstWitnesses = dict(firstWitnesses)
        self.secondWitnesses = dict(secondWitnesses)


def _joinsEndpoints(witness, a, b):
    return {witness.source, witness.target} == {tuple(a), tuple(b)}


def _verifyHalf(name, F1, F2, f, g, delta, witnesses, failures):
    identity = identityMap(F1.vertexCount)
    composite = composeMaps(f, g)
    for t in [F1.startTime] + F1.criticalValues():
        source = F1.digraphAt(t)
        shifted = F2.digraphAt(t + delta)
        if classifyDigraphMap(f, source, shifted) < MAP_TRIANGLE_COLLAPSING:
            failures.append(name + " t=" + str(t) + ": map is not triangle-collapsing into the shifted digraph")
            continue
        witness = witnesses.get(t, witnesses.get(None))
        if witness is None:
            failures.append(name + " t=" + str(t) + ": no witness")
            continue
        if not _joinsEndpoints(witness, identity, composite):
            failures.append(name + " t=" + str(t) + ": witness does not join the identity and the composite")
            continue
        isOk, stepFailures = verifyWitness(witness, source, F1.digraphAt(t + 2 * delta), SYSTEM_DFL)
        failures += [name + " t=" + str(t) + ": " + s for s in stepFailures]


def verifyInterleavingCertificate(F1, F2, cert):
    """
    Checks at the start time and every critical value of the source filtration.
    return: (isOk, failures)
    """
    failures = []
    if len(cert.f) != F1.vertexCount or len(cert.g) != F2.vertexCount:
        return False, ["maps do not match the vertex counts"]
    _verifyHalf("first", F1, F2, cert.f, cert.g, cert.delta, cert.firstWitnesses, failures)
    _verifyHalf("second", F2, F1, cert.g, cert.f, cert.delta, cert.secondWitnesses, failures)
    if len(failures) == 0:
        logger.info("Interleaving verified: bottleneck distance <= %s", str(cert.delta))
    return len(failures) == 0, failures


def subdivisionCertificate(W, S):
    """delta = max subdivided weight, f inclusion, g half-rounding, witness id <- h -> f.g"""
    Ws = edgeSubdivide(W, S)
    f, g, h = subdivisionMaps(W, S)
    delta = max(W.weight[(int(e[0]), int(e[1]))] for e in S)
    n, m = W.vertexCount, Ws.vertexCount
    first = CMultiStepWitness([identityMap(n)])
    fg = composeMaps(g, f)
    if fg == h:
        second = CMultiStepWitness([identityMap(m), h], [False])
    else:
        second = CMultiStepWitness([identityMap(m), h, fg], [False, True])
    return Ws, CInterleavingCertificate(delta, f, g, {None: first}, {None: second})


# --------------------------- grounded interleavings ---------------------------

def checkDeltaShifting(f, G, H, delta):
    """
    f induces weak maps SP(G)_t -> SP(H)_{t+delta} and
    G u SP(G)_t -> H u SP(H)_{t+delta} for t >= GROUNDING_TIME.
    return: (isOk, failures)
    """
    delta = Fraction(delta)
    dG = shortestPathQuasimetric(G)
    dH = shortestPathQuasimetric(H)
    failures = []
    for i, j in itertools.product(range(G.vertexCount), repeat=2):
        if i == j or dG[i][j] == INF or f[i] == f[j]:
            continue
        if dH[f[i]][f[j]] > dG[i][j] + delta:
            failures.append("pair (" + str(i) + ", " + str(j) + "): " + str(dH[f[i]][f[j]])
                            + " > " + str(dG[i][j]) + " + " + str(delta))
    for i, j in G.graph.sortedEdges():
        if f[i] == f[j] or H.graph.hasEdge(f[i], f[j]):
            continue
        if dH[f[i]][f[j]] > GROUNDING_TIME + delta:
            failures.append("edge (" + str(i) + ", " + str(j) + ") leaves H u SP(H)")
    return len(failures) == 0, failures


def groundedSets(f, g, G):
    """(V_fix, E_diff) of g.f on the weighted digraph G"""
    gf = composeMaps(f, g)
    fixed = [v for v in range(G.vertexCount) if gf[v] == v]
    moved = [(i, j) for i, j in G.graph.sortedEdges() if (gf[i], gf[j]) != (i, j)]
    return fixed, moved


def checkGroundedCodistortion(f, g, G, delta, witness=None, budget=None):
    """
    id and g.f must be triangle-collapsing maps G_diff -> SP(G)_{2 delta},
    homotopic relative to the fixed vertices of g.f.
    return: (isOk, failures)
    """
    delta = Fraction(delta)
    n = G.vertexCount
    gf = composeMaps(f, g)
    fixed, moved = groundedSets(f, g, G)
    difference = CDigraph(n, moved)
    target = shortestPathFiltration(G).digraphAt(2 * delta)
    failures = []
    for name, m in (("id", identityMap(n)), ("g.f", gf)):
        if classifyDigraphMap(m, difference, target) < MAP_TRIANGLE_COLLAPSING:
            failures.append(name + " is not triangle-collapsing into SP(G) at " + str(2 * delta))
    if len(failures) > 0:
        return False, failures

    if witness is None:
        if budget is None:
            budget = CDirflagParameters.budget
        result = multiStepSearch(identityMap(n), gf, difference, target, SYSTEM_DFL, budget, fixed)
        if not result.isFound:
            return False, ["no relative homotopy found (" + result.status + ")"]
        witness = result.witness
    if not _joinsEndpoints(witness, identityMap(n), gf):
        return False, ["witness does not join the identity and g.f"]
    return verifyWitness(witness, difference, target, SYSTEM_DFL, fixed)


def checkGroundedInterleaving(f, g, G, H, delta, witnessG=None, witnessH=None):
    failures = []
    if not isPathCollapsing(f, G.graph):
        failures.append("f is not path-collapsing")
    if not isPathCollapsing(g, H.graph):
        failures.append("g is not path-collapsing")
    for name, result in (("f", checkDeltaShifting(f, G, H, delta)), ("g", checkDeltaShifting(g, H, G, delta)),
                         ("(g, f)", checkGroundedCodistortion(f, g, G, delta, witnessG)),
                         ("(f, g)", checkGroundedCodistortion(g, f, H, delta, witnessH))):
        failures += [name + ": " + s for s in result[1]]
    return len(failures) == 0, failures
