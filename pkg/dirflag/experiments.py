# experiments.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Worked example digraphs and the experiment drivers
# ---------------------------------------------------------

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import logging

import numpy as np

from .dataStructures import *
from .digraph import CDigraph, CWeightedDigraph, completeDigraph, crossProduct, edgeSubdivide, unitInterval
from .complexes import directedFlagComplex
from .chains import bettiNumbers, omegaComplex, regularBoundary
from .linearAlgebra import CField
from .persistence import bettiCurve, bottleneckDistance, entranceTimeLinf, persistentDflHomology, \
    shortestPathFiltration, subdivisionCertificate, verifyInterleavingCertificate
from .randomGraphs import perturbFiltration, randomFiltration, randomSubdivision, randomWeightedDag
from .exportUtils import formatValue

logger = logging.getLogger(__name__)

EXPERIMENTS = ("subdiv-dag", "subdiv-nondag", "appendage", "derangement", "cylinder-k2", "stability")

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_INSTABILITY = "instability reproduced"


# --------------------------- worked examples ---------------------------

def fourPointSphere():
    """N -> W, N -> E, S -> W, S -> E and W <-> E"""
    return CDigraph(4, [(0, 1), (0, 2), (3, 1), (3, 2), (1, 2), (2, 1)], labels=["N", "W", "E", "S"])


def reciprocalPair(weight=1):
    G = CDigraph(2, [(0, 1), (1, 0)], labels=["a", "b"])
    return CWeightedDigraph(G, {(0, 1): weight, (1, 0): weight})


def reciprocalPairSubdivision():
    return {(0, 1): (Fraction(1, 2), Fraction(1, 2)), (1, 0): (Fraction(1, 2), Fraction(1, 2))}


def reciprocalPairWithAppendage(weight=1):
    G = CDigraph(3, [(0, 1), (1, 0), (2, 0)], labels=["a", "b", "c"])
    return CWeightedDigraph(G, {(0, 1): weight, (1, 0): weight, (2, 0): weight})


def weightedTriangle():
    """v0 -> v1 (2), v1 -> v2 (2), v0 -> v2 (3)"""
    G = CDigraph(3, [(0, 1), (1, 2), (0, 2)], labels=["v0", "v1", "v2"])
    return CWeightedDigraph(G, {(0, 1): 2, (1, 2): 2, (0, 2): 3})


def weightedTriangleSubdivision():
    """every new edge has weight 1"""
    return {(0, 1): (Fraction(1, 2), Fraction(1, 2)),
            (1, 2): (Fraction(1, 2), Fraction(1, 2)),
            (0, 2): (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))}


def derangementCount(n):
    counts = [1, 0]
    for k in range(2, n + 1):
        counts.append((k - 1) * (counts[k - 1] + counts[k - 2]))
    return counts[n]


# cylinder on K2: vertex (v, i) is 2v + i, so a = 0, a' = 1, b = 2, b' = 3
CYLINDER_IDENTITIES = [
    ("c1", {(0, 2): 1, (2, 0): 1}, {(0, 2, 1): 1, (2, 0, 1): 1}),
    ("c2", {(1, 3): 1, (3, 1): 1}, {(0, 3, 1): 1, (0, 1, 3): 1}),
    ("c3", {(0, 2): 1, (2, 1): 1, (0, 1): -1}, {(0, 2, 1): 1}),
    ("c4", {(0, 1): 1, (1, 3): 1, (0, 3): -1}, {(0, 1, 3): 1}),
    ("c5", {(0, 1): 1, (1, 3): 1, (0, 2): -1, (2, 3): -1}, {(0, 1, 3): 1, (0, 2, 3): -1}),
]


# --------------------------- drivers ---------------------------

def runTrials(trial, seed, trials):
    """trial(rng, index) on a thread pool; results in trial order"""
    threads = resolveThreadCount()
    logger.info("Running %d trials on %d threads", trials, threads)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(lambda i: trial(np.random.default_rng([seed, i]), i), range(trials)))


def _bars(barcode, degree):
    return [[formatValue(b.birth), formatValue(b.death)] for b in barcode.barsInDegree(degree)]


def subdivisionDagTrial(rng, index, maxVertices, maxDegree, field):
    n = int(rng.integers(2, maxVertices + 1))
    W = randomWeightedDag(rng, n, 0.4)
    while len(W.graph.edges) == 0:
        W = randomWeightedDag(rng, n, 0.6)
    S = randomSubdivision(rng, W)
    Ws, cert = subdivisionCertificate(W, S)
    F1, F2 = shortestPathFiltration(W), shortestPathFiltration(Ws)
    barcode1 = persistentDflHomology(F1, maxDegree, field)
    barcode2 = persistentDflHomology(F2, maxDegree, field)
    distances = [bottleneckDistance(barcode1, barcode2, k) for k in range(maxDegree + 1)]
    isCertified, failures = verifyInterleavingCertificate(F1, F2, cert)
    return {"trial": index, "vertices": n, "subdividedVertices": Ws.vertexCount - n,
            "delta": formatValue(cert.delta), "bottleneck": [formatValue(d) for d in distances],
            "boundHolds": all(d <= cert.delta for d in distances), "certificateVerified": isCertified,
            "certificateFailures": failures}


def subdivisionDagExperiment(seed, trials, maxVertices, maxDegree, field):
    instances = runTrials(lambda rng, i: subdivisionDagTrial(rng, i, maxVertices, maxDegree, field), seed, trials)
    isOk = all(r["boundHolds"] and r["certificateVerified"] for r in instances)
    return {"instances": instances, "status": STATUS_PASS if isOk else STATUS_FAIL}


def _instabilityReport(W1, W2, field):
    barcode1 = persistentDflHomology(shortestPathFiltration(W1), 1, field)
    barcode2 = persistentDflHomology(shortestPathFiltration(W2), 1, field)
    distance = bottleneckDistance(barcode1, barcode2, 1)
    return {"first": _bars(barcode1, 1), "second": _bars(barcode2, 1), "bottleneck": formatValue(distance),
            "status": STATUS_INSTABILITY if distance == INF else STATUS_FAIL}


def subdivisionNonDagExperiment(field):
    W = reciprocalPair()
    return _instabilityReport(W, edgeSubdivide(W, reciprocalPairSubdivision()), field)


def appendageExperiment(field):
    W, appended = reciprocalPair(), reciprocalPairWithAppendage()
    report = _instabilityReport(W, appended, field)
    F = shortestPathFiltration(appended)
    report["bettiCurves"] = {kind: [[formatValue(t), b] for t, b in bettiCurve(F, 1, kind)]
                             for kind in (COMPLEX_DFL, COMPLEX_ALLOWED)}
    return report


def derangementExperiment(maxVertices=5):
    rows = []
    for n in range(2, maxVertices + 1):
        rep = omegaComplex(directedFlagComplex(completeDigraph(n), n - 1), n - 1, CField())
        top = bettiNumbers(rep)[n - 1]
        rows.append({"n": n, "topBetti": top, "derangements": derangementCount(n)})
    isOk = all(r["topBetti"] == r["derangements"] for r in rows)
    return {"instances": rows, "status": STATUS_PASS if isOk else STATUS_FAIL}


def cylinderK2Experiment():
    K2 = completeDigraph(2)
    cylinderGraph = crossProduct(K2, unitInterval())
    betti = bettiNumbers(omegaComplex(directedFlagComplex(K2, 2), 1))
    cylinderComplex = directedFlagComplex(cylinderGraph, 3)
    cylinderBetti = bettiNumbers(omegaComplex(cylinderComplex, 1))
    identities = []
    for name, cycle, filling in CYLINDER_IDENTITIES:
        isInComplex = all(cylinderComplex.contains(p) for p in filling)
        boundary = regularBoundary({p: Fraction(c) for p, c in filling.items()})
        identities.append({"name": name, "holds": isInComplex and boundary == {p: Fraction(c)
                                                                            for p, c in cycle.items()}})
    isOk = betti[1] == 1 and cylinderBetti[1] == 0 and all(i["holds"] for i in identities)
    return {"edges": len(cylinderGraph.edges), "betti": betti, "cylinderBetti": cylinderBetti,
            "identities": identities, "status": STATUS_PASS if isOk else STATUS_FAIL}


def stabilityTrial(rng, index, maxVertices, maxDegree, field):
    n = int(rng.integers(2, maxVertices + 1))
    F1 = randomFiltration(rng, n, 0.5)
    F2 = perturbFiltration(rng, F1, Fraction(int(rng.integers(1, 9)), 4))
    barcode1 = persistentDflHomology(F1, maxDegree, field)
    barcode2 = persistentDflHomology(F2, maxDegree, field)
    linf = entranceTimeLinf(F1, F2)
    distances = [bottleneckDistance(barcode1, barcode2, k) for k in range(maxDegree + 1)]
    return {"trial": index, "vertices": n, "entranceTimeDistance": formatValue(linf),
            "bottleneck": [formatValue(d) for d in distances], "boundHolds": all(d <= linf for d in distances)}


def stabilityExperiment(seed, trials, maxVertices, maxDegree, field):
    instances = runTrials(lambda rng, i: stabilityTrial(rng, i, maxVertices, maxDegree, field), seed, trials)
    isOk = all(r["boundHolds"] for r in instances)
    return {"instances": instances, "status": STATUS_PASS if isOk else STATUS_FAIL}


def runExperiment(name, seed=None, trials=None):
    if seed is None:
        seed = CDirflagParameters.seed
    if trials is None:
        trials = CDirflagParameters.trials
    maxVertices = CDirflagParameters.maxVertices
    maxDegree = CDirflagParameters.maxDegree
    field = CField(CDirflagParameters.persistenceField)

    if name == "subdiv-dag":
        report = subdivisionDagExperiment(seed, trials, maxVertices, maxDegree, field)
    elif name == "subdiv-nondag":
        report = subdivisionNonDagExperiment(field)
    elif name == "appendage":
        report = appendageExperiment(field)
    elif name == "derangement":
        report = derangementExperiment(min(maxVertices, 5))
    elif name == "cylinder-k2":
        report = cylinderK2Experiment()
    elif name == "stability":
        report = stabilityExperiment(seed, trials, min(maxVertices, 7), maxDegree, field)
    else:
        raise ContractError("unknown experiment " + str(name) + ", valid: " + ", ".join(EXPERIMENTS))
    report["experiment"] = name
    report["parameters"] = {"seed": seed, "trials": trials, "maxVertices": maxVertices,
                            "maxDegree": maxDegree, "field": field.name}
    logger.info("Experiment %s: %s", name, report["status"])
    return report
