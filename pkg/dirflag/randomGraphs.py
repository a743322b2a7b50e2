# randomGraphs.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Seeded random digraphs, weighted digraphs, maps and filtrations
# ---------------------------------------------------------

from fractions import Fraction
import itertools

import numpy as np

from .dataStructures import *
from .digraph import CDigraph, CWeightedDigraph, classifyDigraphMap
from .persistence import CFiltration


def createGenerator(seed):
    return np.random.default_rng(seed)


def randomDigraph(rng, n, p):
    edges = [(u, v) for u, v in itertools.permutations(range(n), 2) if rng.random() < p]
    return CDigraph(n, edges)


def randomWeight(rng, denominators=(1, 2, 4)):
    return Fraction(int(rng.integers(1, 9)), int(rng.choice(denominators)))


def randomWeightedDigraph(rng, n, p):
    G = randomDigraph(rng, n, p)
    return CWeightedDigraph(G, {e: randomWeight(rng) for e in G.sortedEdges()})


def randomWeightedDag(rng, n, p):
    """edges only from lower to higher position of a random vertex order"""
    order = rng.permutation(n)
    edges = [(int(order[a]), int(order[b])) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    G = CDigraph(n, edges)
    return CWeightedDigraph(G, {e: randomWeight(rng) for e in G.sortedEdges()})


def randomSubdivision(rng, W, maxPieces=3):
    """random nonempty set of edges, each cut into positive proportions summing to 1"""
    edges = W.graph.sortedEdges()
    S = {}
    for e in edges:
        if rng.random() < 0.5:
            pieces = int(rng.integers(2, maxPieces + 1))
            parts = [int(x) for x in rng.integers(1, 5, size=pieces)]
            S[e] = tuple(Fraction(x, sum(parts)) for x in parts)
    if len(S) == 0 and len(edges) > 0:
        e = edges[int(rng.integers(len(edges)))]
        S[e] = (Fraction(1, 2), Fraction(1, 2))
    return S


def randomPseudoTree(rng, n, isOriented=True, reciprocalCount=1):
    """random tree, every edge oriented at random, plus reciprocal edges when not oriented"""
    edges = []
    for v in range(1, n):
        u = int(rng.integers(v))
        edges.append((u, v) if rng.random() < 0.5 else (v, u))
    if not isOriented and len(edges) > 0:
        for index in rng.choice(len(edges), size=min(reciprocalCount, len(edges)), replace=False):
            u, v = edges[int(index)]
            edges.append((v, u))
    return CDigraph(n, edges)


def randomStarLike(rng, n, p, isInverse=False, hasReciprocal=False):
    """vertex 0 is the (inverse) star centre"""
    edges = []
    for v in range(1, n):
        edges.append((v, 0) if isInverse else (0, v))
    for u, v in itertools.permutations(range(1, n), 2):
        if rng.random() < p:
            edges.append((u, v))
    if hasReciprocal and n > 1:
        edges.append((0, 1) if isInverse else (1, 0))
    return CDigraph(n, edges)


def randomMap(rng, n, m):
    return tuple(int(x) for x in rng.integers(0, m, size=n))


def randomMapOfClass(rng, G, H, minimum, attempts=200):
    """random vertex map of at least the given class, or None after the attempts"""
    for _ in range(attempts):
        f = randomMap(rng, G.vertexCount, H.vertexCount)
        if classifyDigraphMap(f, G, H) >= minimum:
            return f
    return None


def randomNeighbourMap(rng, f, H, isForward=True):
    """moves every image to itself or to a random out (in) neighbour"""
    g = []
    for y in f:
        options = sorted((H.outNeighbours[y] if isForward else H.inNeighbours[y]) | {y})
        g.append(int(options[int(rng.integers(len(options)))]))
    return tuple(g)


def randomFiltration(rng, n, p, maxTime=8):
    """entrance times in quarters on a random set of ordered pairs"""
    entrance = {}
    for u, v in itertools.permutations(range(n), 2):
        if rng.random() < p:
            entrance[(u, v)] = Fraction(int(rng.integers(0, 4 * maxTime + 1)), 4)
    return CFiltration(n, entrance)


def perturbFiltration(rng, F, amount):
    """every entrance time moved by at most amount, staying nonnegative"""
    entrance = {}
    for e, t in F.entrance.items():
        shift = Fraction(int(rng.integers(-4, 5)), 4) * amount
        entrance[e] = max(Fraction(0), t + shift)
    return CFiltration(F.vertexCount, entrance)
