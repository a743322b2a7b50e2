# digraph.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Simple digraphs, weighted digraphs and vertex maps
# ---------------------------------------------------------

from fractions import Fraction
import itertools
import logging

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .dataStructures import *

logger = logging.getLogger(__name__)


class CDigraph:
    """
    Simple digraph on the dense vertex set 0..vertexCount-1.
    Optional labels give the external name of every vertex.
    """
    def __init__(self, vertexCount, edges=(), labels=None):
        if vertexCount < 0:
            raise ContractError("negative vertex count")
        edgeSet = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertexCount and 0 <= v < vertexCount):
                raise ContractError("edge (" + str(u) + ", " + str(v) + ") out of range")
            if u == v:
                raise ContractError("self-loop at vertex " + str(u))
            edgeSet.add((u, v))
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != vertexCount or len(set(labels)) != vertexCount:
                raise ContractError("labels must be a bijection onto the vertices")

        self.vertexCount = vertexCount
        self.edges = frozenset(edgeSet)
        self.labels = labels
        outNeighbours = [set() for _ in range(vertexCount)]
        inNeighbours = [set() for _ in range(vertexCount)]
        for u, v in self.edges:
            outNeighbours[u].add(v)
            inNeighbours[v].add(u)
        self.outNeighbours = tuple(frozenset(s) for s in outNeighbours)
        self.inNeighbours = tuple(frozenset(s) for s in inNeighbours)

    def hasEdge(self, u, v):
        return v in self.outNeighbours[u]

    def isTooreq(self, u, v):
        """u => v: equal or joined by an edge u -> v."""
        return u == v or v in self.outNeighbours[u]

    def sortedEdges(self):
        return sorted(self.edges)

    def neighbours(self, v):
        return sorted(self.outNeighbours[v] | self.inNeighbours[v])

    def label(self, v):
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def toNetworkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.vertexCount))
        graph.add_edges_from(self.sortedEdges())
        return graph

    def __eq__(self, other):
        return (isinstance(other, CDigraph) and self.vertexCount == other.vertexCount
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertexCount, self.edges))

    def __repr__(self):
        return "CDigraph(" + str(self.vertexCount) + ", " + str(self.sortedEdges()) + ")"


class CWeightedDigraph:
    def __init__(self, graph, weight=None):
        if weight is None:
            weight = {e: 1 for e in graph.edges}
        weights = {}
        for e, w in weight.items():
            e = (int(e[0]), int(e[1]))
            if e not in graph.edges:
                raise ContractError("weight given for a missing edge " + str(e))
            w = Fraction(w)
            if w <= 0:
                raise ContractError("nonpositive weight " + str(w) + " on edge " + str(e))
            weights[e] = w
        if len(weights) != len(graph.edges):
            raise ContractError("every edge needs a weight")
        self.graph = graph
        self.weight = weights

    @property
    def vertexCount(self):
        return self.graph.vertexCount

    def toNetworkx(self):
        graph = self.graph.toNetworkx()
        for (u, v), w in self.weight.items():
            graph[u][v]["weight"] = w
        return graph

    def __repr__(self):
        return "CWeightedDigraph(" + str(self.vertexCount) + ", " + \
               str(sorted(self.weight.items())) + ")"


# --------------------------- vertex maps ---------------------------

def checkMap(f, G, H):
    if len(f) != G.vertexCount:
        raise ContractError("map has " + str(len(f)) + " entries, source has "
                            + str(G.vertexCount) + " vertices")
    for y in f:
        if not 0 <= y < H.vertexCount:
            raise ContractError("map image " + str(y) + " out of range")


def identityMap(n):
    return tuple(range(n))


def constantMap(n, v):
    return tuple([v] * n)


def composeMaps(first, second):
    """second after first"""
    return tuple(second[y] for y in first)


def directedTriangles(G):
    for v0 in range(G.vertexCount):
        for v1 in sorted(G.outNeighbours[v0]):
            for v2 in sorted(G.outNeighbours[v0] & G.outNeighbours[v1]):
                yield v0, v1, v2


def classifyDigraphMap(f, G, H):
    checkMap(f, G, H)
    isStrong = True
    for u, v in G.edges:
        if f[u] == f[v]:
            isStrong = False
        elif not H.hasEdge(f[u], f[v]):
            return MAP_NOT_WEAK
    if isStrong:
        return MAP_STRONG
    for v0, v1, v2 in directedTriangles(G):
        if f[v0] == f[v2] and f[v1] != f[v0]:
            return MAP_WEAK
    return MAP_TRIANGLE_COLLAPSING


# --------------------------- constructions ---------------------------

def unitInterval():
    return CDigraph(2, [(0, 1)])


def completeDigraph(n):
    return CDigraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def boxProduct(G, H):
    """vertex (x, y) is numbered x * |V(H)| + y"""
    m = H.vertexCount
    edges = []
    for x in range(G.vertexCount):
        for y, y2 in H.edges:
            edges.append((x * m + y, x * m + y2))
    for x, x2 in G.edges:
        for y in range(m):
            edges.append((x * m + y, x2 * m + y))
    return CDigraph(G.vertexCount * m, edges)


def crossProduct(G, H):
    m = H.vertexCount
    edges = []
    for x, x2 in itertools.product(range(G.vertexCount), repeat=2):
        if not G.isTooreq(x, x2):
            continue
        for y, y2 in itertools.product(range(m), repeat=2):
            if H.isTooreq(y, y2) and not (x == x2 and y == y2):
                edges.append((x * m + y, x2 * m + y2))
    return CDigraph(G.vertexCount * m, edges)


def inducedSubgraph(G, vertices):
    vertices = sorted(set(vertices))
    position = {v: i for i, v in enumerate(vertices)}
    edges = [(position[u], position[v]) for u, v in G.edges if u in position and v in position]
    labels = None
    if G.labels is not None:
        labels = [G.labels[v] for v in vertices]
    return CDigraph(len(vertices), edges, labels), vertices


def weakComponents(G):
    n = G.vertexCount
    if n == 0:
        return []
    rows = np.array([u for u, _ in G.sortedEdges()], dtype=int)
    cols = np.array([v for _, v in G.sortedEdges()], dtype=int)
    adjacency = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    nrComponents, componentOf = connected_components(adjacency, directed=True, connection="weak")
    parts = [[] for _ in range(nrComponents)]
    for v in range(n):
        parts[componentOf[v]].append(v)
    return sorted(parts)


def reciprocalPairs(G):
    return {frozenset((u, v)) for u, v in G.edges if u < v and G.hasEdge(v, u)}


def isOriented(G):
    return len(reciprocalPairs(G)) == 0


def isDag(G):
    return nx.is_directed_acyclic_graph(G.toNetworkx())


def isPseudoTree(G):
    if G.vertexCount == 0:
        return False
    return nx.is_tree(G.toNetworkx().to_undirected())


def starCentres(G):
    return [v for v in range(G.vertexCount) if len(G.outNeighbours[v]) == G.vertexCount - 1]


def inverseStarCentres(G):
    return [v for v in range(G.vertexCount) if len(G.inNeighbours[v]) == G.vertexCount - 1]


def isPathCollapsing(f, G):
    """paths i ~> j ~> k with f(i) = f(k) force f(j) = f(i)"""
    graph = G.toNetworkx()
    reach = {v: nx.descendants(graph, v) for v in range(G.vertexCount)}
    for i in range(G.vertexCount):
        for j in reach[i]:
            for k in reach[j]:
                if f[i] == f[k] and f[j] != f[i]:
                    return False
    return True


# --------------------------- weighted digraphs ---------------------------

def shortestPathQuasimetric(W):
    """d[i][j] = length of a shortest directed path i ~> j, INF if none"""
    n = W.vertexCount
    graph = W.toNetworkx()
    d = [[INF] * n for _ in range(n)]
    for source in range(n):
        lengths = nx.single_source_dijkstra_path_length(graph, source, weight="weight")
        for target, length in lengths.items():
            d[source][target] = Fraction(length)
    return d


def isContraction(f, G, H):
    dG = shortestPathQuasimetric(G)
    dH = shortestPathQuasimetric(H)
    for i, j in itertools.product(range(G.vertexCount), repeat=2):
        if dH[f[i]][f[j]] > dG[i][j]:
            return False
    return True


def _checkSubdivision(W, S):
    subdivision = {}
    for e, proportions in S.items():
        e = (int(e[0]), int(e[1]))
        if e not in W.graph.edges:
            raise ContractError("subdivision key " + str(e) + " is not an edge")
        proportions = tuple(Fraction(s) for s in proportions)
        if len(proportions) == 0:
            raise ContractError("empty subdivision tuple on edge " + str(e))
        if any(s <= 0 for s in proportions):
            raise ContractError("nonpositive proportion on edge " + str(e))
        if sum(proportions) != 1:
            raise ContractError("proportions on edge " + str(e) + " sum to " + str(sum(proportions)))
        subdivision[e] = proportions
    return subdivision


def _subdividedVertices(W, S):
    """yields (edge, i, position before vertex i) for the new vertices, numbered from n"""
    for e in W.graph.sortedEdges():
        if e in S:
            position = Fraction(0)
            for i in range(1, len(S[e])):
                position += S[e][i - 1]
                yield e, i, position


def edgeSubdivide(W, S):
    S = _checkSubdivision(W, S)
    n = W.vertexCount
    newVertex = {}
    for index, (e, i, _) in enumerate(_subdividedVertices(W, S)):
        newVertex[(e, i)] = n + index

    edges = {}
    for e in W.graph.sortedEdges():
        if e not in S:
            edges[e] = W.weight[e]
            continue
        d = len(S[e])
        chain = [e[0]] + [newVertex[(e, i)] for i in range(1, d)] + [e[1]]
        for i in range(d):
            edges[(chain[i], chain[i + 1])] = S[e][i] * W.weight[e]

    labels = None
    if W.graph.labels is not None:
        labels = list(W.graph.labels) + [W.graph.label(e[0]) + ">" + W.graph.label(e[1]) + ":" + str(i)
                                         for (e, i) in sorted(newVertex, key=newVertex.get)]
    graph = CDigraph(n + len(newVertex), edges.keys(), labels)
    return CWeightedDigraph(graph, edges)


def subdivisionMaps(W, S):
    """
    f: inclusion V(G) -> V(s_S G)
    g: new vertices rounded to the nearer end of their edge (the start when strictly before 1/2)
    h: only the first-half vertices moved to the start of their edge
    """
    S = _checkSubdivision(W, S)
    n = W.vertexCount
    f = identityMap(n)
    g = list(range(n))
    h = list(range(n))
    for index, (e, _, position) in enumerate(_subdividedVertices(W, S)):
        v = n + index
        if position < Fraction(1, 2):
            g.append(e[0])
            h.append(e[0])
        else:
            g.append(e[1])
            h.append(v)
    return f, tuple(g), tuple(h)
