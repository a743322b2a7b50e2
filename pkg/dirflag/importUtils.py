# importUtils.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Settings reader and parsers for digraphs, maps and witnesses
# ---------------------------------------------------------

from ast import literal_eval
from configparser import ConfigParser
from fractions import Fraction
import json
import logging
import os
import re

import pandas as pd

from .dataStructures import *
from .digraph import CDigraph, CWeightedDigraph
from .homotopy import CEquivalenceCertificate, CMultiStepWitness
from .linearAlgebra import parseField

logger = logging.getLogger(__name__)


def _literal(text):
    """python literal, or the bare string (field = Q, system = dfl)"""
    try:
        return literal_eval(text)
    except (ValueError, SyntaxError):
        return text.strip()


def configToDict(settingsFilename):
    config = ConfigParser(converters={"any": _literal})
    config.optionxform = str
    modelSettings = config.read(settingsFilename)
    if len(modelSettings) == 0:
        logger.error("Missing settings file: %s", settingsFilename)
        return False

    dictionary = {}
    for section in config.sections():
        dictionary[section] = {}
        for option in config.options(section):
            dictionary[section][option] = config.getany(section, option)
    return dictionary


def _readValue(configDict, section, key, default, settingsFilename):
    try:
        return configDict[section][key]
    except (KeyError, TypeError):
        logger.warning("Wrong or missing %s.%s in the settings: %s. The default will be set: %s = %s",
                       section, key, settingsFilename, key, str(default))
        return default


def _systemFromName(name):
    for system, systemName in SYSTEM_NAMES.items():
        if str(name).lower() == systemName.lower():
            return system
    raise ContractError("unknown homotopy system: " + str(name))


def readDirflagParameters(settingsFilename):
    configDict = configToDict(settingsFilename)
    if not configDict:
        return False

    try:
        # [homology]
        CDirflagParameters.field = parseField(
            _readValue(configDict, "homology", "field", "Q", settingsFilename)).characteristic
        CDirflagParameters.maxDim = int(_readValue(configDict, "homology", "maxDim", 2, settingsFilename))
        # [persistence]
        CDirflagParameters.persistenceField = parseField(
            _readValue(configDict, "persistence", "field", 2, settingsFilename)).characteristic
        CDirflagParameters.maxDegree = int(_readValue(configDict, "persistence", "maxDegree", 1, settingsFilename))
        # [homotopy]
        CDirflagParameters.budget = int(_readValue(configDict, "homotopy", "budget", 200000, settingsFilename))
        CDirflagParameters.system = _systemFromName(
            _readValue(configDict, "homotopy", "system", "dfl", settingsFilename))
        # [experiments]
        CDirflagParameters.seed = int(_readValue(configDict, "experiments", "seed", 0, settingsFilename))
        CDirflagParameters.trials = int(_readValue(configDict, "experiments", "trials", 50, settingsFilename))
        CDirflagParameters.maxVertices = int(
            _readValue(configDict, "experiments", "maxVertices", 12, settingsFilename))
        # [parallel]
        CDirflagParameters.threads = int(_readValue(configDict, "parallel", "threads", 1, settingsFilename))
    except (ContractError, ValueError) as error:
        logger.error("Wrong value in the settings %s: %s", settingsFilename, str(error))
        return False

    if CDirflagParameters.maxDim < 0 or CDirflagParameters.maxDegree < 0:
        logger.error("Wrong homology.maxDim or persistence.maxDegree in the settings: %s", settingsFilename)
        logger.error("Valid values: >= 0")
        return False
    if CDirflagParameters.budget <= 0 or CDirflagParameters.trials <= 0:
        logger.error("Wrong homotopy.budget or experiments.trials in the settings: %s", settingsFilename)
        logger.error("Valid values: > 0")
        return False
    if CDirflagParameters.maxVertices < 2 or CDirflagParameters.threads < 1:
        logger.error("Wrong experiments.maxVertices or parallel.threads in the settings: %s", settingsFilename)
        return False
    return True


# --------------------------- numbers ---------------------------

def parseExtended(text, lineNumber):
    """rational or 'inf'"""
    value = str(text).strip()
    if value.lower() in ("inf", "+inf", "infinity"):
        return INF
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineNumber, "not a number: " + value)


def _parseVertex(token, lineNumber):
    try:
        v = int(token)
    except ValueError:
        raise ParseError(lineNumber, "not a vertex index: " + str(token))
    if v < 0:
        raise ParseError(lineNumber, "negative vertex index " + str(v))
    return v


def _weightedGraph(vertexCount, rows, labels=None):
    """rows: (lineNumber, u, v, weight or None)"""
    weights = {}
    isWeighted = False
    for lineNumber, u, v, w in rows:
        if not (0 <= u < vertexCount and 0 <= v < vertexCount):
            raise ParseError(lineNumber, "vertex index out of range")
        if u == v:
            raise ParseError(lineNumber, "self-loop at vertex " + str(u))
        if w is None:
            w = Fraction(1)
        else:
            isWeighted = True
        if w == INF:
            logger.warning("line %d: edge (%d, %d) with infinite weight dropped", lineNumber, u, v)
            continue
        if w <= 0:
            raise ParseError(lineNumber, "nonpositive weight " + str(w))
        if (u, v) in weights:
            raise ParseError(lineNumber, "repeated edge (" + str(u) + ", " + str(v) + ")")
        weights[(u, v)] = w
    graph = CDigraph(vertexCount, weights.keys(), labels)
    return CWeightedDigraph(graph, weights), isWeighted


# --------------------------- digraphs ---------------------------

def readFlagLines(lines):
    """'dim 0' + vertex values, 'dim 1' + 'u v [w]' lines"""
    section = None
    vertexCount = None
    rows = []
    for lineNumber, line in enumerate(lines, start=1):
        tokens = line.split()
        if len(tokens) == 0:
            continue
        if tokens[0] == "dim":
            if len(tokens) != 2 or tokens[1] not in ("0", "1"):
                raise ParseError(lineNumber, "unsupported section: " + line.strip())
            section = int(tokens[1])
            continue
        if section == 0:
            if vertexCount is not None:
                raise ParseError(lineNumber, "vertex values already given")
            values = [parseExtended(t, lineNumber) for t in tokens]
            if any(value != 0 for value in values):
                logger.warning("line %d: nonzero vertex filtration values ignored", lineNumber)
            vertexCount = len(values)
        elif section == 1:
            if vertexCount is None:
                raise ParseError(lineNumber, "edges before the vertex line")
            if len(tokens) not in (2, 3):
                raise ParseError(lineNumber, "expected 'source target [weight]'")
            w = parseExtended(tokens[2], lineNumber) if len(tokens) == 3 else None
            rows.append((lineNumber, _parseVertex(tokens[0], lineNumber), _parseVertex(tokens[1], lineNumber), w))
        else:
            raise ParseError(lineNumber, "data before a 'dim' line")
    if vertexCount is None:
        vertexCount = 0
    return _weightedGraph(vertexCount, rows)


def _checkFieldCounts(filename):
    """raises on the first row with more fields than the header"""
    with open(filename, "r") as f:
        lines = f.read().splitlines()
    columnCount = None
    for lineNumber, line in enumerate(lines, start=1):
        fields = [x for x in re.split(EDGE_SEPARATOR, line.strip()) if x != ""]
        if len(fields) == 0:
            continue
        if columnCount is None:
            columnCount = len(fields)
            continue
        if len(fields) > columnCount:
            raise ParseError(lineNumber, "expected at most " + str(columnCount) + " fields, found " + str(len(fields)))


def readEdgeList(filename):
    """header 'source target [weight]'; integer vertices or labels in order of appearance"""
    _checkFieldCounts(filename)
    try:
        data = pd.read_csv(filename, sep=EDGE_SEPARATOR, engine="python", dtype=str, skip_blank_lines=False,
                           index_col=False)
    except pd.errors.EmptyDataError:
        raise ParseError(1, "empty file")
    columns = [str(c).strip().lower() for c in data.columns]
    if columns[:2] != ["source", "target"] or len(columns) > 3 or (len(columns) == 3 and columns[2] != "weight"):
        raise ParseError(1, "header must be 'source target [weight]'")

    records = []
    for index, row in data.iterrows():
        lineNumber = index + 2
        values = [row.iloc[i] for i in range(len(columns))]
        if all(pd.isna(x) for x in values):
            continue
        if pd.isna(values[0]) or pd.isna(values[1]):
            raise ParseError(lineNumber, "missing source or target")
        w = None
        if len(values) == 3 and not pd.isna(values[2]):
            w = parseExtended(values[2], lineNumber)
        records.append((lineNumber, str(values[0]).strip(), str(values[1]).strip(), w))

    tokens = [r[1] for r in records] + [r[2] for r in records]
    if all(t.lstrip("-").isdigit() for t in tokens):
        vertexCount = max([int(t) for t in tokens] + [-1]) + 1
        rows = [(n, _parseVertex(u, n), _parseVertex(v, n), w) for n, u, v, w in records]
        return _weightedGraph(vertexCount, rows)
    labels = []
    for _, u, v, _ in records:
        for t in (u, v):
            if t not in labels:
                labels.append(t)
    position = {label: i for i, label in enumerate(labels)}
    rows = [(n, position[u], position[v], w) for n, u, v, w in records]
    return _weightedGraph(len(labels), rows, labels)


def readGraph(filename):
    """
    Auto-detects the dialect from the first nonblank line.
    return: (weighted digraph, True when weights were given)
    """
    if not os.path.isfile(filename):
        raise ContractError("missing file: " + str(filename))
    with open(filename, "r") as f:
        lines = f.read().splitlines()
    firstLine = next((line for line in lines if line.strip() != ""), "")
    if firstLine == "":
        return CWeightedDigraph(CDigraph(0)), False
    if firstLine.split()[0] == "dim":
        return readFlagLines(lines)
    return readEdgeList(filename)


# --------------------------- maps and witnesses ---------------------------

def parseMap(text):
    """'0,1,2' or the name of a JSON file holding a list of integers"""
    if os.path.isfile(str(text)):
        with open(text, "r") as f:
            try:
                values = json.load(f)
            except json.JSONDecodeError as error:
                raise ParseError(error.lineno, "invalid JSON map: " + error.msg)
    else:
        values = [t for t in str(text).replace(" ", "").split(",") if t != ""]
    try:
        return tuple(int(v) for v in values)
    except (TypeError, ValueError):
        raise ParseError(1, "map must be a list of integers: " + str(text))


def witnessFromDict(data):
    try:
        return CMultiStepWitness(data["maps"], data.get("forward", []))
    except (KeyError, TypeError, ValueError) as error:
        raise ParseError(1, "malformed witness: " + str(error))


def readJson(filename):
    with open(filename, "r") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as error:
            raise ParseError(error.lineno, error.msg)


def readWitness(filename):
    return witnessFromDict(readJson(filename))


def readCertificate(filename, G, H):
    """JSON with f, g, witnessG and witnessH between the digraphs G and H"""
    data = readJson(filename)
    try:
        return CEquivalenceCertificate(G, H, data["f"], data["g"],
                                       witnessFromDict(data["witnessG"]), witnessFromDict(data["witnessH"]))
    except (KeyError, TypeError) as error:
        raise ParseError(1, "malformed certificate: " + str(error))
