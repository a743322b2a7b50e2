# exportUtils.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# ---------------------------------------------------------

import json
import os

import pandas as pd

from .dataStructures import *


def formatValue(value):
    if value == INF:
        return "inf"
    return str(value)


def barcodeToDataFrame(barcode):
    rows = [{"degree": b.degree, "birth": formatValue(b.birth), "death": formatValue(b.death)}
            for b in barcode.bars]
    return pd.DataFrame(rows, columns=["degree", "birth", "death"])


def bettiToDataFrame(betti):
    return pd.DataFrame({"degree": list(range(len(betti))), "betti": list(betti)})


def dataFrameToText(data, filename):
    """CSV text, or JSON records when the filename ends with .json"""
    if filename is not None and filename.lower().endswith(".json"):
        return toJson(json.loads(data.to_json(orient="records")))
    return data.to_csv(index=False)


def toJson(document):
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def writeText(text, filename):
    folder = os.path.dirname(filename)
    if folder != "" and not os.path.exists(folder):
        os.makedirs(folder)
    with open(filename, "w") as f:
        f.write(text)


def writeBarcode(barcode, filename):
    writeText(dataFrameToText(barcodeToDataFrame(barcode), filename), filename)


def writeBettiTable(betti, filename):
    writeText(dataFrameToText(bettiToDataFrame(betti), filename), filename)


def flagFileText(W, isWeighted=True):
    lines = ["dim 0", " ".join(["0"] * W.vertexCount), "dim 1"]
    for u, v in W.graph.sortedEdges():
        if isWeighted:
            lines.append(str(u) + " " + str(v) + " " + formatValue(W.weight[(u, v)]))
        else:
            lines.append(str(u) + " " + str(v))
    return "\n".join(lines) + "\n"


def writeFlagFile(W, filename, isWeighted=True):
    writeText(flagFileText(W, isWeighted), filename)


def witnessToDict(witness):
    return {"maps": [list(m) for m in witness.maps], "forward": list(witness.forward)}


def certificateToDict(cert):
    return {"f": list(cert.f), "g": list(cert.g),
            "witnessG": witnessToDict(cert.witnessG), "witnessH": witnessToDict(cert.witnessH)}


def interleavingToDict(cert):
    def witnesses(table):
        return {("default" if t is None else formatValue(t)): witnessToDict(w) for t, w in table.items()}
    return {"delta": formatValue(cert.delta), "f": list(cert.f), "g": list(cert.g),
            "firstWitnesses": witnesses(cert.firstWitnesses), "secondWitnesses": witnesses(cert.secondWitnesses)}
