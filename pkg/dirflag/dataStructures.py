# dataStructures.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# ---------------------------------------------------------

import os

from .commonConst import *


class CDirflagParameters:
    field = RATIONALS               # homology field: 0 = Q, or a prime p
    maxDim = 2                      # highest homology degree reported
    persistenceField = 2            # GF(2) for barcodes
    maxDegree = 1                   # highest barcode degree
    budget = 200000                 # maximum number of maps visited by a search
    system = SYSTEM_DFL
    seed = 0
    trials = 50
    maxVertices = 12                # random instances in experiments
    threads = 1


def resolveThreadCount():
    threads = max(1, int(CDirflagParameters.threads))
    cap = os.environ.get(THREADS_VARIABLE)
    if cap:
        try:
            threads = min(threads, max(1, int(cap)))
        except ValueError:
            pass
    return threads


class DirflagError(Exception):
    pass


class ContractError(DirflagError, ValueError):
    pass


class TruncationError(DirflagError):
    pass


class MorphismError(DirflagError):
    pass


class RetractionError(ContractError):
    pass


class WitnessError(DirflagError):
    def __init__(self, step, message):
        super().__init__("step " + str(step) + ": " + message)
        self.step = step


class ParseError(DirflagError):
    def __init__(self, lineNumber, message):
        super().__init__("line " + str(lineNumber) + ": " + message)
        self.lineNumber = lineNumber
