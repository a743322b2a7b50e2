# linearAlgebra.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Exact elimination over Q (Fraction) or GF(p) (int mod p)
# ---------------------------------------------------------

from fractions import Fraction
import numpy as np

from .dataStructures import *


class CField:
    def __init__(self, characteristic=RATIONALS):
        characteristic = int(characteristic)
        if characteristic != RATIONALS and not isPrime(characteristic):
            raise ContractError("field characteristic must be 0 or a prime: " + str(characteristic))
        self.characteristic = characteristic
        self.zero = self.element(0)
        self.one = self.element(1)

    @property
    def isRational(self):
        return self.characteristic == RATIONALS

    @property
    def name(self):
        if self.isRational:
            return "Q"
        return "GF(" + str(self.characteristic) + ")"

    def element(self, value):
        if self.isRational:
            return Fraction(value)
        return int(value) % self.characteristic

    def inverse(self, value):
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.isRational:
            return 1 / Fraction(value)
        return pow(int(value), self.characteristic - 2, self.characteristic)

    def reduce(self, array):
        if self.isRational:
            return array
        return array % self.characteristic

    def zeros(self, nrRows, nrColumns):
        return np.full((nrRows, nrColumns), self.zero, dtype=object)

    def identity(self, n):
        matrix = self.zeros(n, n)
        for i in range(n):
            matrix[i, i] = self.one
        return matrix

    def __eq__(self, other):
        return isinstance(other, CField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(self.characteristic)

    def __repr__(self):
        return "CField(" + self.name + ")"


def isPrime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def parseField(text):
    """Accepts 'Q', 'rationals', '0', a prime 'p' or 'GF(p)'."""
    value = str(text).strip()
    if value.upper() in ("Q", "QQ", "RATIONALS", "0"):
        return CField(RATIONALS)
    if value.upper().startswith("GF(") and value.endswith(")"):
        value = value[3:-1]
    try:
        return CField(int(value))
    except ValueError:
        raise ContractError("unknown field: " + str(text))


def matrixProduct(A, B, field):
    if A.shape[1] == 0 or A.shape[0] == 0 or B.shape[1] == 0:
        return field.zeros(A.shape[0], B.shape[1])
    return field.reduce(A.dot(B))


def isZeroMatrix(A):
    return A.size == 0 or np.count_nonzero(A) == 0


def rowReduce(matrix, field):
    """
    Gauss-Jordan elimination to reduced row echelon form.
    The pivot row is the candidate with the fewest nonzero entries.
    return: (reduced copy, list of pivot columns)
    """
    M = field.reduce(np.array(matrix, dtype=object, copy=True))
    nrRows, nrColumns = M.shape
    pivotColumns = []
    pivotRow = 0
    for col in range(nrColumns):
        if pivotRow == nrRows:
            break
        candidates = [r for r in np.nonzero(M[pivotRow:, col])[0] + pivotRow]
        if len(candidates) == 0:
            continue
        best = min(candidates, key=lambda r: np.count_nonzero(M[r, col:]))
        if best != pivotRow:
            M[[pivotRow, best]] = M[[best, pivotRow]]
        M[pivotRow] = field.reduce(M[pivotRow] * field.inverse(M[pivotRow, col]))
        for r in np.nonzero(M[:, col])[0]:
            if r != pivotRow:
                M[r] = field.reduce(M[r] - M[r, col] * M[pivotRow])
        pivotColumns.append(col)
        pivotRow += 1
    return M, pivotColumns


def rank(matrix, field):
    if matrix.size == 0:
        return 0
    return len(rowReduce(matrix, field)[1])


def nullSpace(matrix, field):
    """
    Kernel basis with the columns eliminated in reverse order, so that every
    basis vector has its own free column as first nonzero entry, equal to 1,
    and zeros at all other free columns.
    return: (basis as columns of an n x d matrix, free column indices)
    """
    n = matrix.shape[1]
    if matrix.shape[0] == 0:
        return field.identity(n), list(range(n))

    reversedMatrix = np.array(matrix, dtype=object)[:, ::-1]
    R, pivots = rowReduce(reversedMatrix, field)
    pivotSet = set(pivots)
    free = [c for c in range(n) if c not in pivotSet]

    basis = field.zeros(n, len(free))
    for j, c in enumerate(free):
        basis[n - 1 - c, j] = field.one
        for i, p in enumerate(pivots):
            if R[i, c] != 0:
                basis[n - 1 - p, j] = field.reduce(-R[i, c])
    freeColumns = [n - 1 - c for c in free]
    # free columns in increasing original order
    order = sorted(range(len(free)), key=lambda j: freeColumns[j])
    return basis[:, order], [freeColumns[j] for j in order]


def isInColumnSpace(matrix, vector, field):
    if matrix.shape[1] == 0:
        return isZeroMatrix(vector.reshape(-1, 1))
    augmented = np.concatenate([matrix, vector.reshape(-1, 1)], axis=1)
    return rank(augmented, field) == rank(matrix, field)
