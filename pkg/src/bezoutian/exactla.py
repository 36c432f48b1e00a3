"""Small dense matrix helpers over both scalar backends.

Exact matrices are numpy object arrays of Fractions; float matrices are
ordinary float64 arrays.  Everything here targets the m <= 10 sizes the
package works with, so cofactor expansions and Gaussian elimination with
Fraction arithmetic are perfectly adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .scalars import BACKEND_EXACT, BACKEND_FLOAT


def mat(rows, backend: str) -> np.ndarray:
    if backend == BACKEND_EXACT:
        out = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                out[i, j] = v if isinstance(v, Fraction) else Fraction(v)
        return out
    return np.array(rows, dtype=float)


def zeros(n: int, m: int, backend: str) -> np.ndarray:
    if backend == BACKEND_EXACT:
        out = np.empty((n, m), dtype=object)
        out[:] = Fraction(0)
        return out
    return np.zeros((n, m))


def identity(n: int, backend: str) -> np.ndarray:
    out = zeros(n, n, backend)
    for i in range(n):
        out[i, i] = Fraction(1) if backend == BACKEND_EXACT else 1.0
    return out


def backend_of(M: np.ndarray) -> str:
    return BACKEND_EXACT if M.dtype == object else BACKEND_FLOAT


def max_abs(M: np.ndarray):
    """Max-norm of the entries; Fraction for exact input, float otherwise."""
    M = np.asarray(M)
    if M.size == 0:
        return Fraction(0) if M.dtype == object else 0.0
    if M.dtype == object:
        return max(abs(v) for v in M.flat)
    return float(np.max(np.abs(M)))


def symmetry_defect(M: np.ndarray):
    return max_abs(M - M.T)


def exact_det(M: np.ndarray) -> Fraction:
    """Determinant by fraction Gaussian elimination (exact)."""
    A = [list(row) for row in np.asarray(M, dtype=object)]
    n = len(A)
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if A[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            det = -det
        det *= A[col][col]
        inv = 1 / Fraction(A[col][col])
        for r in range(col + 1, n):
            f = A[r][col] * inv
            if f:
                for c in range(col, n):
                    A[r][c] -= f * A[col][c]
    return det


def det(M: np.ndarray):
    M = np.asarray(M)
    if M.dtype == object:
        return exact_det(M)
    return float(np.linalg.det(M))


def adjugate(M: np.ndarray) -> np.ndarray:
    """Cofactor transpose; total (defined for singular input as well)."""
    M = np.asarray(M)
    n = M.shape[0]
    backend = backend_of(M)
    if n == 1:
        out = zeros(1, 1, backend)
        out[0, 0] = Fraction(1) if backend == BACKEND_EXACT else 1.0
        return out
    out = zeros(n, n, backend)
    rows = list(range(n))
    cols = list(range(n))
    for i in range(n):
        for j in range(n):
            minor = M[np.ix_([r for r in rows if r != i], [c for c in cols if c != j])]
            cof = det(minor)
            if (i + j) % 2:
                cof = -cof
            out[j, i] = cof
    return out


@dataclass(frozen=True)
class PsdVerdict:
    """Outcome of a positive semidefiniteness check.

    Exact inputs get an LDL pivot-sign certificate (pivots, rank); float
    inputs get the smallest eigenvalue against a tolerance.
    """

    is_psd: bool
    is_pd: bool
    method: str
    pivots: tuple | None = None
    rank: int | None = None
    min_eigenvalue: float | None = None
    witness: str = ""


def _exact_psd(M: np.ndarray) -> PsdVerdict:
    A = [[Fraction(v) for v in row] for row in np.asarray(M, dtype=object)]
    n = len(A)
    active = list(range(n))
    pivots = []
    while active:
        neg = next((k for k in active if A[k][k] < 0), None)
        if neg is not None:
            return PsdVerdict(False, False, "ldl-pivot", tuple(pivots), len(pivots),
                              witness=f"negative diagonal entry at index {neg}")
        pos = [k for k in active if A[k][k] > 0]
        if not pos:
            # all remaining diagonal entries are zero; PSD forces the block to vanish
            for i in active:
                for j in active:
                    if A[i][j] != 0:
                        return PsdVerdict(False, False, "ldl-pivot", tuple(pivots), len(pivots),
                                          witness=f"zero diagonal with nonzero entry ({i},{j})")
            break
        k = max(pos, key=lambda i: A[i][i])
        d = A[k][k]
        pivots.append(d)
        active.remove(k)
        col = {i: A[i][k] for i in active}
        for i in active:
            if col[i] == 0:
                continue
            f = col[i] / d
            for j in active:
                A[i][j] -= f * col[j]
    rank = len(pivots)
    return PsdVerdict(True, rank == n, "ldl-pivot", tuple(pivots), rank)


def psd_certificate(M: np.ndarray, tol: float = 1e-9) -> PsdVerdict:
    """Certify M >= 0; exact pivots for rational input, eigenvalues for float."""
    M = np.asarray(M)
    if M.dtype == object:
        return _exact_psd(M)
    sym = 0.5 * (M + M.T)
    eigs = np.linalg.eigvalsh(sym)
    scale = max(1.0, float(np.max(np.abs(sym))))
    lo = float(eigs[0])
    is_psd = lo >= -tol * scale
    is_pd = lo > tol * scale
    witness = "" if is_psd else f"negative eigenvalue {lo:.3e}"
    return PsdVerdict(is_psd, is_pd, "eigenvalue", None, None, lo, witness)
