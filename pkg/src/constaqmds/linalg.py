"""Exact Gaussian elimination over GF(q^2) on arrays of element indices."""

from __future__ import annotations

import numpy as np

from .field import FieldSpec


def row_reduce(spec: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` and its pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = spec.mul_v(A[r], spec._inv(int(A[r, c])))
        factors = A[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            A[hit] = spec.sub_v(A[hit], spec.mul_v(factors[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(spec: FieldSpec, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(row_reduce(spec, M)[1])


def nullspace(spec: FieldSpec, M, ncols: int | None = None) -> np.ndarray:
    """A basis (as rows) of ``{x : M x = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        n = ncols if ncols is not None else (M.shape[1] if M.ndim == 2 else 0)
        return np.eye(n, dtype=np.int64)
    R, pivots = row_reduce(spec, M)
    n = R.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for row, pc in enumerate(pivots):
            basis[b, pc] = spec._neg(int(R[row, f]))
    return basis


def batch_singular(spec: FieldSpec, M: np.ndarray) -> np.ndarray:
    """Singularity flags for a stack of square matrices of shape ``(B, d, d)``."""
    A = np.array(M, dtype=np.int64, copy=True)
    B, d, _ = A.shape
    singular = np.zeros(B, dtype=bool)
    rows = np.arange(B)
    for c in range(d):
        col = A[:, c:, c] != 0
        has = col.any(axis=1)
        singular |= ~has
        piv = c + np.argmax(col, axis=1)
        swap = piv != c
        if swap.any():
            sr = rows[swap]
            top = A[sr, c].copy()
            A[sr, c] = A[sr, piv[swap]]
            A[sr, piv[swap]] = top
        if c == d - 1:
            break
        pivval = np.where(has, A[:, c, c], 1)
        f = spec.mul_v(A[:, c + 1 :, c], spec.inv_v(pivval)[:, None])
        A[:, c + 1 :, c:] = spec.sub_v(A[:, c + 1 :, c:], spec.mul_v(f[:, :, None], A[:, None, c, c:]))
    return singular
