"""Hermitian inner product and three views of Hermitian dual containment."""

from __future__ import annotations

import numpy as np

from .code import ConstacyclicCode, as_vector, build_code, parity_check
from .defsets import dual_defining_set
from .errors import DimensionContradiction, LengthMismatch
from .field import FieldElement, FieldSpec
from .poly import p_divmod


def hermitian_inner(spec: FieldSpec, x, y) -> FieldElement:
    """``sum_i x_i * y_i^q``."""
    x = as_vector(spec, x)
    y = as_vector(spec, y)
    if x.shape != y.shape:
        raise LengthMismatch(f"lengths {x.shape} and {y.shape} differ")
    if x.size == 0:
        return spec.zero
    return FieldElement(spec, int(spec.sum_v(spec.mul_v(x, spec.conj_v(y)))))


def dual_code(code: ConstacyclicCode) -> ConstacyclicCode:
    """The Hermitian dual, built from its defining set."""
    return build_code(code.spec, dual_defining_set(code.Z))


def contains_dual(code: ConstacyclicCode) -> bool:
    """Dual containment as ideal containment: ``g`` divides the dual's generator."""
    _, rem = p_divmod(dual_code(code).g, code.g)
    return rem.is_zero()


def generator_matrix(code: ConstacyclicCode) -> np.ndarray:
    """Rows are the coefficient vectors of ``x^j g(x)``, ``0 <= j < k``."""
    G = np.zeros((code.k, code.n), dtype=np.int64)
    g = code.g.c
    for j in range(code.k):
        G[j, j : j + len(g)] = g
    return G


def hermitian_dual_basis(code: ConstacyclicCode) -> np.ndarray:
    """Basis (as rows) of ``{x : <x, y> = 0 for every generator row y}``.

    The constraint rows are the conjugated shifts ``x^j conj(g)(x)``.  Since
    ``g`` is monic of degree ``n - k``, constraint ``j`` has a unit in column
    ``j + n - k`` and nothing to its right, so the system is already in echelon
    form: the first ``n - k`` coordinates are free and the remaining ones
    follow by forward substitution.
    """
    spec = code.spec
    n, k = code.n, code.k
    deg = n - k
    cg = spec.conj_v(code.g.c)
    if cg[-1] != 1:
        raise DimensionContradiction("conjugated generator is not monic")
    X = np.zeros((deg, n), dtype=np.int64)
    X[np.arange(deg), np.arange(deg)] = 1
    if deg == 0:
        return X
    # in coefficient coordinates, x_{j+deg} = -sum_t conj(g_t) x_{j+t} is one integer contraction
    p, D = spec.p, spec.degree
    M = (-spec.mul_matrices(cg[:-1])) % p  # (deg, D, D)
    Mflat = M.transpose(0, 2, 1).reshape(deg * D, D).astype(np.float64)
    Xd = np.zeros((deg, n, D), dtype=np.float64)
    Xd[:, :deg, :] = spec.digits[X[:, :deg]]
    for j in range(k):
        Xd[:, j + deg, :] = np.fmod(Xd[:, j : j + deg, :].reshape(deg, deg * D) @ Mflat, p)
    return Xd.astype(np.int64) @ spec.pw


def gram_check(code: ConstacyclicCode) -> bool:
    """Dual containment without defining sets of the dual.

    Computes a basis of the Hermitian dual from the Hermitian constraints of
    the generator rows and tests every basis vector for membership in the code.
    """
    X = hermitian_dual_basis(code)
    if X.shape[0] != code.n - code.k:
        raise DimensionContradiction(f"dual basis has {X.shape[0]} vectors, expected {code.n - code.k}")
    if X.shape[0] == 0:
        return True
    H = parity_check(code).rows
    return not code.spec.matmul(H, X.T).any()
