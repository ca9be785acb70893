"""Constacyclic codes of length n = lambda(q-1) over GF(q^2)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .defsets import CodeShape, DefiningSet, bch_bound_of, omega_set
from .errors import (
    ElementsOutsideOmega,
    FieldMismatch,
    InternalDivisibilityFailure,
    LengthMismatch,
    MessageTooLong,
    NotACodeword,
)
from .field import FieldElement, FieldSpec
from .poly import Polynomial, from_roots, p_divmod, x_n_minus


@dataclass(frozen=True, eq=False)
class ParityCheckMatrix:
    """Row ``z`` of the matrix is ``(omega^(z*i))_{0 <= i < n}``."""

    spec: FieldSpec
    rows: np.ndarray

    @property
    def shape(self):
        return self.rows.shape

    def syndrome(self, c) -> np.ndarray:
        c = np.asarray(c, dtype=np.int64)
        if self.rows.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        return self.spec.matmul(self.rows, c[:, None])[:, 0]


@dataclass(frozen=True, eq=False)
class ConstacyclicCode:
    spec: FieldSpec
    shape: CodeShape
    eta: FieldElement
    Z: DefiningSet
    g: Polynomial
    k: int

    @property
    def n(self) -> int:
        return self.shape.n

    def __repr__(self):
        return f"ConstacyclicCode([{self.n},{self.k}] over GF({self.spec.order}), r={self.shape.r}, |Z|={len(self.Z)})"

    def to_dict(self) -> dict:
        return {
            "shape": self.shape.to_dict(),
            "field": self.spec.to_dict(),
            "eta": self.eta.to_list(),
            "defining_set": self.Z.to_dict(),
            "generator": self.g.to_list(),
            "k": self.k,
        }


def constacyclic_unit(spec: FieldSpec, shape: CodeShape) -> FieldElement:
    """``eta = omega^(lambda(q-1))``, of multiplicative order r."""
    return spec.omega_pow(shape.lam * (shape.q - 1))


def build_code(spec: FieldSpec, Z: DefiningSet) -> ConstacyclicCode:
    shape = Z.shape
    if spec.q != shape.q:
        raise FieldMismatch(f"field has q={spec.q} but the defining set has q={shape.q}")
    omega = set(omega_set(shape))
    outside = [z for z in Z.elements if z not in omega]
    if outside:
        raise ElementsOutsideOmega(f"{outside[:5]} not in Omega")
    eta = constacyclic_unit(spec, shape)
    g = from_roots(Z.elements, spec)
    _, rem = p_divmod(x_n_minus(spec, shape.n, eta), g)
    if not rem.is_zero():
        raise InternalDivisibilityFailure(f"generator does not divide x^{shape.n} - eta")
    return ConstacyclicCode(spec, shape, eta, Z, g, shape.n - len(Z.elements))


def code_from_dict(data: dict) -> ConstacyclicCode:
    """Rebuild a code from :meth:`ConstacyclicCode.to_dict` output."""
    from .field import field_build

    f = data["field"]
    spec = field_build(f["p"], f["m"])
    if list(spec.modulus) != list(f["modulus"]):
        raise FieldMismatch("serialized modulus differs from the canonical one")
    return build_code(spec, DefiningSet.from_dict(data["defining_set"]))


def as_vector(spec: FieldSpec, c) -> np.ndarray:
    """Index array from an index array or a sequence of elements/ints."""
    if isinstance(c, np.ndarray):
        return c.astype(np.int64)
    return np.array([spec(x).index for x in c], dtype=np.int64)


def _vector(code: ConstacyclicCode, c) -> np.ndarray:
    if isinstance(c, Polynomial):
        return c.padded(code.n)
    arr = as_vector(code.spec, c)
    if arr.shape != (code.n,):
        raise LengthMismatch(f"expected length {code.n}, got {arr.shape}")
    return arr


def encode(code: ConstacyclicCode, message) -> np.ndarray:
    """Coefficient vector of ``m(x) g(x)`` padded to length n."""
    if not isinstance(message, Polynomial):
        message = Polynomial(code.spec, message)
    if message.degree >= code.k:
        raise MessageTooLong(f"message degree {message.degree} >= k={code.k}")
    return (message * code.g).padded(code.n)


def parity_check(code: ConstacyclicCode) -> ParityCheckMatrix:
    spec = code.spec
    z = np.asarray(code.Z.elements, dtype=np.int64)
    i = np.arange(code.n, dtype=np.int64)
    rows = spec.omega_pow_v(z[:, None] * i[None, :]) if z.size else np.zeros((0, code.n), dtype=np.int64)
    return ParityCheckMatrix(spec, rows)


def is_codeword(code: ConstacyclicCode, c) -> bool:
    """True iff ``c(omega^z) = 0`` for every ``z`` in the defining set."""
    arr = _vector(code, c)
    return not parity_check(code).syndrome(arr).any()


def constacyclic_shift(code: ConstacyclicCode, c) -> np.ndarray:
    """``(c_0, ..., c_{n-1}) -> (eta c_{n-1}, c_0, ..., c_{n-2})``."""
    arr = _vector(code, c)
    if not is_codeword(code, arr):
        raise NotACodeword("shift is only defined on codewords")
    return _shift(code, arr)


def _shift(code, arr):
    out = np.empty_like(arr)
    out[1:] = arr[:-1]
    out[0] = code.spec._mul(code.eta.index, int(arr[-1]))
    return out


def bch_bound(code: ConstacyclicCode) -> int:
    """Distance guaranteed by the longest run of consecutive roots ``omega^(1+ir)``."""
    return bch_bound_of(code.Z)
