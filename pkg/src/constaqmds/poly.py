"""Dense univariate polynomials over GF(q^2).

A :class:`Polynomial` keeps its coefficients as a little-endian numpy array
of element indices (see :mod:`constaqmds.field`), trimmed so the leading
coefficient is nonzero.  The zero polynomial has an empty array.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero, FieldMismatch
from .field import FieldElement, FieldSpec


def _same(a, b):
    if a.spec is not b.spec and a.spec != b.spec:
        raise FieldMismatch("polynomials over different fields")


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:0]


class Polynomial:
    __slots__ = ("spec", "c")

    def __init__(self, spec: FieldSpec, coeffs=()):
        self.spec = spec
        if isinstance(coeffs, np.ndarray):
            arr = coeffs.astype(np.int64, copy=True)
        else:
            arr = np.array([spec(x).index for x in coeffs], dtype=np.int64)
        self.c = _trim(arr)
        self.c.setflags(write=False)

    @classmethod
    def _raw(cls, spec, arr):
        # arr must already be int64 and owned by the new polynomial
        obj = cls.__new__(cls)
        obj.spec = spec
        obj.c = _trim(arr)
        obj.c.setflags(write=False)
        return obj

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, coeff=1) -> "Polynomial":
        arr = np.zeros(degree + 1, dtype=np.int64)
        arr[degree] = spec(coeff).index
        return cls._raw(spec, arr)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.c) - 1

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, int(i)) for i in self.c)

    def is_zero(self) -> bool:
        return len(self.c) == 0

    def leading(self) -> FieldElement:
        return FieldElement(self.spec, int(self.c[-1])) if len(self.c) else self.spec.zero

    def padded(self, n: int) -> np.ndarray:
        """Coefficient indices padded with zeros to length ``n``."""
        if len(self.c) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        out = np.zeros(n, dtype=np.int64)
        out[: len(self.c)] = self.c
        return out

    def to_list(self) -> list[list[int]]:
        digits = self.spec.digits
        return [[int(d) for d in digits[i]] for i in self.c]

    @classmethod
    def from_list(cls, spec: FieldSpec, data) -> "Polynomial":
        return cls(spec, [spec.from_coeffs(v) for v in data])

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.c, other.c)

    def __hash__(self):
        return hash((self.spec, self.c.tobytes()))

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, x in enumerate(self.c):
            if x:
                terms.append(f"({FieldElement(self.spec, int(x))!r})x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def __add__(self, other):
        return p_add(self, other)

    def __sub__(self, other):
        return p_add(self, -other)

    def __neg__(self):
        return Polynomial._raw(self.spec, self.spec.neg_v(self.c))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return p_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return p_divmod(self, other)

    def __floordiv__(self, other):
        return p_divmod(self, other)[0]

    def __mod__(self, other):
        return p_divmod(self, other)[1]

    def __call__(self, a):
        return p_eval(self, a)

    def scale(self, a) -> "Polynomial":
        a = self.spec(a)
        return Polynomial._raw(self.spec, self.spec.mul_v(self.c, a.index))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        return Polynomial._raw(self.spec, np.concatenate([np.zeros(k, dtype=np.int64), self.c]))


def p_add(a: Polynomial, b: Polynomial) -> Polynomial:
    _same(a, b)
    la, lb = len(a.c), len(b.c)
    if la < lb:
        a, b, la, lb = b, a, lb, la
    out = a.c.copy()
    out[:lb] = a.spec.add_v(a.c[:lb], b.c)
    return Polynomial._raw(a.spec, out)


def _mul_arrays(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64)
    if len(a) < len(b):
        a, b = b, a
    acc = np.zeros((len(a) + len(b) - 1, spec.degree), dtype=np.int64)
    digits = spec.digits
    for t, bt in enumerate(b):
        if bt:
            acc[t : t + len(a)] += digits[spec.mul_v(a, bt)]
    return (acc % spec.p) @ spec.pw


def p_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    _same(a, b)
    return Polynomial._raw(a.spec, _mul_arrays(a.spec, a.c, b.c))


def _divmod_arrays(spec: FieldSpec, a: np.ndarray, b: np.ndarray):
    db = len(b) - 1
    if len(a) <= db:
        return np.zeros(0, dtype=np.int64), a.copy()
    rem = spec.digits[a].copy()
    lead_inv = spec._inv(int(b[-1]))
    b_monic = spec.mul_v(b, lead_inv)
    # subtracting coef * b_monic is adding coef * (-b_monic)
    neg_low = spec.neg_v(b_monic[:-1])
    quot = np.zeros(len(a) - db, dtype=np.int64)
    pw, p = spec.pw, spec.p
    for i in range(len(a) - 1, db - 1, -1):
        coef = int((rem[i] % p) @ pw)
        if coef == 0:
            continue
        quot[i - db] = coef
        if db:
            rem[i - db : i] += spec.digits[spec.mul_v(neg_low, coef)]
    r = (rem[:db] % p) @ pw
    return spec.mul_v(quot, lead_inv), r


def p_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder with ``deg(remainder) < deg(b)``."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    _same(a, b)
    q, r = _divmod_arrays(a.spec, a.c, b.c)
    return Polynomial._raw(a.spec, q), Polynomial._raw(a.spec, r)


def p_eval(f: Polynomial, a) -> FieldElement:
    """Horner evaluation of ``f`` at ``a``."""
    spec = f.spec
    x = spec(a).index
    acc = 0
    for coef in f.c[::-1]:
        acc = spec._add(spec._mul(acc, x), int(coef))
    return FieldElement(spec, acc)


def eval_many(f: Polynomial, points) -> np.ndarray:
    """Values of ``f`` at an array of element indices (vectorized)."""
    spec = f.spec
    pts = np.asarray(points, dtype=np.int64)
    if f.is_zero():
        return np.zeros_like(pts)
    logs = spec.log[pts]
    i = np.arange(len(f.c), dtype=np.int64)
    powers = spec.exp[(logs[:, None] * i[None, :]) % spec.n_units]
    powers[pts == 0, :] = 0
    powers[:, 0] = 1
    return spec.sum_v(spec.mul_v(powers, f.c[None, :]), axis=1)


def from_roots(exponents, spec: FieldSpec) -> Polynomial:
    """The monic product of ``(x - omega^e)`` over ``exponents``."""
    roots = sorted({int(e) % spec.n_units for e in exponents})
    out = np.zeros(len(roots) + 1, dtype=np.int64)
    out[0] = 1
    for deg, e in enumerate(roots):
        # (x - a) f = x f + (-a) f, with f = out[:deg+1]
        scaled = spec.mul_v(out[: deg + 1], spec._neg(spec._exp[e]))
        out[1 : deg + 2] = out[: deg + 1].copy()
        out[0] = 0
        out[: deg + 1] = spec.add_v(out[: deg + 1], scaled)
    return Polynomial._raw(spec, out)


def x_n_minus(spec: FieldSpec, n: int, eta) -> Polynomial:
    """The polynomial ``x^n - eta``."""
    arr = np.zeros(n + 1, dtype=np.int64)
    arr[n] = 1
    arr[0] = spec._neg(spec(eta).index)
    return Polynomial._raw(spec, arr)
