"""Exact arithmetic in GF(q^2), q = p^m odd.

Elements are stored over the prime field: an element is a coefficient
vector ``(c_0, ..., c_{2m-1})`` modulo the field modulus, packed into a
single integer ``index = sum(c_i * p**i)``.  Elements of the prime field
GF(p) therefore have index equal to their integer value.

Multiplication goes through exp/log tables with respect to the fixed
primitive element omega (the class of x); addition is digit-wise modulo p.
Both are also available in vectorized form on arrays of indices, which the
polynomial, linear-algebra and oracle layers use.
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

from .errors import DivisionByZero, EvenCharacteristic, FieldMismatch, NotPrime, NotPrimePower

ADD_TABLE_MAX = 4096


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, m


def _power_cycle(p: int, modulus: tuple[int, ...], limit: int) -> list[int] | None:
    """Indices of x^0, x^1, ... modulo ``modulus`` if x has order ``limit``, else None."""
    deg = len(modulus) - 1
    low = modulus[:-1]
    pw = [p**i for i in range(deg)]
    state = [1] + [0] * (deg - 1)
    out = [1]
    for step in range(1, limit + 1):
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [(s - top * c) % p for s, c in zip(state, low)]
        idx = sum(s * w for s, w in zip(state, pw))
        if idx == 1:
            return out if step == limit else None
        out.append(idx)
    return None


class FieldSpec:
    """A concrete GF(q^2) with modulus and primitive element fixed.

    Build instances with :func:`field_build`; the constructor assumes the
    modulus has already been checked to be primitive.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], exp_list: list[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.degree = 2 * m
        self.order = self.q * self.q
        self.modulus = tuple(modulus)
        self.n_units = self.order - 1

        self._exp = exp_list
        log = [-1] * self.order
        for e, idx in enumerate(exp_list):
            log[idx] = e
        self._log = log
        self.exp = np.asarray(exp_list, dtype=np.int64)
        self.log = np.asarray(log, dtype=np.int64)

        # zero gets log 2N so that any sum involving it lands in the zero tail
        N = self.n_units
        self._logz = np.where(self.log < 0, 2 * N, self.log)
        self._expz = np.zeros(4 * N + 1, dtype=np.int64)
        self._expz[: 2 * N] = np.tile(self.exp, 2)
        self._add_table = None

        self.pw = p ** np.arange(self.degree, dtype=np.int64)
        idx = np.arange(self.order, dtype=np.int64)
        self.digits = (idx[:, None] // self.pw[None, :]) % p
        self._digits = [tuple(int(c) for c in row) for row in self.digits]
        self._negidx = ((-self.digits) % p) @ self.pw
        self._pw = [int(w) for w in self.pw]

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # -- element constructors --------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Element from an index, a coefficient sequence or another element."""
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if value < 0:
                return -FieldElement(self, (-value) % self.p)
            if value >= self.order:
                raise ValueError(f"index {value} out of range for GF({self.order})")
            return FieldElement(self, value)
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return FieldElement(self, sum(c * w for c, w in zip(coeffs, self._pw)))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def omega(self) -> "FieldElement":
        return FieldElement(self, self._exp[1])

    def omega_pow(self, e: int) -> "FieldElement":
        return FieldElement(self, self._exp[e % self.n_units])

    def elements(self):
        return (FieldElement(self, i) for i in range(self.order))

    def _check(self, a: "FieldElement"):
        if a.spec is not self and a.spec != self:
            raise FieldMismatch(f"{a!r} does not belong to {self!r}")

    # -- scalar kernels on indices ---------------------------------------

    def _add(self, a: int, b: int) -> int:
        p = self.p
        return sum(((x + y) % p) * w for x, y, w in zip(self._digits[a], self._digits[b], self._pw))

    def _neg(self, a: int) -> int:
        p = self.p
        return sum(((-x) % p) * w for x, w in zip(self._digits[a], self._pw))

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.n_units]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % self.n_units]

    # -- vectorized kernels on index arrays -------------------------------

    def mul_v(self, a, b):
        return self._expz[self._logz[a] + self._logz[b]]

    def add_table(self):
        """Full addition table, built on first use; None for large fields."""
        if self._add_table is None and self.order <= ADD_TABLE_MAX:
            Q, dt = self.order, np.int16 if self.order < 2**15 else np.int32
            table = np.empty((Q, Q), dtype=dt)
            step = max(1, 2**20 // (Q * self.degree))
            for lo in range(0, Q, step):
                blk = self.digits[lo : lo + step, None, :] + self.digits[None, :, :]
                table[lo : lo + step] = (blk % self.p) @ self.pw
            self._add_table = table
        return self._add_table

    def add_v(self, a, b):
        table = self.add_table()
        if table is not None:
            return table[a, b].astype(np.int64)
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.pw

    def sub_v(self, a, b):
        return self.add_v(a, self.neg_v(b))

    def neg_v(self, a):
        return self._negidx[a]

    def inv_v(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.exp[(-self.log[a]) % self.n_units]

    def pow_v(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * e) % self.n_units]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def conj_v(self, a):
        return self.pow_v(a, self.q)

    def sum_v(self, a, axis=-1):
        """Field sum of an index array along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        axis = axis % a.ndim
        return (self.digits[a].sum(axis=axis) % self.p) @ self.pw

    def mul_matrices(self, a) -> np.ndarray:
        """Matrices of ``x -> a*x`` on coefficient vectors, shape ``a.shape + (D, D)``."""
        a = np.asarray(a, dtype=np.int64)
        basis = self.pw  # indices of 1, x, ..., x^(D-1)
        prods = self.mul_v(a[..., None], basis)  # column y is a * x^y
        return np.swapaxes(self.digits[prods], -1, -2)

    def matmul(self, A, B) -> np.ndarray:
        """Field matrix product of index arrays ``A`` (a x n) and ``B`` (n x b).

        Runs as one float64 matmul over GF(p) coefficient planes; the integer
        sums stay far below 2^53, so the result is exact.
        """
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        a, n = A.shape
        b = B.shape[1]
        D = self.degree
        if n * D * (self.p - 1) ** 2 >= 2**53:
            raise OverflowError("matrix too large for exact float accumulation")
        big_a = self.mul_matrices(A).transpose(0, 2, 1, 3).reshape(a * D, n * D)
        big_b = self.digits[B].transpose(0, 2, 1).reshape(n * D, b)
        prod = np.rint(big_a.astype(np.float64) @ big_b.astype(np.float64)).astype(np.int64)
        digits = prod.reshape(a, D, b).transpose(0, 2, 1) % self.p
        return digits @ self.pw

    def omega_pow_v(self, e):
        return self.exp[np.asarray(e, dtype=np.int64) % self.n_units]

    def random_v(self, rng, size, nonzero=False):
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.order, size=size, dtype=np.int64)


class FieldElement:
    """An element of a :class:`FieldSpec`, immutable."""

    __slots__ = ("spec", "index")

    def __init__(self, spec: FieldSpec, index: int):
        self.spec = spec
        self.index = int(index)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec._digits[self.index]

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.spec._check(other)
            return other.index
        if isinstance(other, (int, np.integer)):
            return self.spec(int(other)).index
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec._add(self.index, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self.index))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec._add(self.index, self.spec._neg(b)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec._mul(self.index, b))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec._inv(self.index))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec._mul(self.index, self.spec._inv(b)))

    def __pow__(self, e: int):
        return pow_(self, e)

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.index == other.index and (self.spec is other.spec or self.spec == other.spec)
        if isinstance(other, (int, np.integer)):
            return self == self.spec(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.index))

    def __repr__(self):
        if self.index == 0:
            return "0"
        return f"w^{self.spec._log[self.index]}"

    def to_list(self) -> list[int]:
        return list(self.coeffs)


@functools.lru_cache(maxsize=None)
def field_build(p: int, m: int = 1) -> FieldSpec:
    """GF(p^(2m)) with the lexicographically smallest monic primitive modulus.

    Candidates ``x^(2m) + c_{2m-1} x^(2m-1) + ... + c_0`` are scanned in
    lexicographic order of the little-endian vector ``(c_0, ..., c_{2m-1})``;
    the first one for which x has multiplicative order q^2 - 1 is taken, and
    omega is the class of x.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if m < 1:
        raise ValueError("m must be positive")
    deg = 2 * m
    n_units = p**deg - 1
    for low in itertools.product(range(p), repeat=deg):
        if low[0] == 0:
            continue
        modulus = tuple(low) + (1,)
        cycle = _power_cycle(p, modulus, n_units)
        if cycle is not None:
            return FieldSpec(p, m, modulus, cycle)
    raise RuntimeError(f"no primitive polynomial of degree {deg} over GF({p})")  # pragma: no cover


def field_for_q(q: int) -> FieldSpec:
    """The field GF(q^2) for an odd prime power q."""
    p, m = prime_power(q)
    return field_build(p, m)


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    a.spec._check(b)
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def pow_(a: FieldElement, e: int) -> FieldElement:
    """``a**e`` by square-and-multiply; negative ``e`` allowed for nonzero ``a``."""
    spec = a.spec
    if a.index == 0:
        if e < 0:
            raise DivisionByZero("zero to a negative power")
        return spec.one if e == 0 else spec.zero
    e %= spec.n_units
    result, base = 1, a.index
    while e:
        if e & 1:
            result = spec._mul(result, base)
        base = spec._mul(base, base)
        e >>= 1
    return FieldElement(spec, result)


def conj_q(a: FieldElement) -> FieldElement:
    """The conjugate a^q: Frobenius x -> x^p applied m times."""
    for _ in range(a.spec.m):
        a = pow_(a, a.spec.p)
    return a


def discrete_log(a: FieldElement) -> int:
    if a.index == 0:
        raise DivisionByZero("discrete log of zero")
    return a.spec._log[a.index]


def multiplicative_order(a: FieldElement) -> int:
    if a.index == 0:
        raise DivisionByZero("zero has no multiplicative order")
    n = a.spec.n_units
    return n // math.gcd(n, discrete_log(a))
