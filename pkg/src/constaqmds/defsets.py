"""Cyclotomic cosets, the root index set and the two defining-set families.

Everything here is integer arithmetic modulo ``rn = q^2 - 1``; no field is
needed.  Roots of ``x^n - eta`` are ``omega^z`` for ``z`` in
``omega_set(shape) = {1 + i*r : 0 <= i < n}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DeltaOutOfRange,
    ElementsOutsideOmega,
    EvenCharacteristic,
    EvenR,
    NotADivisor,
    OddR,
    ROne,
    RTooLarge,
)
from .field import prime_power


@dataclass(frozen=True)
class CodeShape:
    """Length ``n = lambda*(q-1)`` with ``r*lambda = q+1``."""

    q: int
    r: int

    def __post_init__(self):
        prime_power(self.q)
        if self.q % 2 == 0:
            raise EvenCharacteristic(f"q={self.q} must be odd")
        if self.r < 1 or (self.q + 1) % self.r:
            raise NotADivisor(f"r={self.r} does not divide q+1={self.q + 1}")

    @property
    def lam(self) -> int:
        return (self.q + 1) // self.r

    @property
    def n(self) -> int:
        return self.lam * (self.q - 1)

    @property
    def rn(self) -> int:
        return self.r * self.n

    def to_dict(self) -> dict:
        return {"q": self.q, "r": self.r, "lambda": self.lam, "n": self.n}


def divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


@dataclass(frozen=True)
class DefiningSet:
    shape: CodeShape
    elements: tuple[int, ...]
    family: str = "custom"
    delta: int | None = None

    def __post_init__(self):
        rn, r = self.shape.rn, self.shape.r
        elems = tuple(sorted({int(z) % rn for z in self.elements}))
        bad = [z for z in elems if z % r != 1 % r]
        if bad:
            raise ElementsOutsideOmega(f"elements {bad[:5]} are not 1 mod r={r}")
        object.__setattr__(self, "elements", elems)
        if self.delta is None:
            object.__setattr__(self, "delta", len(elems))

    @classmethod
    def custom(cls, shape: CodeShape, elements) -> "DefiningSet":
        return cls(shape, tuple(elements), "custom")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, z):
        return z % self.shape.rn in set(self.elements)

    def to_dict(self) -> dict:
        return {**self.shape.to_dict(), "family": self.family, "delta": self.delta,
                "elements": list(self.elements)}

    @classmethod
    def from_dict(cls, data: dict) -> "DefiningSet":
        shape = CodeShape(data["q"], data["r"])
        return cls(shape, tuple(data["elements"]), data.get("family", "custom"), data.get("delta"))


def cyclotomic_coset(j: int, modulus: int, multiplier: int) -> tuple[int, ...]:
    """Orbit of ``j`` under ``x -> multiplier * x`` modulo ``modulus``."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    start = j % modulus
    orbit, z = [start], (start * multiplier) % modulus
    while z != start:
        orbit.append(z)
        z = (z * multiplier) % modulus
        if len(orbit) > modulus:
            # multiplier not invertible: the orbit of j is eventually periodic
            break
    return tuple(sorted(set(orbit)))


def omega_set(shape: CodeShape) -> tuple[int, ...]:
    return tuple(sorted((1 + i * shape.r) % shape.rn for i in range(shape.n)))


def max_delta_even(shape: CodeShape) -> int:
    q, r = shape.q, shape.r
    return (r + 2) * (q + 1) // (2 * r) - 2


def max_delta_odd(shape: CodeShape) -> int:
    q, r = shape.q, shape.r
    return (r + 1) * (q + 1) // (2 * r) - 2


def _family_set(shape: CodeShape, delta: int, offset: int, family: str) -> DefiningSet:
    q, r, rn = shape.q, shape.r, shape.rn
    base = 1 + offset * (q + 1)
    elems = tuple((base + r * (j - 1)) % rn for j in range(1, delta + 1))
    return DefiningSet(shape, elems, family, delta)


def defining_set_even(shape: CodeShape, delta: int) -> DefiningSet:
    """``{1 + r(j-1) + ((r-2)/2)(q+1) : 1 <= j <= delta}`` for even ``r != q+1``."""
    if shape.r % 2:
        raise OddR(f"r={shape.r} is odd; the even family needs an even divisor of q+1")
    if shape.r == shape.q + 1:
        raise RTooLarge(f"r = q+1 = {shape.r} is excluded for the even family")
    hi = max_delta_even(shape)
    if not 1 <= delta <= hi:
        raise DeltaOutOfRange(f"delta={delta} outside [1, {hi}] for q={shape.q}, r={shape.r}")
    return _family_set(shape, delta, (shape.r - 2) // 2, "even")


def defining_set_odd(shape: CodeShape, delta: int) -> DefiningSet:
    """``{1 + r(j-1) + ((r-1)/2)(q+1) : 1 <= j <= delta}`` for odd ``r >= 3``."""
    if shape.r % 2 == 0:
        raise EvenR(f"r={shape.r} is even; the odd family needs an odd divisor of q+1")
    if shape.r == 1:
        raise ROne("r = 1 is excluded for the odd family")
    hi = max_delta_odd(shape)
    if not 1 <= delta <= hi:
        raise DeltaOutOfRange(f"delta={delta} outside [1, {hi}] for q={shape.q}, r={shape.r}")
    return _family_set(shape, delta, (shape.r - 1) // 2, "odd")


def neg_q_map(z: int, shape: CodeShape) -> int:
    return (-shape.q * z) % shape.rn


def neg_q_set(Z: DefiningSet) -> tuple[int, ...]:
    """``{-q z mod rn : z in Z}``, sorted."""
    return tuple(sorted(neg_q_map(z, Z.shape) for z in Z.elements))


def dual_containing(Z: DefiningSet) -> bool:
    """True iff ``Z`` and ``-qZ`` are disjoint."""
    return not set(Z.elements) & set(neg_q_set(Z))


def dual_defining_set(Z: DefiningSet) -> DefiningSet:
    """Defining set of the Hermitian dual: ``{z in Omega : -qz not in Z}``."""
    inside = set(Z.elements)
    elems = tuple(z for z in omega_set(Z.shape) if neg_q_map(z, Z.shape) not in inside)
    return DefiningSet(Z.shape, elems, "custom")


def root_indices(Z: DefiningSet) -> tuple[int, ...]:
    """The positions ``i`` with ``z = 1 + i*r``, reduced mod n."""
    r, n = Z.shape.r, Z.shape.n
    return tuple(sorted(((z - 1) // r) % n for z in Z.elements))


def longest_cyclic_run(indices, n: int) -> int:
    """Length of the longest run of consecutive integers mod ``n`` in ``indices``."""
    s = set(indices)
    if not s:
        return 0
    if len(s) == n:
        return n
    best = 0
    for i in s:
        if (i - 1) % n in s:
            continue
        length = 1
        while (i + length) % n in s:
            length += 1
        best = max(best, length)
    return best


def bch_bound_of(Z: DefiningSet) -> int:
    """``1 +`` the longest cyclic run among the root positions of ``Z``."""
    return 1 + longest_cyclic_run(root_indices(Z), Z.shape.n)


def past_range_probe(shape: CodeShape, family: str) -> bool:
    """Dual containment of the family formula extended one step past its admissible range.

    Nothing is guaranteed there; the result is only reported.
    """
    if family == "even":
        hi, offset = max_delta_even(shape), (shape.r - 2) // 2
    else:
        hi, offset = max_delta_odd(shape), (shape.r - 1) // 2
    return dual_containing(_family_set(shape, hi + 1, offset, family))
