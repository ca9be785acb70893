"""Quantum code parameters from Hermitian dual-containing constacyclic codes.

Two families of length ``n = lambda(q-1)`` with ``q + 1 = lambda*r``:

* even ``r != q+1``: ``[[n, n-2d+2, d]]_q`` for ``2 <= d <= (q+1)/2 + lambda - 1``
* odd ``r >= 3``:   ``[[n, n-2d+2, d]]_q`` for ``2 <= d <= (q+1)/2 + lambda/2 - 1``
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .code import ConstacyclicCode, bch_bound, build_code
from .defsets import (
    CodeShape,
    DefiningSet,
    bch_bound_of,
    defining_set_even,
    defining_set_odd,
    divisors,
    dual_containing,
    max_delta_even,
    max_delta_odd,
)
from .errors import DOutOfRange, EvenCharacteristic, EvenR, NotDualContaining, OddR, ROne, RTooLarge
from .field import field_for_q, prime_power
from .hermitian import contains_dual

NEW = "new"
KNOWN = "previously known"


@dataclass(frozen=True)
class Verification:
    dual_containing: bool
    bch: int
    distance_proof: str = "none"


@dataclass(frozen=True)
class QuantumCodeParams:
    q: int
    n: int
    k: int
    d: int
    family: str
    lam: int
    r: int
    delta: int
    verified: Verification
    defining_set: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def mds(self) -> bool:
        return self.k == self.n - 2 * self.d + 2

    @property
    def novelty(self) -> str:
        return novelty(self.family, self.q, self.r, self.d)

    @property
    def label(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "family": self.family,
            "lambda": self.lam,
            "r": self.r,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "delta": self.delta,
            "defining_set": list(self.defining_set),
            "checks": {
                "dual_containing": self.verified.dual_containing,
                "bch_bound": self.verified.bch,
                "distance_proof": self.verified.distance_proof,
                "mds": self.mds,
            },
            "range": self.novelty,
        }

    def with_proof(self, tag: str) -> "QuantumCodeParams":
        return replace(self, verified=replace(self.verified, distance_proof=tag))


def novelty(family: str, q: int, r: int, d: int) -> str:
    """Whether ``d`` lies in the range the construction adds over earlier families.

    Even family: ``r = 2`` and ``d <= (q+1)/2`` were already known.
    Odd family: new from ``d >= (q+1)/2``.
    """
    half = (q + 1) // 2
    if family == "even":
        return NEW if r != 2 and d > half else KNOWN
    if family == "odd":
        return NEW if d >= half else KNOWN
    return KNOWN


def check_q(q: int) -> None:
    prime_power(q)
    if q % 2 == 0:
        raise EvenCharacteristic(f"q={q} must be an odd prime power")


def even_divisors(q: int) -> list[int]:
    return [r for r in divisors(q + 1) if r % 2 == 0 and r != q + 1]


def odd_divisors(q: int) -> list[int]:
    return [r for r in divisors(q + 1) if r % 2 == 1 and r >= 3]


def max_d(family: str, shape: CodeShape) -> int:
    hi = max_delta_even(shape) if family == "even" else max_delta_odd(shape)
    return hi + 1


def quantum_from_classical(code: ConstacyclicCode, proven_d: int) -> QuantumCodeParams:
    """``[[n, 2k-n, proven_d]]_q`` from a Hermitian dual-containing ``[n, k]`` code."""
    if not contains_dual(code):
        raise NotDualContaining("the code does not contain its Hermitian dual")
    n, k = code.n, code.k
    if not 1 <= proven_d <= n - k + 1:
        raise DOutOfRange(f"d={proven_d} exceeds the Singleton bound n-k+1={n - k + 1}")
    Z = code.Z
    return QuantumCodeParams(
        q=code.shape.q, n=n, k=2 * k - n, d=proven_d, family=Z.family,
        lam=code.shape.lam, r=code.shape.r, delta=len(Z),
        verified=Verification(True, bch_bound(code)),
        defining_set=Z.elements,
    )


def _family_defset(family: str, q: int, r: int, d: int) -> DefiningSet:
    check_q(q)
    shape = CodeShape(q, r)
    if family == "even":
        if r % 2:
            raise OddR(f"r={r} is odd")
        if r == q + 1:
            raise RTooLarge(f"r = q+1 = {r} is excluded for the even family")
        build = defining_set_even
    else:
        if r % 2 == 0:
            raise EvenR(f"r={r} is even")
        if r == 1:
            raise ROne("r = 1 is excluded for the odd family")
        build = defining_set_odd
    hi = max_d(family, shape)
    if not 2 <= d <= hi:
        raise DOutOfRange(f"d={d} outside [2, {hi}] for q={q}, r={r}")
    return build(shape, d - 1)


def _family(family, q, r, d):
    Z = _family_defset(family, q, r, d)
    code = build_code(field_for_q(q), Z)
    bch = bch_bound(code)
    params = quantum_from_classical(code, min(bch, code.n - code.k + 1))
    return code, params


def family_even(q: int, r: int, d: int) -> tuple[ConstacyclicCode, QuantumCodeParams]:
    return _family("even", q, r, d)


def family_odd(q: int, r: int, d: int) -> tuple[ConstacyclicCode, QuantumCodeParams]:
    return _family("odd", q, r, d)


def family_for(q: int, r: int, d: int) -> tuple[ConstacyclicCode, QuantumCodeParams]:
    """Dispatch on the parity of ``r``."""
    return family_even(q, r, d) if r % 2 == 0 else family_odd(q, r, d)


def params_record(family: str, shape: CodeShape, delta: int) -> QuantumCodeParams:
    """Parameter record from the defining set alone (no field arithmetic)."""
    Z = defining_set_even(shape, delta) if family == "even" else defining_set_odd(shape, delta)
    n = shape.n
    return QuantumCodeParams(
        q=shape.q, n=n, k=n - 2 * delta, d=delta + 1, family=family,
        lam=shape.lam, r=shape.r, delta=delta,
        verified=Verification(dual_containing(Z), bch_bound_of(Z)),
        defining_set=Z.elements,
    )


def enumerate_codes(q: int, family: str = "both", r: int | None = None,
                    new_only: bool = False) -> list[QuantumCodeParams]:
    """Every parameter set of both families for ``q``, sorted by ``(n, d)``."""
    check_q(q)
    families = ("even", "odd") if family == "both" else (family,)
    out = {}
    for fam in families:
        rs = even_divisors(q) if fam == "even" else odd_divisors(q)
        for rr in rs:
            if r is not None and rr != r:
                continue
            shape = CodeShape(q, rr)
            for d in range(2, max_d(fam, shape) + 1):
                rec = params_record(fam, shape, d - 1)
                if new_only and rec.novelty != NEW:
                    continue
                out.setdefault((rec.n, rec.k, rec.d), rec)
    return sorted(out.values(), key=lambda p: (p.n, p.d))

