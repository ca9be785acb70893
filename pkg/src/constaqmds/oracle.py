"""Independent certificates for the constructed codes.

The minimum distance of an ``[n, n - delta]`` code equals ``delta + 1`` exactly
when every ``delta`` columns of a rank-``delta`` parity-check matrix are
linearly independent (Singleton caps it from above).  :func:`mds_check`
decides this by exact elimination over all column subsets when affordable and
by seeded sampling otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .code import ConstacyclicCode, ParityCheckMatrix, build_code, parity_check
from .defsets import CodeShape, DefiningSet, divisors, dual_containing, omega_set
from .errors import EquivalenceViolation
from .field import field_for_q
from .hermitian import contains_dual, gram_check
from .linalg import batch_singular
from .quantum import QuantumCodeParams, check_q, enumerate_codes, family_for

PROVEN_MDS = "ProvenMDS"
PROVEN_NOT_MDS = "ProvenNotMDS"
SAMPLED = "Sampled"

DEFAULT_BUDGET = 10**6
BATCH = 1 << 16


@dataclass
class MdsResult:
    result: str
    method: str
    subsets_checked: int
    witness: tuple[int, ...] | None = None
    seed: int | None = None
    instance: str = ""

    @property
    def proven(self) -> bool:
        return self.result == PROVEN_MDS

    @property
    def tag(self) -> str:
        """Distance-proof tag stored on parameter records."""
        if self.result == PROVEN_MDS:
            return "minor-exhaustive"
        if self.result == SAMPLED:
            return f"minor-sampled({self.subsets_checked}, {self.seed})"
        return "none"

    def to_dict(self) -> dict:
        out = {"instance": self.instance, "method": self.method,
               "subsets_checked": self.subsets_checked, "result": self.result}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _lex_batches(n: int, k: int, size: int):
    it = itertools.combinations(range(n), k)
    while True:
        chunk = np.fromiter(itertools.chain.from_iterable(itertools.islice(it, size)), dtype=np.int64)
        if chunk.size == 0:
            return
        yield chunk.reshape(-1, k)


def _sample_subsets(n: int, k: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    out = np.empty((count, k), dtype=np.int64)
    for start in range(0, count, BATCH):
        stop = min(count, start + BATCH)
        keys = rng.random((stop - start, n))
        out[start:stop] = np.sort(np.argpartition(keys, k - 1, axis=1)[:, :k], axis=1)
    return out


def _first_singular(spec, H: np.ndarray, subsets: np.ndarray):
    minors = H[:, subsets].transpose(1, 0, 2)
    bad = np.flatnonzero(batch_singular(spec, minors))
    return tuple(int(c) for c in subsets[bad[0]]) if bad.size else None


def mds_check(code, budget: int = DEFAULT_BUDGET, seed: int = 0) -> MdsResult:
    """Certify that every ``rows``-subset of parity-check columns is independent.

    ``code`` is a :class:`ConstacyclicCode` or a bare :class:`ParityCheckMatrix`.
    Subsets are visited in lexicographic order when ``C(n, rows) <= budget``, so
    a failure witness is the lexicographically smallest singular subset.
    """
    if isinstance(code, ConstacyclicCode):
        H = parity_check(code)
        instance = f"[{code.n},{code.k}] q={code.shape.q} r={code.shape.r} delta={len(code.Z)}"
    else:
        H = code
        instance = f"matrix {H.rows.shape[0]}x{H.rows.shape[1]}"
    spec, rows = H.spec, H.rows
    k, n = rows.shape
    if k == 0:
        return MdsResult(PROVEN_MDS, "exhaustive", 0, instance=instance)
    total = math.comb(n, k)
    if total <= budget:
        checked = 0
        for subsets in _lex_batches(n, k, BATCH):
            checked += len(subsets)
            bad = _first_singular(spec, rows, subsets)
            if bad is not None:
                return MdsResult(PROVEN_NOT_MDS, "exhaustive", checked, bad, instance=instance)
        return MdsResult(PROVEN_MDS, "exhaustive", checked, instance=instance)
    subsets = _sample_subsets(n, k, budget, seed)
    for start in range(0, budget, BATCH):
        bad = _first_singular(spec, rows, subsets[start : start + BATCH])
        if bad is not None:
            return MdsResult(PROVEN_NOT_MDS, "sampled", min(budget, start + BATCH), bad, seed, instance)
    return MdsResult(SAMPLED, "sampled", budget, seed=seed, instance=instance)


@dataclass
class CrosscheckReport:
    shape: CodeShape
    trials: int
    agreements: int = 0
    true_cases: int = 0
    false_cases: int = 0
    sizes: list[int] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {**self.shape.to_dict(), "trials": self.trials, "agreements": self.agreements,
                "true_cases": self.true_cases, "false_cases": self.false_cases}


def three_way(code: ConstacyclicCode) -> bool:
    """Dual containment by defining sets, by divisibility and by the Gram path.

    Raises EquivalenceViolation if the three disagree.
    """
    a = dual_containing(code.Z)
    b = contains_dual(code)
    c = gram_check(code)
    if not a == b == c:
        raise EquivalenceViolation(code.Z.elements, f"(defsets={a}, divisibility={b}, gram={c})")
    return a


def containment_crosscheck(shape: CodeShape, trials: int, seed: int, include_extremes: bool = True) -> CrosscheckReport:
    """Random defining sets (size uniform in ``[0, n]``) through all three containment tests."""
    if trials < 1:
        raise ValueError("trials must be positive")
    spec = field_for_q(shape.q)
    rng = np.random.default_rng(seed)
    omega = np.asarray(omega_set(shape), dtype=np.int64)
    report = CrosscheckReport(shape, trials)
    for t in range(trials):
        if include_extremes and t == 0:
            elems = ()
        elif include_extremes and t == 1:
            elems = tuple(omega)
        else:
            size = int(rng.integers(0, shape.n + 1))
            elems = tuple(rng.choice(omega, size=size, replace=False))
        code = build_code(spec, DefiningSet.custom(shape, elems))
        verdict = three_way(code)
        report.agreements += 1
        report.sizes.append(len(elems))
        if verdict:
            report.true_cases += 1
        else:
            report.false_cases += 1
    return report


def crosscheck_shapes(q: int) -> list[CodeShape]:
    """Every shape with ``r | q+1`` (the containment criterion holds for all of them)."""
    return [CodeShape(q, r) for r in divisors(q + 1)]


def verify_family(q: int, family: str, budget: int = DEFAULT_BUDGET,
                  seed: int = 0) -> list[tuple[QuantumCodeParams, MdsResult]]:
    """Build every instance of ``family`` for ``q`` and attach a distance certificate."""
    check_q(q)
    out = []
    for rec in enumerate_codes(q, family):
        code, params = family_for(q, rec.r, rec.d)
        three_way(code)
        res = mds_check(code, budget, seed)
        out.append((params.with_proof(res.tag), res))
    return out
