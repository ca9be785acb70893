"""Quantum MDS codes from Hermitian dual-containing constacyclic codes over GF(q^2)."""

from .code import (
    ConstacyclicCode,
    ParityCheckMatrix,
    bch_bound,
    build_code,
    code_from_dict,
    constacyclic_shift,
    encode,
    is_codeword,
    parity_check,
)
from .defsets import (
    CodeShape,
    DefiningSet,
    cyclotomic_coset,
    defining_set_even,
    defining_set_odd,
    dual_containing,
    dual_defining_set,
    neg_q_set,
    omega_set,
)
from .field import FieldElement, FieldSpec, conj_q, discrete_log, field_build, field_for_q, pow_
from .hermitian import contains_dual, dual_code, gram_check, hermitian_inner
from .oracle import containment_crosscheck, mds_check, three_way, verify_family
from .poly import Polynomial, from_roots, p_add, p_divmod, p_eval, p_mul
from .quantum import (
    QuantumCodeParams,
    enumerate_codes,
    family_even,
    family_for,
    family_odd,
    quantum_from_classical,
)

__version__ = "0.1.0"
