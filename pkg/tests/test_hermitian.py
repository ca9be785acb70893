import numpy as np
import pytest

from conftest import odd_prime_powers
from constaqmds.code import build_code, is_codeword
from constaqmds.defsets import (
    CodeShape,
    DefiningSet,
    defining_set_even,
    divisors,
    neg_q_map,
    omega_set,
)
from constaqmds.errors import LengthMismatch
from constaqmds.field import conj_q, field_for_q
from constaqmds.hermitian import (
    contains_dual,
    dual_code,
    generator_matrix,
    gram_check,
    hermitian_dual_basis,
    hermitian_inner,
)
from constaqmds.linalg import nullspace, rank
from constaqmds.oracle import three_way
from constaqmds.quantum import enumerate_codes, family_for

F5 = field_for_q(5)


def test_inner_product_examples():
    F = F5
    w = F.omega
    assert hermitian_inner(F, [1, 0], [0, 1]) == F.zero
    assert hermitian_inner(F, [w], [1]) == w
    assert hermitian_inner(F, [1], [w]) == w ** F.q
    with pytest.raises(LengthMismatch):
        hermitian_inner(F, [1, 2], [1])


def test_sesquilinearity_and_conjugate_symmetry():
    F = F5
    rng = np.random.default_rng(0)
    for _ in range(200):
        x = rng.integers(0, F.order, 7)
        y = rng.integers(0, F.order, 7)
        c = F(int(rng.integers(0, F.order)))
        xy = hermitian_inner(F, x, y)
        assert hermitian_inner(F, F.mul_v(x, c.index), y) == c * xy
        assert hermitian_inner(F, x, F.mul_v(y, c.index)) == conj_q(c) * xy
        assert hermitian_inner(F, y, x) == conj_q(xy)


def test_dual_code_examples():
    shape = CodeShape(5, 2)
    full = build_code(F5, DefiningSet.custom(shape, ()))
    d = dual_code(full)
    assert d.Z.elements == omega_set(shape) and d.k == 0
    code = build_code(F5, defining_set_even(shape, 4))
    dual = dual_code(code)
    assert dual.Z.elements == (1, 3, 5, 7, 11, 15, 17, 21) and dual.k == 4
    assert dual_code(dual).Z.elements == code.Z.elements


def test_contains_dual_examples():
    shape = CodeShape(5, 2)
    assert contains_dual(build_code(F5, DefiningSet.custom(shape, ())))
    assert gram_check(build_code(F5, DefiningSet.custom(shape, ())))
    z = 1
    bad = DefiningSet.custom(shape, (z, neg_q_map(z, shape)))
    code = build_code(F5, bad)
    assert not contains_dual(code) and not gram_check(code)


def test_dual_basis_is_orthogonal_to_generator_rows():
    for q, r, d in [(5, 2, 5), (7, 4, 5), (9, 5, 5), (13, 7, 6)]:
        code, _ = family_for(q, r, d)
        F = code.spec
        X = hermitian_dual_basis(code)
        G = generator_matrix(code)
        assert X.shape == (code.n - code.k, code.n)
        for x in X:
            for y in G:
                assert hermitian_inner(F, x, y) == F.zero
            assert is_codeword(code, x)


def test_forward_substitution_matches_generic_nullspace():
    # basis of {x : <x, y> = 0 for all rows y} equals the kernel of conj(G)
    for q, r, d in [(5, 2, 4), (7, 4, 3), (9, 5, 4)]:
        code, _ = family_for(q, r, d)
        F = code.spec
        G = generator_matrix(code)
        K = nullspace(F, F.conj_v(G), code.n)
        X = hermitian_dual_basis(code)
        assert K.shape == X.shape
        assert rank(F, np.vstack([K, X])) == K.shape[0]


@pytest.mark.parametrize("q", odd_prime_powers(29))
def test_three_way_on_every_family_instance(q):
    for rec in enumerate_codes(q):
        code, _ = family_for(q, rec.r, rec.d)
        assert three_way(code)


def test_three_way_random_custom_sets_both_truth_values():
    rng = np.random.default_rng(5)
    for q in (5, 7):
        for r in divisors(q + 1):
            shape = CodeShape(q, r)
            omega = np.array(omega_set(shape))
            F = field_for_q(q)
            seen = set()
            for _ in range(200):
                size = int(rng.integers(0, shape.n + 1))
                Z = DefiningSet.custom(shape, rng.choice(omega, size, replace=False))
                seen.add(three_way(build_code(F, Z)))
            assert seen == {True, False}
