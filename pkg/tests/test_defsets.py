import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import odd_prime_powers
from constaqmds.defsets import (
    CodeShape,
    DefiningSet,
    bch_bound_of,
    cyclotomic_coset,
    defining_set_even,
    defining_set_odd,
    divisors,
    dual_containing,
    dual_defining_set,
    longest_cyclic_run,
    max_delta_even,
    max_delta_odd,
    neg_q_map,
    neg_q_set,
    omega_set,
    past_range_probe,
)
from constaqmds.errors import (
    DeltaOutOfRange,
    ElementsOutsideOmega,
    EvenCharacteristic,
    EvenR,
    NotADivisor,
    OddR,
    ROne,
    RTooLarge,
)

Q100 = odd_prime_powers(100)


def all_family_sets(q):
    for r in divisors(q + 1):
        shape = CodeShape(q, r)
        if r % 2 == 0 and r != q + 1:
            for delta in range(1, max_delta_even(shape) + 1):
                yield defining_set_even(shape, delta)
        elif r % 2 == 1 and r >= 3:
            for delta in range(1, max_delta_odd(shape) + 1):
                yield defining_set_odd(shape, delta)


def test_code_shape_basics():
    s = CodeShape(23, 4)
    assert (s.lam, s.n, s.rn) == (6, 132, 528)
    assert s.rn == 23**2 - 1
    with pytest.raises(NotADivisor):
        CodeShape(23, 5)
    with pytest.raises(EvenCharacteristic):
        CodeShape(8, 3)


def test_cyclotomic_coset_examples():
    assert cyclotomic_coset(0, 24, 7) == (0,)
    assert cyclotomic_coset(1, 15, 4) == (1, 4)
    q = 7
    for j in range(q * q - 1):
        assert cyclotomic_coset(j, q * q - 1, q * q) == (j,)


def test_omega_set_q5_r2():
    shape = CodeShape(5, 2)
    assert omega_set(shape) == tuple(range(1, 24, 2))
    for q in (5, 9, 23):
        for r in divisors(q + 1):
            assert len(omega_set(CodeShape(q, r))) == CodeShape(q, r).n


def test_defining_set_even_examples():
    assert defining_set_even(CodeShape(5, 2), 4).elements == (1, 3, 5, 7)
    Z = defining_set_even(CodeShape(23, 4), 16)
    assert len(Z) == 16
    assert Z.elements == tuple(25 + 4 * j for j in range(16))
    with pytest.raises(RTooLarge):
        defining_set_even(CodeShape(5, 6), 1)
    with pytest.raises(OddR):
        defining_set_even(CodeShape(5, 3), 1)
    with pytest.raises(DeltaOutOfRange):
        defining_set_even(CodeShape(5, 2), 5)


def test_defining_set_odd_examples():
    assert defining_set_odd(CodeShape(5, 3), 2).elements == (7, 10)
    Z = defining_set_odd(CodeShape(17, 9), 8)
    assert Z.elements == tuple(73 + 9 * j for j in range(8))
    with pytest.raises(EvenR):
        defining_set_odd(CodeShape(5, 2), 1)
    with pytest.raises(ROne):
        defining_set_odd(CodeShape(5, 1), 1)
    with pytest.raises(DeltaOutOfRange):
        defining_set_odd(CodeShape(5, 3), 0)


def test_neg_q_set_examples():
    shape = CodeShape(5, 2)
    Z = DefiningSet.custom(shape, (1, 3, 5, 7))
    # independent arithmetic: -5*z mod 24
    assert neg_q_set(Z) == tuple(sorted((-5 * z) % 24 for z in (1, 3, 5, 7)))
    assert neg_q_set(Z) == (9, 13, 19, 23)
    assert neg_q_set(DefiningSet.custom(shape, neg_q_set(Z))) == Z.elements
    assert neg_q_set(DefiningSet.custom(shape, ())) == ()


def test_dual_containing_trivial_cases():
    shape = CodeShape(7, 4)
    assert dual_containing(DefiningSet.custom(shape, ()))
    assert not dual_containing(DefiningSet.custom(shape, omega_set(shape)))


def test_dual_defining_set_examples():
    shape = CodeShape(5, 2)
    Z = DefiningSet.custom(shape, (1, 3, 5, 7))
    D = dual_defining_set(Z)
    assert D.elements == (1, 3, 5, 7, 11, 15, 17, 21)
    assert set(Z.elements) <= set(D.elements)
    assert dual_defining_set(DefiningSet.custom(shape, ())).elements == omega_set(shape)


def test_elements_outside_omega():
    with pytest.raises(ElementsOutsideOmega):
        DefiningSet.custom(CodeShape(5, 2), (2,))


def test_serialization_roundtrip():
    Z = defining_set_odd(CodeShape(17, 9), 8)
    d = Z.to_dict()
    assert set(d) >= {"q", "r", "lambda", "n", "family", "delta", "elements"}
    assert DefiningSet.from_dict(d) == Z


@pytest.mark.parametrize("q", Q100)
def test_family_dual_containment_exhaustive(q):
    count = 0
    for Z in all_family_sets(q):
        assert dual_containing(Z), Z
        count += 1
    assert count > 0


@pytest.mark.parametrize("q", Q100)
def test_coset_singletons_for_constructed_elements(q):
    rn = q * q - 1
    seen = set()
    for Z in all_family_sets(q):
        seen.update(Z.elements)
    for z in seen:
        assert cyclotomic_coset(z, rn, q * q) == (z,)


@pytest.mark.parametrize("q", odd_prime_powers(50))
def test_all_cosets_singleton(q):
    rn = q * q - 1
    for j in range(rn):
        assert cyclotomic_coset(j, rn, q * q) == (j,)


@pytest.mark.parametrize("q", Q100)
def test_neg_q_maps_omega_onto_omega(q):
    for r in divisors(q + 1):
        shape = CodeShape(q, r)
        omega = omega_set(shape)
        image = sorted(neg_q_map(z, shape) for z in omega)
        assert image == list(omega)


def test_bch_bound_runs():
    shape = CodeShape(5, 2)
    assert bch_bound_of(DefiningSet.custom(shape, ())) == 1
    assert bch_bound_of(DefiningSet.custom(shape, (1, 5))) == 2
    assert bch_bound_of(defining_set_even(shape, 4)) == 5
    assert longest_cyclic_run([0, 11, 10], 12) == 3
    for q in (17, 23, 29):
        for Z in all_family_sets(q):
            assert bch_bound_of(Z) == Z.delta + 1


def test_past_range_probe_runs():
    # reported only: nothing is guaranteed one step past the range
    results = {}
    for q in (11, 17, 23, 29):
        for r in divisors(q + 1):
            if r % 2 == 0 and r != q + 1:
                results[(q, r)] = past_range_probe(CodeShape(q, r), "even")
            elif r % 2 == 1 and r >= 3:
                results[(q, r)] = past_range_probe(CodeShape(q, r), "odd")
    assert results and all(isinstance(v, bool) for v in results.values())


SHAPES = [CodeShape(q, r) for q in (5, 7, 9, 11, 13) for r in divisors(q + 1)]


@st.composite
def subsets(draw):
    shape = draw(st.sampled_from(SHAPES))
    omega = omega_set(shape)
    elems = draw(st.sets(st.sampled_from(omega), max_size=len(omega)))
    return DefiningSet.custom(shape, elems)


@settings(max_examples=400, deadline=None)
@given(subsets())
def test_dual_containing_iff_contained_in_dual(Z):
    D = dual_defining_set(Z)
    assert dual_containing(Z) == set(Z.elements).issubset(D.elements)
    assert len(D) == Z.shape.n - len(Z)


@settings(max_examples=400, deadline=None)
@given(subsets())
def test_biduality_and_involution(Z):
    assert dual_defining_set(dual_defining_set(Z)) == DefiningSet.custom(Z.shape, Z.elements)
    twice = neg_q_set(DefiningSet.custom(Z.shape, neg_q_set(Z)))
    assert twice == Z.elements


def test_both_truth_values_exercised():
    rng = np.random.default_rng(9)
    shape = CodeShape(9, 5)
    omega = np.array(omega_set(shape))
    verdicts = set()
    for _ in range(200):
        size = int(rng.integers(0, shape.n + 1))
        verdicts.add(dual_containing(DefiningSet.custom(shape, rng.choice(omega, size, replace=False))))
    assert verdicts == {True, False}
