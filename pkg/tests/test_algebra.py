"""Context plumbing: flags, element operators, classification, products."""

import pytest
from hypothesis import given, strategies as st

from ringkit import (
    ContextMismatch,
    Element,
    ModRing,
    NotPrimeCharacteristic,
    ProductRing,
    QQ,
    ZZ,
    characteristic,
    classify,
    enumerate_elements,
    frobenius,
    idempotents_of,
    int_scale,
    nilpotents_of,
    ring_pow,
    units_of,
    zero_divisors_of,
)
from ringkit.errors import InfiniteRing, NotInvertible


def test_flag_chain_is_monotone():
    for ctx in (ZZ, QQ, ModRing(6), ModRing(7), ModRing(1)):
        assert not ctx.is_field or ctx.is_euclidean
        assert not ctx.is_euclidean or ctx.is_gcd_domain
        assert not ctx.is_gcd_domain or ctx.is_domain
        assert not ctx.is_domain or ctx.is_commutative


def test_context_identity_and_naming():
    assert ModRing(7) == ModRing(7)
    assert ModRing(7) != ModRing(11)
    assert hash(ModRing(12)) == hash(ModRing(12))
    assert ModRing(7).name() == "Fp:7"
    assert ModRing(12).name() == "Zn:12"
    assert ZZ.name() == "Z" and QQ.name() == "Q"


def test_element_operator_surface():
    e = ModRing(10).element
    assert e(7) + e(8) == e(5)
    assert e(7) - 9 == e(8)
    assert 3 - e(7) == e(6)
    assert e(7) * e(3) == e(1)
    assert -e(3) == e(7)
    assert e(3) ** 4 == e(1)
    assert bool(e(1)) and not bool(e(0))
    assert e(7) != e(8)
    assert len({e(2), e(2), e(3)}) == 2


def test_mixed_context_arithmetic_is_refused():
    with pytest.raises(ContextMismatch):
        ModRing(5).element(1) + ModRing(7).element(1)
    with pytest.raises(ContextMismatch):
        ZZ.element(1) * QQ.element(1)


def test_int_coercion_goes_through_from_int():
    z7 = ModRing(7)
    assert z7.element(3) + 11 == z7.element(0)
    assert 2 * z7.element(5) == z7.element(3)


def test_inverse_and_unit_predicates():
    z9 = ModRing(9)
    assert z9.element(2).inverse() == z9.element(5)
    assert z9.is_unit(z9.element(4).val)
    assert not z9.is_unit(z9.element(6).val)
    with pytest.raises(NotInvertible):
        z9.element(3).inverse()


@given(st.integers(-50, 50), st.integers(0, 6))
def test_ring_pow_matches_repeated_product(n, k):
    x = ZZ.element(n)
    acc = ZZ.element(1)
    for _ in range(k):
        acc = acc * x
    assert ring_pow(x, k) == acc


def test_ring_pow_negative_needs_a_unit():
    f7 = ModRing(7)
    assert ring_pow(f7.element(3), -1) == f7.element(5)
    assert ring_pow(f7.element(3), -2) == f7.element(4)
    with pytest.raises(NotInvertible):
        ring_pow(ZZ.element(2), -1)


@given(st.integers(-20, 20), st.integers(-10, 10))
def test_int_scale_is_repeated_addition(n, k):
    x = ZZ.element(n)
    assert int_scale(k, x) == ZZ.element(k * n)


def test_characteristic_by_kind():
    assert characteristic(ZZ) == 0
    assert characteristic(QQ) == 0
    assert characteristic(ModRing(12)) == 12
    assert characteristic(ModRing(1)) == 1
    assert characteristic(ProductRing([ModRing(4), ModRing(6)])) == 12
    assert characteristic(ProductRing([ZZ, ModRing(6)])) == 0


def test_frobenius_needs_prime_characteristic():
    f5 = ModRing(5)
    assert frobenius(f5.element(3)) == f5.element(3) ** 5
    with pytest.raises(NotPrimeCharacteristic):
        frobenius(ModRing(6).element(2))
    with pytest.raises(NotPrimeCharacteristic):
        frobenius(ZZ.element(2))


@given(st.integers(0, 6), st.integers(0, 6))
def test_frobenius_is_additive_in_char_7(a, b):
    f7 = ModRing(7)
    x, y = f7.element(a), f7.element(b)
    assert frobenius(x + y) == frobenius(x) + frobenius(y)


def test_enumeration():
    assert [e.val for e in enumerate_elements(ModRing(4))] == [0, 1, 2, 3]
    assert [e.val for e in enumerate_elements(ModRing(1))] == [0]
    with pytest.raises(InfiniteRing):
        enumerate_elements(ZZ)


def test_classification_of_z8():
    z8 = ModRing(8)
    c = classify(z8)
    assert [e.val for e in c.units] == [1, 3, 5, 7]
    assert [e.val for e in c.zero_divisors] == [2, 4, 6]
    assert [e.val for e in c.nilpotents] == [0, 2, 4, 6]
    assert [e.val for e in c.idempotents] == [0, 1]


def test_classification_of_z6():
    z6 = ModRing(6)
    assert [e.val for e in zero_divisors_of(z6)] == [2, 3, 4]
    assert [e.val for e in units_of(z6)] == [1, 5]
    assert [e.val for e in nilpotents_of(z6)] == [0]
    assert [e.val for e in idempotents_of(z6)] == [0, 1, 3, 4]


def test_units_and_zero_divisors_partition_finite_commutative_rings():
    for n in (4, 6, 9, 12, 15):
        ctx = ModRing(n)
        units = {e.val for e in units_of(ctx)}
        zd = {e.val for e in zero_divisors_of(ctx)}
        assert units & zd == set()
        assert units | zd | {0} == set(range(n))


def test_trivial_ring_classification():
    c = classify(ModRing(1))
    assert c.units == () and c.zero_divisors == ()
    assert [e.val for e in c.idempotents] == [0]


def test_product_ring_componentwise():
    P = ProductRing([ModRing(2), ModRing(3)])
    a = P.element((1, 2))
    b = P.element((1, 1))
    assert (a + b).val == (0, 0)
    assert (a * b).val == (1, 2)
    assert P.cardinality() == 6
    assert not P.is_domain
    assert P.parse_element("(1,2)") == a
    assert repr(a) == "(1,2)"


def test_product_ring_units_are_componentwise_units():
    P = ProductRing([ModRing(4), ModRing(3)])
    assert {e.val for e in units_of(P)} == {
        (a, b) for a in (1, 3) for b in (1, 2)}


def test_element_repr_uses_context_show():
    assert repr(ZZ.element(-5)) == "-5"
    assert repr(ModRing(7).element(3)) == "3"
