"""Quotients by a principal ideal: residue arithmetic, units, and the divisor lattice."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ringkit import (
    GAUSSIAN,
    ModRing,
    QQ,
    ZZ,
    enumerate_elements,
    ideal_divisor_lattice,
    iso_check_crt,
    poly_ring,
    q_cardinality,
    q_inverse,
    q_is_unit,
    q_lift,
    q_reduce,
    quotient_ring,
)
from ringkit.errors import (
    FactorsMismatch,
    InvalidParameters,
    NotInvertible,
    TooLarge,
)

P2 = poly_ring(ModRing(2))
P3 = poly_ring(ModRing(3))
F4 = quotient_ring(P2, P2.element([1, 1, 1]))
F9 = quotient_ring(P3, P3.element([1, 0, 1]))


def test_integer_quotients_agree_with_modular_contexts():
    Q12 = quotient_ring(ZZ, ZZ.element(12))
    M12 = ModRing(12)
    assert Q12.name() == "Quot(Z,12)"
    for k in range(-13, 27):
        assert Q12.element(k).val == M12.element(k).val
    assert Q12.characteristic() == 12
    assert q_cardinality(Q12) == 12


def test_modulus_must_be_a_nonzero_non_unit():
    for m in (0, 1, -1):
        with pytest.raises(InvalidParameters):
            quotient_ring(ZZ, ZZ.element(m))


def test_four_element_field_multiplication_table():
    assert F4.is_field
    assert q_cardinality(F4) == 4
    assert sorted(F4.show(p) for p in F4.elements()) == ["0", "1", "x", "x+1"]
    x = F4.element([0, 1])
    assert F4.show((x * x).val) == "x+1"
    assert F4.show((x * x * x).val) == "1"
    assert x * x + x + F4.element([1]) == F4.element([])


def test_inverse_of_the_residue_class_of_x_mod_x_squared_plus_one():
    assert q_inverse(F9.element([0, 1])).val == (0, 2)
    assert F9.element([0, 1]) * F9.element([0, 2]) == F9.element([1])


def test_gaussian_quotient_by_one_plus_two_i_is_a_five_element_field():
    G = quotient_ring(GAUSSIAN, GAUSSIAN.element((1, 2)))
    assert q_cardinality(G) == 5
    assert G.is_field
    assert len(set(G.elements())) == 5
    for e in enumerate_elements(G):
        if not G.is_zero(e.val):
            assert q_is_unit(e)


def test_number_field_quotient_is_an_infinite_field():
    PQ = poly_ring(QQ)
    K = quotient_ring(PQ, PQ.element([-2, 0, 1]))
    assert K.is_field and not K.is_finite
    r = K.element([0, 1])
    assert (r * r).val == (Fraction(2),)
    assert q_inverse(r).val == (Fraction(0), Fraction(1, 2))


def test_representatives_are_canonical():
    big = P3.element([2, 2, 1, 1])
    assert q_reduce(F9, big).val == (1, 1)
    for p in F9.elements():
        assert F9.canon(p) == p
        assert len(p) < 2 or p[-1] != 0
    assert q_lift(F9.element([2, 2])).ctx is P3


def test_reducible_modulus_gives_zero_divisors_and_nilpotents():
    N = quotient_ring(P3, P3.element([0, 0, 1]))
    assert not N.is_field and not N.is_domain
    assert N.is_nilpotent((0, 1))
    assert q_cardinality(N) == 9
    with pytest.raises(NotInvertible):
        q_inverse(N.element([0, 1]))


def test_failed_inversion_reports_the_common_divisor():
    Q12 = quotient_ring(ZZ, ZZ.element(12))
    with pytest.raises(NotInvertible) as exc:
        q_inverse(Q12.element(8))
    assert exc.value.gcd.val == 4


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_quotient_arithmetic_is_well_defined_on_representatives(a, b, c, d):
    f = F9.element([a, b])
    g = F9.element([c, d])
    lifted = q_lift(f) * q_lift(g) + q_lift(f + g)
    assert q_reduce(F9, lifted) == f * g + f + g


def test_divisor_lattice_of_twelve():
    lat = ideal_divisor_lattice(12)
    assert [d for d, _, _ in lat] == [1, 2, 3, 4, 6, 12]
    assert [d for d, p, _ in lat if p] == [2, 3]
    assert [d for d, _, m in lat if m] == [2, 3]


def test_divisor_lattice_prime_modulus():
    # the zero ideal (generated by 7) is maximal exactly because Z_7 is a field
    lat = ideal_divisor_lattice(7)
    assert lat == [(1, False, False), (7, True, True)]


def test_crt_isomorphism_checks():
    assert iso_check_crt(30, [2, 3, 5]) is True
    assert iso_check_crt(4, [2, 2]) is False
    assert iso_check_crt(100, [4, 25]) is True


def test_crt_isomorphism_guards():
    with pytest.raises(FactorsMismatch):
        iso_check_crt(30, [2, 3, 7])
    with pytest.raises(FactorsMismatch):
        iso_check_crt(30, [])
    with pytest.raises(InvalidParameters):
        iso_check_crt(0, [1])
    with pytest.raises(TooLarge):
        iso_check_crt(100000, [32, 3125])


def test_cardinality_of_polynomial_quotients_is_a_prime_power():
    for p, deg, mod in [(2, 2, [1, 1, 1]), (3, 2, [1, 0, 1]), (5, 3, [2, 1, 0, 1])]:
        P = poly_ring(ModRing(p))
        Q = quotient_ring(P, P.element(mod))
        assert q_cardinality(Q) == p**deg
