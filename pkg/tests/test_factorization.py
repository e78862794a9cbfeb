"""Factorization and irreducibility: integers, prime-field polynomials, certificates."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ringkit import GAUSSIAN, ModRing, QQ, ZZ, poly_ring
from ringkit.factor import (
    INCONCLUSIVE,
    content,
    eisenstein_check,
    eisenstein_translate_search,
    factor_integer,
    factor_poly_fp,
    irreducibility_pipeline,
    low_degree_test,
    monic_irreducibles,
    poly_is_irreducible_fp,
    primitive_associate,
    primitive_part,
    quad_irreducible_check,
    rational_roots,
    reduction_mod_p_check,
    squarefree_part,
    squarefree_part_int,
    verify_certificate,
)
from ringkit.errors import (
    ConstantPolynomial,
    DegreeDrops,
    DegreeOutOfRange,
    InvalidParameters,
    NotPrimitive,
    TooLarge,
    ZeroInput,
)

PZ = poly_ring(ZZ)
PQ = poly_ring(QQ)
P2 = poly_ring(ModRing(2))
P3 = poly_ring(ModRing(3))


# ------------------------------------------------------------ integers

def test_integer_factorization_fixtures():
    fac = factor_integer(-252)
    assert fac.unit == -1
    assert fac.factors == ((2, 2), (3, 2), (7, 1))
    assert str(fac) == "-1 * 2^2 * 3^2 * 7"
    assert fac.value().val == -252
    assert factor_integer(1).factors == ()
    assert str(factor_integer(1)) == "1"
    assert factor_integer(97).factors == ((97, 1),)


def test_integer_factorization_guards():
    with pytest.raises(ZeroInput):
        factor_integer(0)
    with pytest.raises(TooLarge):
        factor_integer(10**12 + 1)
    assert factor_integer(10**12).factors == ((2, 12), (5, 12))


@given(st.integers(-10**6, 10**6).filter(bool))
def test_integer_factorization_round_trips(n):
    fac = factor_integer(n)
    assert fac.value().val == n
    for p, e in fac.factors:
        assert e >= 1 and p >= 2


# ------------------------------------------- irreducible tables over F_p

def test_monic_irreducible_tables_over_f2():
    by_deg = {}
    for m in monic_irreducibles(2, 4):
        by_deg.setdefault(len(m.val) - 1, set()).add(m.val)
    assert by_deg[1] == {(0, 1), (1, 1)}
    assert by_deg[2] == {(1, 1, 1)}
    assert by_deg[3] == {(1, 1, 0, 1), (1, 0, 1, 1)}
    assert by_deg[4] == {(1, 1, 0, 0, 1), (1, 0, 0, 1, 1), (1, 1, 1, 1, 1)}


def test_monic_irreducible_tables_over_f3():
    table = monic_irreducibles(3, 3)
    quadratics = {m.val for m in table if len(m.val) == 3}
    assert quadratics == {(1, 0, 1), (2, 1, 1), (2, 2, 1)}
    assert sum(1 for m in table if len(m.val) == 2) == 3
    assert sum(1 for m in table if len(m.val) == 4) == 8


def test_monic_irreducible_guards():
    with pytest.raises(InvalidParameters):
        monic_irreducibles(4, 2)
    with pytest.raises(InvalidParameters):
        monic_irreducibles(3, 0)
    with pytest.raises(TooLarge):
        monic_irreducibles(1009, 2)


def test_membership_predicate_agrees_with_the_table():
    table = {m.val for m in monic_irreducibles(2, 4)}
    import itertools
    for deg in range(1, 5):
        for tail in itertools.product(range(2), repeat=deg):
            cand = P2.element(list(tail) + [1])
            assert poly_is_irreducible_fp(cand) == (cand.val in table)


@given(st.lists(st.integers(0, 2), min_size=2, max_size=6))
@settings(max_examples=60)
def test_prime_field_factorization_round_trips(coeffs):
    f = P3.element(coeffs)
    if P3.is_zero(f.val):
        return
    fac = factor_poly_fp(f)
    assert fac.value() == f
    for g, _ in fac.factors:
        assert poly_is_irreducible_fp(P3.element(list(g)))
        assert g[-1] == 1  # monic factors


def test_prime_field_factorization_fixture():
    fac = factor_poly_fp(P3.element([2, 0, 2]))
    assert fac.unit == (2,)
    assert fac.factors == (((1, 0, 1), 1),)
    assert str(fac) == "2 * (x^2+1)"


# --------------------------------------------------- content and primitivity

def test_content_and_primitive_part_fixture():
    f = PZ.element([-12, 0, 6])
    assert content(f) == 6
    assert primitive_part(f).val == (-2, 0, 1)
    assert primitive_associate(f).val == (-2, 0, 1)
    assert content(primitive_part(f)) == 1


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4),
       st.lists(st.integers(-9, 9), min_size=1, max_size=4))
@settings(max_examples=80)
def test_content_is_multiplicative(a, b):
    f, g = PZ.element(a), PZ.element(b)
    if PZ.is_zero(f.val) or PZ.is_zero(g.val):
        return
    assert content(f * g) == content(f) * content(g)


# ------------------------------------------------------------ rational roots

def test_rational_root_fixtures():
    assert rational_roots(PZ.element([0, -2, 3])) == [Fraction(0), Fraction(2, 3)]
    assert rational_roots(PZ.element([1, 0, 1])) == []
    assert rational_roots(PQ.element([Fraction(-1), Fraction(0), Fraction(1)])) == [Fraction(-1), Fraction(1)]


def test_low_degree_verdicts():
    v = low_degree_test(P3.element([1, 0, 1]))
    assert v.is_irreducible
    assert str(v) == "IRREDUCIBLE cert=low-degree-no-root"
    w = low_degree_test(PQ.element([Fraction(-1), Fraction(0), Fraction(1)]))
    assert w.is_reducible
    assert str(w) == "REDUCIBLE cert=rational-root root=-1"
    with pytest.raises(DegreeOutOfRange):
        low_degree_test(PQ.element([Fraction(1), 0, 0, 0, Fraction(1)]))


# ------------------------------------------------------------ eisenstein

def test_eisenstein_fixtures():
    v = eisenstein_check(PZ.element([-2, 0, 1]), 2)
    assert v.is_irreducible
    assert str(v) == "IRREDUCIBLE cert=eisenstein p=2 shift=0"
    for p in (2, 3, 5, 7):
        assert eisenstein_check(PZ.element([1, 1, 0, 0, 1]), p) is INCONCLUSIVE


def test_eisenstein_guards():
    with pytest.raises(NotPrimitive):
        eisenstein_check(PZ.element([2, 4, 2]), 2)
    with pytest.raises(ConstantPolynomial):
        eisenstein_check(PZ.element([5]), 2)
    with pytest.raises(InvalidParameters):
        eisenstein_check(PZ.element([-2, 0, 1]), 4)


def test_translate_search_keeps_an_already_witnessed_shift_at_zero():
    v = eisenstein_translate_search(PZ.element([-2, 0, 1]))
    assert str(v) == "IRREDUCIBLE cert=eisenstein p=2 shift=0"


def test_translate_search_finds_a_shift():
    v = eisenstein_translate_search(PZ.element([-9, 26, 16, 6, 1]))
    assert str(v) == "IRREDUCIBLE cert=eisenstein p=5 shift=1"
    assert verify_certificate(PZ.element([-9, 26, 16, 6, 1]), v)


# ------------------------------------------------------------ reduction mod p

def test_reduction_mod_p_fixtures():
    assert reduction_mod_p_check(PZ.element([1, 0, 1]), 3).is_irreducible
    assert reduction_mod_p_check(PZ.element([1, 0, 1]), 5) is INCONCLUSIVE
    with pytest.raises(DegreeDrops):
        reduction_mod_p_check(PZ.element([1, 0, 5]), 5)


# ------------------------------------------------------------ squarefree parts

def test_squarefree_parts_take_the_odd_multiplicity_factors():
    assert squarefree_part(180) == 5
    assert squarefree_part_int(180) == 5
    assert squarefree_part_int(-18) == 2  # sign is discarded: the part is positive
    assert squarefree_part(PZ.element([2, -3, 0, 1])).val == (2, 1)
    q = PZ.element([1, -2, 1, -1, 1])
    assert squarefree_part(q).val == q.val
    assert squarefree_part(P3.element([1, 2, 1])).val == (1,)  # even multiplicity drops out
    assert squarefree_part(P3.element([0, 1, 2, 1])).val == (0, 1)


def test_squarefree_part_of_zero_is_refused():
    with pytest.raises(ZeroInput):
        squarefree_part(PZ.element([]))


# ------------------------------------------------------- quadratic integers

def test_quadratic_integer_irreducibility_certificates():
    v = quad_irreducible_check(GAUSSIAN.element((2, 3)))
    assert str(v) == "IRREDUCIBLE cert=prime-norm n=13"
    w = quad_irreducible_check(GAUSSIAN.element((2, 0)))
    assert str(w) == "REDUCIBLE cert=trial-divisor divisor=1+i"
    u = quad_irreducible_check(GAUSSIAN.element((1, 1)))
    assert str(u) == "IRREDUCIBLE cert=prime-norm n=2"


# ------------------------------------------------------------ the pipeline

def test_pipeline_certifies_a_quartic_by_shifted_eisenstein():
    f = PQ.element([Fraction(-9), Fraction(26), Fraction(16), Fraction(6), Fraction(1)])
    v = irreducibility_pipeline(f)
    assert v.serialize() == "IRREDUCIBLE cert=eisenstein p=5 shift=1"
    assert verify_certificate(f, v)


def test_pipeline_uses_roots_in_low_degree_and_sieving_over_prime_fields():
    assert irreducibility_pipeline(PQ.element([Fraction(2), Fraction(1)])).is_irreducible
    v = irreducibility_pipeline(P3.element([1, 0, 1]))
    assert v.is_irreducible
    assert "exhaustive" in str(v)
    assert verify_certificate(P3.element([1, 0, 1]), v)


def test_certificates_fail_against_a_different_polynomial():
    v = eisenstein_check(PZ.element([-2, 0, 1]), 2)
    assert verify_certificate(PZ.element([-2, 0, 1]), v)
    assert not verify_certificate(PZ.element([-3, 0, 1]), v)
