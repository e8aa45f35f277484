"""Exact coefficient rings: valuations, reductions, field and ring laws."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wenzl.rings import (
    FpElement,
    LaurentPoly,
    NonInvertible,
    NotPIntegral,
    PrimeFieldRing,
    QQ,
    p_valuation,
    reduce_mod_p,
    ring_by_name,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=40
).filter(lambda x: x != 0)


@pytest.mark.parametrize(
    "x,p,v",
    [(Fraction(3, 4), 2, -2), (Fraction(7, 9), 3, -2), (Fraction(6), 3, 1)],
)
def test_p_valuation_examples(x, p, v):
    assert p_valuation(x, p) == v


def test_p_valuation_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        p_valuation(Fraction(0), 2)


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7]))
def test_p_valuation_additive(x, y, p):
    assert p_valuation(x * y, p) == p_valuation(x, p) + p_valuation(y, p)


@pytest.mark.parametrize(
    "x,p,res",
    [(Fraction(1, 2), 3, 2), (Fraction(7, 9), 2, 1)],
)
def test_reduce_examples(x, p, res):
    assert reduce_mod_p(x, p) == FpElement(p, res)


def test_reduce_rejects_non_integral():
    with pytest.raises(NotPIntegral):
        reduce_mod_p(Fraction(-5, 8), 2)


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7]))
def test_reduce_is_ring_hom(x, y, p):
    if x.denominator % p == 0 or y.denominator % p == 0:
        return
    rx, ry = reduce_mod_p(x, p), reduce_mod_p(y, p)
    if (x + y).denominator % p == 0:
        pytest.fail("sum of p-integral rationals must be p-integral")
    assert reduce_mod_p(x + y, p) == rx + ry
    assert reduce_mod_p(x * y, p) == rx * ry


def test_fp_field_axioms():
    p = 5
    elements = [FpElement(p, r) for r in range(p)]
    one = FpElement(p, 1)
    for a in elements:
        if a:
            assert a * a.inverse() == one
    assert FpElement(5, 3) * FpElement(5, 2) == one
    with pytest.raises(NonInvertible):
        FpElement(p, 0).inverse()


def test_fp_rejects_mixed_primes():
    with pytest.raises(ValueError):
        FpElement(3, 1) + FpElement(5, 1)


def test_rational_arithmetic_normalized():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    x = QQ.parse("6/4")
    assert QQ.format(x) == "3/2"
    assert QQ.format(QQ.from_int(-7)) == "-7"


def test_rational_ring_inverse():
    assert QQ.inv(QQ.fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(NonInvertible):
        QQ.inv(QQ.zero)


def test_laurent_examples():
    v = LaurentPoly.v_power(1)
    vinv = LaurentPoly.v_power(-1)
    sq = (v + vinv) * (v + vinv)
    assert sq == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert (v - v) == LaurentPoly.zero()
    assert not LaurentPoly.zero()


@given(
    st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=5),
    st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=5),
    st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=5),
)
def test_laurent_ring_laws(a, b, c):
    x, y, z = LaurentPoly(a), LaurentPoly(b), LaurentPoly(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x + LaurentPoly.zero() == x
    assert x * LaurentPoly.one() == x


def test_laurent_no_stored_zeros():
    x = LaurentPoly({2: 1, 0: 0, -1: 3})
    assert 0 not in x.coeffs


def test_prime_field_ring_adapter():
    F = PrimeFieldRing(7)
    assert F.name == "Fp:7"
    assert F.inv(3) == 5
    assert F.from_rational(Fraction(1, 2)) == 4
    with pytest.raises(NotPIntegral):
        F.from_rational(Fraction(1, 7))
    with pytest.raises(NonInvertible):
        F.inv(0)


def test_ring_by_name_roundtrip():
    assert ring_by_name("Q") is QQ
    assert ring_by_name("Fp:5") == PrimeFieldRing(5)
    with pytest.raises(ValueError):
        ring_by_name("Z")
