import random

import pytest

from refq.cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, rational, root_of_unity_order
from refq.errors import InputError


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_zeta4_squared_is_minus_one():
    i = Cyclotomic.zeta(4)
    assert i * i == Cyclotomic.from_rational(4, -1)


def test_phi3_relation():
    z = Cyclotomic.zeta(3)
    total = Cyclotomic.one(3) + z + z * z
    assert total.is_zero()


def test_additive_identity():
    a = Cyclotomic.zeta(12, 5) + Cyclotomic.from_rational(12, rational(3) / 7)
    assert a + Cyclotomic.zero(12) == a


def test_inverse_of_zeta():
    for n in (3, 4, 5, 8, 12):
        z = Cyclotomic.zeta(n)
        assert z.inverse() == Cyclotomic.zeta(n, n - 1)
        assert z * z.inverse() == Cyclotomic.one(n)


def test_inverse_of_two():
    a = Cyclotomic.from_rational(4, 2)
    assert a.inverse() == Cyclotomic.from_rational(4, rational(1) / 2)


def test_inverse_one_plus_i():
    # (1 + i)(1 - i) = 2, so the inverse is (1 - i)/2; verified by multiplication.
    one = Cyclotomic.one(4)
    i = Cyclotomic.zeta(4)
    a = one + i
    expected = (one - i) * rational(1) / 2
    assert a * expected == one
    assert a.inverse() == expected


def test_division_by_zero():
    with pytest.raises(InputError):
        Cyclotomic.zero(4).inverse()


def test_conductor_mismatch_rejected():
    with pytest.raises(InputError):
        Cyclotomic.one(3) + Cyclotomic.one(4)


def test_root_of_unity_order():
    assert root_of_unity_order(Cyclotomic.one(4)) == 1
    assert root_of_unity_order(Cyclotomic.from_rational(4, -1)) == 2
    assert root_of_unity_order(Cyclotomic.zeta(12, 3)) == 4
    assert root_of_unity_order(Cyclotomic.zeta(12)) == 12
    assert root_of_unity_order(Cyclotomic.from_rational(12, 2)) is None
    half = Cyclotomic.from_rational(4, rational(1) / 2)
    assert root_of_unity_order(half) is None


def test_root_of_unity_order_minimality():
    for n in (3, 4, 8, 12):
        for k in range(n):
            a = Cyclotomic.zeta(n, k)
            m = root_of_unity_order(a)
            assert m is not None
            assert a ** m == Cyclotomic.one(n)
            for j in range(1, m):
                assert a ** j != Cyclotomic.one(n)


def _random_element(rng, n):
    phi = euler_phi(n)
    coeffs = Cyclotomic.zero(n)
    for e in range(phi):
        num = rng.randint(-6, 6)
        den = rng.randint(1, 5)
        coeffs = coeffs + Cyclotomic.zeta(n, e) * (rational(num) / den)
    return coeffs


def test_field_axioms_randomized():
    rng = random.Random(20240517)
    for n in (1, 3, 4, 8, 12):
        one = Cyclotomic.one(n)
        for _ in range(25):
            a = _random_element(rng, n)
            b = _random_element(rng, n)
            c = _random_element(rng, n)
            assert (a * b) * c == a * (b * c)
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            if not a.is_zero():
                assert a * a.inverse() == one


def test_terms_round_trip():
    rng = random.Random(99)
    for n in (1, 3, 4, 8, 12):
        for _ in range(20):
            a = _random_element(rng, n)
            assert Cyclotomic.from_terms(n, a.to_terms()) == a


def test_from_terms_reduces_high_exponents():
    # z4^2 encoded with exponent 2 must reduce to -1.
    a = Cyclotomic.from_terms(4, [[1, 1, 2]])
    assert a == Cyclotomic.from_rational(4, -1)
    b = Cyclotomic.from_terms(3, [[1, 1, 0], [1, 1, 1], [1, 1, 2]])
    assert b.is_zero()


def test_str_forms():
    assert str(Cyclotomic.zero(4)) == "0"
    assert str(Cyclotomic.one(4)) == "1"
    assert str(Cyclotomic.zeta(4)) == "z4"
    assert str(-Cyclotomic.zeta(4)) == "-z4"
    val = Cyclotomic.from_rational(4, rational(1) / 2) - Cyclotomic.zeta(4) * (rational(3) / 2)
    assert str(val) == "1/2 - 3/2*z4"
