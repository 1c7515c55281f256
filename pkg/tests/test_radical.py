import json
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp2branch.radical import RadicalScalar, as_radical, sqrt_int, sqrt_rational, squarefree_decompose

from conftest import radicals


def test_squarefree_decompose():
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(72) == (6, 2)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(30) == (1, 30)


def test_sqrt_int_examples():
    assert sqrt_int(12) == 2 * sqrt_int(3)
    assert sqrt_int(9) == 3
    assert sqrt_int(0) == 0
    assert sqrt_int(2) * sqrt_int(3) == sqrt_int(6)
    with pytest.raises(ValueError):
        sqrt_int(-1)


def test_sqrt_rational():
    assert sqrt_rational(Fraction(2, 9)) == sqrt_int(2) / 3
    assert sqrt_rational(Fraction(1, 3)) ** 2 == Fraction(1, 3)


@given(st.integers(0, 10**6))
def test_sqrt_int_squares_back(n):
    assert sqrt_int(n) * sqrt_int(n) == n


@given(radicals(), radicals(), radicals())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + RadicalScalar() == a


@settings(max_examples=50)
@given(radicals(), radicals())
def test_float_image_is_a_ring_map(a, b):
    assert abs(float(a * b) - float(a) * float(b)) <= 1e-9 * (1 + abs(float(a) * float(b)))
    assert abs(float(a + b) - (float(a) + float(b))) <= 1e-9 * (1 + abs(float(a)) + abs(float(b)))


def test_inverse_and_division():
    s3 = sqrt_int(3)
    assert s3.inverse() == s3 / 3
    assert 1 / (3 * s3) == s3 / 9
    assert (2 * s3) ** -2 == Fraction(1, 12)
    with pytest.raises(ZeroDivisionError):
        RadicalScalar().inverse()
    with pytest.raises(ValueError):
        (1 + s3).inverse()


def test_equality_and_hash_with_rationals():
    q = RadicalScalar.rational(Fraction(3, 4))
    assert q == Fraction(3, 4)
    assert hash(q) == hash(Fraction(3, 4))
    assert sqrt_int(2) != sqrt_int(3)


def test_float_and_mpf():
    assert math.isclose(float(sqrt_int(3) / 9), math.sqrt(3) / 9, rel_tol=1e-15)
    with mpmath.workprec(200):
        err = (sqrt_int(2) + sqrt_int(3)).to_mpf(prec=200) - (mpmath.sqrt(2) + mpmath.sqrt(3))
        assert abs(err) < mpmath.mpf(2) ** -190


@given(radicals())
def test_json_roundtrip(a):
    assert RadicalScalar.from_json(a.to_json()) == a
    assert RadicalScalar.from_json_obj(json.loads(a.to_json())) == a


def test_json_rejects_non_squarefree_keys():
    with pytest.raises(ValueError):
        RadicalScalar.from_json_obj({"4": "1/1"})


def test_as_radical():
    assert as_radical(3) == 3
    with pytest.raises(TypeError):
        as_radical(0.5)
