from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from evengillis.exact_core import ExactRational, as_rational, binomial, factorial, is_integral


def _pascal(rows):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return tri


PASCAL = _pascal(20)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_direct_product():
    acc = 1
    for n in range(1, 31):
        acc *= n
        assert factorial(n) == acc
        assert factorial(n) == n * factorial(n - 1)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(4, 2) == PASCAL[4][2] == 6
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert binomial(3, 5) == 0


def test_binomial_pascal_and_symmetry():
    for n in range(21):
        for j in range(n + 1):
            assert binomial(n, j) == PASCAL[n][j]
            assert binomial(n, j) == binomial(n, n - j)
            if n and j:
                assert binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j)


def test_rational_examples():
    assert ExactRational(1, 2) + ExactRational(1, 3) == ExactRational(5, 6)
    half = ExactRational(2, 4)
    assert (half.numerator, half.denominator) == (1, 2)
    assert ExactRational(1, 2) * ExactRational(-2, 3) == ExactRational(-1, 3)
    assert -ExactRational(1, 2) == ExactRational(-1, 2)
    with pytest.raises(ZeroDivisionError):
        ExactRational(1, 0)


def test_as_rational_refuses_floats():
    assert as_rational(3) == Fraction(3)
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert is_integral(Fraction(4, 2)) and not is_integral(Fraction(1, 2))


rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a and a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    for v in (a + b, a * b, -a):
        assert v.denominator > 0
        from math import gcd
        assert gcd(abs(v.numerator), v.denominator) == 1
