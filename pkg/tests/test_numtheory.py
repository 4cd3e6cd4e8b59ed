"""Number-theory helpers against brute force."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from annular.numtheory import (
    binomial,
    catalan,
    divisors,
    exact_div,
    gcd3,
    is_prime,
    totient,
)


def test_binomial_small_values():
    assert binomial(0, 0) == 1
    assert binomial(5, 2) == 10
    assert binomial(10, 5) == 252


def test_binomial_out_of_range_is_zero():
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(-1, 0) == 0


def test_binomial_counts_subsets():
    items = range(7)
    for k in range(8):
        assert binomial(7, k) == sum(1 for _ in itertools.combinations(items, k))


@given(st.integers(1, 60), st.integers(0, 60))
def test_binomial_pascal_identity(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_divisors_brute_force():
    for n in range(1, 200):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_totient_brute_force():
    for n in range(1, 200):
        assert totient(n) == sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def test_totient_divisor_sum():
    # the classic identity: totients of divisors sum to n
    for n in range(1, 100):
        assert sum(totient(d) for d in divisors(n)) == n


def test_catalan_integers():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_catalan_fractional_inputs():
    assert catalan(Fraction(3, 2)) == 0
    assert catalan(Fraction(5, 2)) == 0
    assert catalan(Fraction(6, 2)) == 5
    assert catalan(-1) == 0
    assert catalan(Fraction(-4, 2)) == 0


def test_is_prime():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_gcd3():
    assert gcd3(12, 18, 24) == 6
    assert gcd3(5, 0, 0) == 5
    assert gcd3(0, 0, 0) == 0


def test_exact_div():
    assert exact_div(84, 7) == 12
    with pytest.raises(ArithmeticError):
        exact_div(85, 7)
