"""Exact integer arithmetic for the divisor-sum counting formulas.

Everything here works with plain Python ints, which are unbounded, so no
count ever overflows or rounds.  Floating point is never used.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "ExactInt",
    "binomial",
    "catalan",
    "divisors",
    "exact_div",
    "gcd",
    "gcd3",
    "is_prime",
    "totient",
]

# All counts in this package are plain unbounded ints.
ExactInt = int


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, with gcd(x, 0) = x and gcd(0, 0) = 0."""
    return math.gcd(a, b)


def gcd3(a: int, b: int, c: int) -> int:
    """Greatest common divisor of three nonnegative integers."""
    return math.gcd(a, b, c)


def divisors(x: int) -> list[int]:
    """All positive divisors of x >= 1, in ascending order."""
    if x < 1:
        raise ValueError(f"divisors() requires a positive integer, got {x}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= x:
        if x % d == 0:
            small.append(d)
            if d * d != x:
                large.append(x // d)
        d += 1
    large.reverse()
    return small + large


def totient(d: int) -> int:
    """Euler's totient: the number of integers in 1..d coprime to d."""
    if d < 1:
        raise ValueError(f"totient() requires a positive integer, got {d}")
    result = d
    rest = d
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), defined as 0 outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(n: int | Fraction) -> int:
    """Catalan number C_n = binom(2n, n) / (n + 1).

    Accepts a Fraction so that formulas with conditionally integral indices
    like (n - 1)/2 or n/p can pass the index straight through: a fractional
    or negative index yields 0 rather than an error.
    """
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = int(n)
    if n < 0:
        return 0
    # The division is exact; // keeps the result an int.
    return math.comb(2 * n, n) // (n + 1)


def is_prime(p: int) -> bool:
    """Trial-division primality test, plenty for the sizes used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def exact_div(num: int, den: int) -> int:
    """Divide and insist on a zero remainder.

    The orbit-counting formulas all produce integers; a nonzero remainder
    means a formula was transcribed wrong, so it is raised loudly instead
    of being truncated away.
    """
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"expected {num} to be divisible by {den}")
    return q
