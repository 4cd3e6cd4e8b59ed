"""Closed-form counts of annulus matchings by orbit counting.

Each boundary circle may be rotated freely, so matchings are orbits of a
cyclic group action and the counts come out as divisor sums weighted by
Euler's totient.  Every division below is exact and asserted; all values
are plain unbounded ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numtheory import (
    binomial,
    catalan,
    divisors,
    exact_div,
    gcd,
    gcd3,
    is_prime,
    totient,
)

__all__ = [
    "CountQuery",
    "count_ann",
    "count_circular",
    "count_endpoints",
    "count_fixed_crosscuts",
    "count_maximal",
    "count_maximal_prime",
    "count_necklace",
    "count_total",
]


def _check_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def count_maximal(n: int, k: int) -> int:
    """Matchings with n outer half-circles, k cross-cuts, nothing inside.

    These are the matchings whose inner boundary carries only cross-cut
    endpoints.  The count is a totient-weighted divisor sum over
    d | gcd(2n + k, n), divided by the 2n + k rotations of the outer
    boundary; the lone empty matching is the n = k = 0 case.
    """
    _check_nonnegative(n=n, k=k)
    if n == 0 and k == 0:
        return 1
    total = 2 * n + k
    acc = 0
    for d in divisors(gcd(total, n)):
        acc += totient(d) * binomial(total // d, n // d)
    return exact_div(acc, total)


def count_maximal_prime(n: int, p: int) -> int:
    """count_maximal(n, p) via the shortcut available when p is prime.

    With a prime number of cross-cuts the divisor sum collapses to one
    binomial plus a Catalan correction that vanishes unless p divides n.
    """
    _check_nonnegative(n=n)
    if not is_prime(p):
        raise ValueError(f"cross-cut count {p} is not prime")
    total = 2 * n + p
    value = Fraction(binomial(total, n), total) + Fraction(p - 1, p) * catalan(
        Fraction(n, p)
    )
    assert value.denominator == 1
    return int(value)


def count_fixed_crosscuts(n: int, m: int, k: int) -> int:
    """Matchings with n outer half-circles, m inner ones, exactly k cross-cuts.

    Cross-cuts couple the two boundary rotations, giving a two-binomial
    divisor sum over d | gcd(2n + k, n, m).  Without cross-cuts the two
    boundaries are independent and the count factors.
    """
    _check_nonnegative(n=n, m=m, k=k)
    if m == 0:
        return count_maximal(n, k)
    if n == 0:
        return count_maximal(m, k)
    if k == 0:
        return count_maximal(n, 0) * count_maximal(m, 0)
    outer_total = 2 * n + k
    inner_total = 2 * m + k
    acc = 0
    for d in divisors(gcd3(outer_total, n, m)):
        acc += (
            totient(d)
            * binomial(outer_total // d, n // d)
            * binomial(inner_total // d, m // d)
        )
    return exact_div(k * acc, outer_total * inner_total)


def count_ann(outer: int, inner: int) -> int:
    """Matchings with the given numbers of outer and inner endpoints.

    Zero when outer + inner is odd.  Otherwise the cross-cut count k runs
    over outer mod 2, outer mod 2 + 2, ..., min(outer, inner).
    """
    _check_nonnegative(outer=outer, inner=inner)
    if (outer + inner) % 2:
        return 0
    acc = 0
    for k in range(outer % 2, min(outer, inner) + 1, 2):
        acc += count_fixed_crosscuts((outer - k) // 2, (inner - k) // 2, k)
    return acc


def count_total(endpoints: int) -> int:
    """Matchings with the given total number of endpoints, split any way.

    Sums count_ann over all (outer, inner) splittings; zero for odd totals.
    """
    _check_nonnegative(endpoints=endpoints)
    if endpoints % 2:
        return 0
    return sum(count_ann(a, endpoints - a) for a in range(endpoints + 1))


def count_circular(n: int) -> int:
    """Non-crossing perfect matchings of 2n points on one circle, up to rotation.

    A totient-weighted divisor sum corrected by two Catalan terms, the
    second contributing only for odd n.  The intermediate terms are
    half-integers, so the arithmetic runs through Fraction and the result
    is asserted integral.  Defined for n >= 1.
    """
    if n < 1:
        raise ValueError(f"count_circular needs n >= 1, got {n}")
    acc = 0
    for d in divisors(n):
        acc += totient(n // d) * binomial(2 * d, d)
    value = (
        Fraction(acc, 2 * n)
        - Fraction(catalan(n), 2)
        + Fraction(catalan(Fraction(n - 1, 2)), 2)
    )
    assert value.denominator == 1
    return int(value)


def count_necklace(n1: int, n2: int) -> int:
    """Binary necklaces with n1 beads of one color and n2 of the other."""
    _check_nonnegative(n1=n1, n2=n2)
    total = n1 + n2
    if total == 0:
        raise ValueError("a necklace needs at least one bead")
    acc = 0
    for d in divisors(gcd(n1, n2)):
        acc += totient(d) * binomial(total // d, n2 // d)
    return exact_div(acc, total)


@dataclass(frozen=True)
class CountQuery:
    """A request for one count: endpoint numbers, optionally a cross-cut count."""

    outer: int
    inner: int
    crosscuts: int | None = None

    def evaluate(self) -> int:
        return count_endpoints(self.outer, self.inner, self.crosscuts)


def count_endpoints(outer: int, inner: int, crosscuts: int | None = None) -> int:
    """Count matchings by endpoint numbers, optionally at a fixed cross-cut count.

    Infeasible combinations (parity mismatch, crosscuts exceeding a boundary)
    count zero rather than raising.
    """
    _check_nonnegative(outer=outer, inner=inner)
    if crosscuts is None:
        return count_ann(outer, inner)
    if crosscuts < 0:
        raise ValueError(f"crosscuts must be nonnegative, got {crosscuts}")
    k = crosscuts
    if k > min(outer, inner) or (outer - k) % 2 or (inner - k) % 2:
        return 0
    return count_fixed_crosscuts((outer - k) // 2, (inner - k) // 2, k)
