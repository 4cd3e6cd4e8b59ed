"""Closed-form counts against frozen grids and cross-identities."""

import pytest

from annular.counting import (
    CountQuery,
    count_ann,
    count_circular,
    count_endpoints,
    count_fixed_crosscuts,
    count_maximal,
    count_maximal_prime,
    count_necklace,
    count_total,
)
from annular.numtheory import catalan

from reference_tables import ANN_GRID, CIRCULAR_ROW, MAXIMAL_GRID, TOTAL_ROW


def test_count_maximal_grid():
    for n in range(11):
        for k in range(11):
            assert count_maximal(n, k) == MAXIMAL_GRID[n][k], (n, k)


def test_count_ann_grid_including_blanks():
    for a in range(13):
        for b in range(13):
            assert count_ann(a, b) == ANN_GRID[a][b], (a, b)


def test_count_total_row():
    for t in range(14):
        assert count_total(2 * t) == TOTAL_ROW[t]
        assert count_total(2 * t + 1) == 0


def test_count_total_sums_antidiagonals():
    for t in range(9):
        assert count_total(2 * t) == sum(count_ann(a, 2 * t - a) for a in range(2 * t + 1))


def test_count_circular_row():
    for n, want in enumerate(CIRCULAR_ROW, start=1):
        assert count_circular(n) == want
    with pytest.raises(ValueError):
        count_circular(0)


def test_count_maximal_degenerate_corner():
    assert count_maximal(0, 0) == 1


def test_count_fixed_crosscuts_dispatch():
    # no inner half-circles: reduces to the single-boundary count
    for n in range(9):
        for k in range(9):
            assert count_fixed_crosscuts(n, 0, k) == count_maximal(n, k)
            assert count_fixed_crosscuts(0, n, k) == count_maximal(n, k)
    # no cross-cuts: the two boundaries are independent
    for n in range(7):
        for m in range(7):
            assert count_fixed_crosscuts(n, m, 0) == count_maximal(n, 0) * count_maximal(m, 0)


def test_count_fixed_crosscuts_symmetry():
    for n in range(6):
        for m in range(6):
            for k in range(6):
                assert count_fixed_crosscuts(n, m, k) == count_fixed_crosscuts(m, n, k)


def test_count_ann_symmetry():
    for a in range(17):
        for b in range(17):
            assert count_ann(a, b) == count_ann(b, a)


def test_count_ann_decomposes_over_crosscuts():
    for a in range(13):
        for b in range(13):
            if (a - b) % 2:
                continue
            total = sum(
                count_fixed_crosscuts((a - k) // 2, (b - k) // 2, k)
                for k in range(a % 2, min(a, b) + 1, 2)
            )
            assert count_ann(a, b) == total, (a, b)


def test_prime_case_agrees():
    for p in (2, 3, 5, 7):
        for n in range(13):
            assert count_maximal_prime(n, p) == count_maximal(n, p)
    with pytest.raises(ValueError):
        count_maximal_prime(3, 4)


def test_necklace_identity():
    for n in range(11):
        for k in range(11):
            if (n, k) == (0, 0):
                continue  # the necklace count rejects the empty necklace
            assert count_maximal(n, k) == count_necklace(n + k, n), (n, k)


def test_count_necklace_examples():
    assert count_necklace(2, 1) == 1
    assert count_necklace(4, 2) == 3
    assert count_necklace(0, 3) == 1
    assert count_necklace(1, 1) == 1
    with pytest.raises(ValueError):
        count_necklace(0, 0)


def test_catalan_column():
    for n in range(13):
        assert count_maximal(n, 1) == catalan(n)


def test_strict_inequalities():
    for n in range(3, 13):
        assert count_circular(n) < count_maximal(n, 0) < catalan(n)
    assert count_circular(1) == count_maximal(1, 0) == catalan(1) == 1
    assert count_maximal(0, 0) == catalan(0) == 1
    assert count_maximal(2, 0) == catalan(2) == 2
    assert count_circular(2) == 1


def test_product_strictness():
    for k in (2, 3, 4):
        for n in range(1, 5):
            for m in range(1, 5):
                assert (
                    count_fixed_crosscuts(n, m, k)
                    > count_maximal(n, k) * count_maximal(m, k)
                ), (n, m, k)


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        count_maximal(-1, 0)
    with pytest.raises(ValueError):
        count_ann(4, -2)
    with pytest.raises(ValueError):
        count_fixed_crosscuts(1, 1, -1)


def test_count_endpoints():
    assert count_endpoints(6, 6) == 34
    assert count_endpoints(3, 2) == 0
    assert count_endpoints(4, 2, 2) == 1
    assert count_endpoints(4, 2, 3) == 0  # parity mismatch with the boundaries
    assert count_endpoints(2, 2, 4) == 0  # more cross-cuts than endpoints
    with pytest.raises(ValueError):
        count_endpoints(2, 2, -1)


def test_count_query():
    assert CountQuery(6, 6).evaluate() == 34
    assert CountQuery(4, 2, 2).evaluate() == 1
