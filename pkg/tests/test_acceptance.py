"""Acceptance suite: ten independently checkable criteria.

Each criterion is one test; the conftest prints a per-criterion verdict
line at the end of the run.  Every comparison is exact integer equality,
and the timed criteria assert their wall-clock budget.
"""

import time

from annular.bijections import from_necklace, split, to_necklace
from annular.counting import (
    count_ann,
    count_circular,
    count_fixed_crosscuts,
    count_maximal,
    count_maximal_prime,
    count_total,
)
from annular.enumeration import EnumerationBudget, enumerate_circular, enumerate_matchings
from annular.numtheory import catalan
from annular.refdata import bundled_sequence
from annular.verify import verify_bijections, verify_counts

from reference_tables import ANN_GRID, MAXIMAL_GRID, TOTAL_ROW

WIDE = EnumerationBudget(
    max_outer_endpoints=24, max_inner_endpoints=24, max_raw_states=10**8
)


def test_criterion_01_single_boundary_grid():
    start = time.perf_counter()
    for n in range(11):
        for k in range(11):
            assert count_maximal(n, k) == MAXIMAL_GRID[n][k], (n, k)
    assert time.perf_counter() - start < 1.0


def test_criterion_02_annulus_grid():
    start = time.perf_counter()
    for a in range(13):
        for b in range(13):
            assert count_ann(a, b) == ANN_GRID[a][b], (a, b)
            assert count_ann(a, b) == count_ann(b, a)
    assert time.perf_counter() - start < 1.0


def test_criterion_03_total_row():
    start = time.perf_counter()
    for t in range(14):
        assert count_total(2 * t) == TOTAL_ROW[t], t
    assert count_total(26) == 3544416
    assert time.perf_counter() - start < 1.0


def test_criterion_04_formula_matches_oracles():
    start = time.perf_counter()
    results = verify_counts(max_endpoints=12)
    assert len(results) >= 200
    failures = [r for r in results if not r.ok]
    assert failures == []
    assert time.perf_counter() - start < 300.0


def test_criterion_05_circular_counts():
    start = time.perf_counter()
    reference = bundled_sequence("A002995")
    for n in range(1, 9):
        count = count_circular(n)
        assert count == len(set(enumerate_circular(n))), n
        assert count == reference.value(n + 1), n
    assert time.perf_counter() - start < 60.0


def test_criterion_06_necklace_identity_and_round_trip():
    from annular.counting import count_necklace

    assert count_maximal(0, 0) == 1  # the empty matching; no necklace pairs with it
    for n in range(11):
        for k in range(11):
            if (n, k) == (0, 0):
                continue
            assert count_maximal(n, k) == count_necklace(n + k, n), (n, k)
    for n in range(7):
        for k in range(7):
            if (n, k) == (0, 0):
                continue
            matchings = enumerate_matchings(n, 0, k, budget=WIDE)
            image = set()
            for matching in matchings:
                necklace = to_necklace(matching)
                assert from_necklace(necklace) == matching
                image.add(necklace)
            assert len(image) == count_necklace(n + k, n), (n, k)


def test_criterion_07_prime_crosscut_formula():
    for p in (2, 3, 5, 7):
        for n in range(13):
            assert count_maximal_prime(n, p) == count_maximal(n, p), (n, p)
    two = bundled_sequence("A007595")
    three = bundled_sequence("A003441")
    for n in range(1, 13):
        assert count_maximal_prime(n, 2) == two.value(n)
        assert count_maximal_prime(n, 3) == three.value(n)


def test_criterion_08_strict_count_ordering():
    for n in range(3, 13):
        assert count_circular(n) < count_maximal(n, 0) < catalan(n), n
    assert count_circular(1) == count_maximal(1, 0) == catalan(1) == 1
    assert count_maximal(0, 0) == catalan(0) == 1
    assert count_circular(2) == 1
    assert count_maximal(2, 0) == catalan(2) == 2


def test_criterion_09_bijection_round_trips():
    results = verify_bijections(max_endpoints=12)
    assert len(results) >= 1
    failures = [r for r in results if not r.ok]
    assert failures == []
    # splitting along the cross-cuts loses nothing when one boundary is bare
    for n, m, k in [(3, 0, 2), (0, 3, 2), (2, 2, 0), (2, 2, 1)]:
        matchings = enumerate_matchings(n, m, k)
        assert len({split(x) for x in matchings}) == len(matchings)
    # ... and strictly collapses once both boundaries carry arcs past one cross-cut
    for k in (2, 3):
        for n in (1, 2):
            for m in (1, 2):
                matchings = enumerate_matchings(n, m, k)
                image = {split(x) for x in matchings}
                assert len(image) < len(matchings), (n, m, k)
                assert len(image) == (
                    count_fixed_crosscuts(n, 0, k) * count_fixed_crosscuts(0, m, k)
                )


def test_criterion_10_catalan_column():
    for n in range(13):
        assert count_maximal(n, 1) == catalan(n), n
