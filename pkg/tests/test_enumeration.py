"""Exhaustive generation: completeness, canonicality, and budget refusal."""

import pytest

from annular.counting import count_ann, count_fixed_crosscuts
from annular.enumeration import (
    EnumerationBudget,
    enumerate_circular,
    enumerate_matchings,
    gen_compositions,
    gen_dyck,
    oracle_count,
    state_oracle_count,
)
from annular.errors import BudgetExceededError
from annular.model import validate
from annular.numtheory import catalan

from reference_tables import ANN_GRID, CIRCULAR_ROW


def test_gen_dyck_small():
    assert list(gen_dyck(0)) == [""]
    assert list(gen_dyck(1)) == ["UD"]
    words = list(gen_dyck(3))
    assert words == sorted(words, reverse=True)
    assert words == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]


def test_gen_dyck_counts():
    for n in range(8):
        assert sum(1 for _ in gen_dyck(n)) == catalan(n)


def test_gen_compositions():
    assert list(gen_compositions(0, 1)) == [(0,)]
    assert list(gen_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    for total in range(5):
        for parts in range(1, 4):
            seen = list(gen_compositions(total, parts))
            assert len(seen) == len(set(seen))
            assert all(len(c) == parts and sum(c) == total for c in seen)
            assert all(all(x >= 0 for x in c) for c in seen)


def test_enumerate_single_crosscut():
    assert [m.encode() for m in enumerate_matchings(1, 0, 1)] == ["(UD|)"]


def test_enumerate_two_crosscuts():
    codes = {m.encode() for m in enumerate_matchings(1, 1, 2)}
    assert codes == {"(UD|UD)(|)", "(UD|)(|UD)"}
    assert sum(1 for _ in enumerate_matchings(2, 1, 2)) == 5


def test_enumerate_empty_annulus():
    matchings = list(enumerate_matchings(0, 0, 0))
    assert len(matchings) == 1
    assert matchings[0].encode() == "outer:;inner:"


def test_enumerate_results_are_sets():
    assert isinstance(enumerate_matchings(1, 0, 1), set)


def test_enumerated_matchings_are_canonical_and_distinct():
    for n, m, k in [(2, 2, 0), (3, 0, 1), (1, 1, 2), (2, 1, 3), (0, 2, 4)]:
        codes = [m_.encode() for m_ in enumerate_matchings(n, m, k)]
        assert len(codes) == len(set(codes))
        for m_ in enumerate_matchings(n, m, k):
            assert validate(m_) == []


def test_oracle_against_formula():
    for n in range(6):
        for m in range(6):
            for k in range(6):
                if 2 * n + k > 10 or 2 * m + k > 10:
                    continue
                assert oracle_count(n, m, k) == count_fixed_crosscuts(n, m, k), (n, m, k)


def test_state_oracle_against_formula():
    for n in range(5):
        for m in range(5):
            for k in range(5):
                if 2 * n + k > 8 or 2 * m + k > 8:
                    continue
                assert state_oracle_count(n, m, k) == count_fixed_crosscuts(n, m, k)


def test_budget_refusal():
    with pytest.raises(BudgetExceededError):
        list(enumerate_matchings(9, 9, 2))
    wide = EnumerationBudget(max_outer_endpoints=24, max_inner_endpoints=24)
    assert len(enumerate_matchings(8, 0, 0, budget=wide)) == 810


def test_enumerate_circular_counts():
    for n, want in zip(range(1, 7), CIRCULAR_ROW):
        assert len(set(enumerate_circular(n))) == want


def test_crosscut_sweep_reproduces_annulus_grid():
    budget = EnumerationBudget(
        max_outer_endpoints=16, max_inner_endpoints=16, max_raw_states=10**8
    )
    for a in range(13):
        for b in range(13):
            if a + b > 16 or (a - b) % 2:
                continue
            total = sum(
                oracle_count((a - k) // 2, (b - k) // 2, k, budget=budget)
                for k in range(a % 2, min(a, b) + 1, 2)
            )
            assert total == ANN_GRID[a][b] == count_ann(a, b), (a, b)
