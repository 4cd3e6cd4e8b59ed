"""Brute-force enumeration of annulus matchings.

Two independent routes to every count:

* enumerate_matchings / oracle_count walk the gap-cell state space
  directly: compositions of the half-circle counts over the gaps, a Dyck
  word per gap, deduplicated by least rotation.
* state_oracle_count walks left-endpoint subsets of both boundaries plus a
  twist and funnels every state through matching_from_leftset, so it
  exercises the model constructor rather than the cell grammar.

Both are exponential and exist to cross-check the closed-form counts, so
every entry point takes an EnumerationBudget and refuses work beyond it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceededError
from .model import (
    AnnularMatching,
    GapCell,
    _canonical_cells,
    canonical_rotation,
    matching_from_leftset,
)
from .numtheory import binomial, catalan, exact_div

__all__ = [
    "DEFAULT_BUDGET",
    "EnumerationBudget",
    "enumerate_circular",
    "enumerate_matchings",
    "gen_compositions",
    "gen_dyck",
    "oracle_count",
    "state_oracle_count",
]


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard ceilings for brute-force sweeps.

    max_raw_states bounds the number of raw states visited before any
    deduplication, which is also a memory bound for the enumerations that
    collect their results.
    """

    max_outer_endpoints: int = 14
    max_inner_endpoints: int = 14
    max_raw_states: int = 100_000_000


DEFAULT_BUDGET = EnumerationBudget()


def _check_budget(budget: EnumerationBudget, outer: int, inner: int, raw_states: int) -> None:
    if outer > budget.max_outer_endpoints:
        raise BudgetExceededError(
            f"{outer} outer endpoints exceed the budget of {budget.max_outer_endpoints}"
        )
    if inner > budget.max_inner_endpoints:
        raise BudgetExceededError(
            f"{inner} inner endpoints exceed the budget of {budget.max_inner_endpoints}"
        )
    if raw_states > budget.max_raw_states:
        raise BudgetExceededError(
            f"{raw_states} raw states exceed the budget of {budget.max_raw_states}"
        )


@lru_cache(maxsize=None)
def _dyck_words(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("",)
    words: list[str] = []

    def extend(prefix: str, opens: int, depth: int) -> None:
        if len(prefix) == 2 * n:
            words.append(prefix)
            return
        if opens < n:
            extend(prefix + "U", opens + 1, depth + 1)
        if depth:
            extend(prefix + "D", opens, depth - 1)

    extend("", 0, 0)
    return tuple(words)


def gen_dyck(n: int) -> list[str]:
    """All Dyck words of semilength n, lexicographic under U < D."""
    if n < 0:
        raise ValueError(f"semilength must be nonnegative, got {n}")
    return list(_dyck_words(n))


def gen_compositions(total: int, parts: int):
    """Yield all weak compositions of total into parts ordered slots.

    First slot descending, then recursively the same; gen_compositions(2, 2)
    yields (2, 0), (1, 1), (0, 2).
    """
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in gen_compositions(total - first, parts - 1):
            yield (first,) + rest


def _dyck_fillings(total: int, parts: int):
    """All ways to spread total half-circles over parts gaps, a Dyck word each."""
    for comp in gen_compositions(total, parts):
        yield from itertools.product(*[_dyck_words(c) for c in comp])


def _count_fillings(total: int, parts: int) -> int:
    # Tuples of `parts` Dyck words with semilengths summing to `total`.
    return exact_div(parts * binomial(2 * total + parts, total), 2 * total + parts)


@lru_cache(maxsize=None)
def _balanced_necklace_words(n: int) -> tuple[str, ...]:
    """Canonical cyclic words with n letters L and n letters R."""
    if n == 0:
        return ("",)
    words: list[str] = []
    size = 2 * n
    for spots in itertools.combinations(range(size), n):
        chars = ["R"] * size
        for p in spots:
            chars[p] = "L"
        word = "".join(chars)
        if word == canonical_rotation(word):
            words.append(word)
    return tuple(words)


def _raw_states(n: int, m: int, k: int) -> int:
    if k == 0:
        return binomial(2 * n, n) * binomial(2 * m, m)
    return _count_fillings(n, k) * _count_fillings(m, k)


def enumerate_matchings(
    n: int, m: int, k: int, budget: EnumerationBudget | None = None
) -> set[AnnularMatching]:
    """The full set of canonical matchings with the given parameters.

    n and m count outer and inner half-circles, k the cross-cuts.
    """
    if n < 0 or m < 0 or k < 0:
        raise ValueError("n, m, k must be nonnegative")
    budget = budget or DEFAULT_BUDGET
    _check_budget(budget, 2 * n + k, 2 * m + k, _raw_states(n, m, k))
    if k == 0:
        return {
            AnnularMatching.from_necklaces(outer, inner)
            for outer in _balanced_necklace_words(n)
            for inner in _balanced_necklace_words(m)
        }
    result: set[AnnularMatching] = set()
    inner_fillings = list(_dyck_fillings(m, k))
    for outer_words in _dyck_fillings(n, k):
        for inner_words in inner_fillings:
            cells = tuple(
                GapCell(o, i) for o, i in zip(outer_words, inner_words)
            )
            result.add(AnnularMatching.from_cells(cells))
    return result


def oracle_count(n: int, m: int, k: int, budget: EnumerationBudget | None = None) -> int:
    """Count matchings by streaming over gap-cell states.

    Counts a state exactly when it equals its own least rotation, so each
    matching is counted once and nothing is stored.
    """
    if n < 0 or m < 0 or k < 0:
        raise ValueError("n, m, k must be nonnegative")
    budget = budget or DEFAULT_BUDGET
    _check_budget(budget, 2 * n + k, 2 * m + k, _raw_states(n, m, k))
    if k == 0:
        return len(_balanced_necklace_words(n)) * len(_balanced_necklace_words(m))
    count = 0
    inner_fillings = list(_dyck_fillings(m, k))
    for outer_words in _dyck_fillings(n, k):
        for inner_words in inner_fillings:
            cells = tuple(
                GapCell(o, i) for o, i in zip(outer_words, inner_words)
            )
            if cells == _canonical_cells(cells):
                count += 1
    return count


def state_oracle_count(
    n: int, m: int, k: int, budget: EnumerationBudget | None = None
) -> int:
    """Count matchings by sweeping every left-set state through the model.

    Iterates all (S_out, S_in, t): left-endpoint subsets of each boundary
    and a twist, builds each matching with matching_from_leftset, and counts
    the distinct canonical results.  Slower than oracle_count but
    independent of the gap-cell enumeration.
    """
    if n < 0 or m < 0 or k < 0:
        raise ValueError("n, m, k must be nonnegative")
    budget = budget or DEFAULT_BUDGET
    outer_size = 2 * n + k
    inner_size = 2 * m + k
    twists = max(k, 1)
    raw = binomial(outer_size, n) * binomial(inner_size, m) * twists
    _check_budget(budget, outer_size, inner_size, raw)
    seen: set[AnnularMatching] = set()
    inner_states = list(itertools.combinations(range(inner_size), m))
    for s_out in itertools.combinations(range(outer_size), n):
        for s_in in inner_states:
            for t in range(twists):
                seen.add(matching_from_leftset(outer_size, s_out, inner_size, s_in, t))
    return len(seen)


def enumerate_circular(n: int, budget: EnumerationBudget | None = None) -> set:
    """Non-crossing perfect matchings of 2n points on one circle, up to rotation.

    Each matching is returned as its least rotated chord set, a sorted tuple
    of index pairs.
    """
    if n < 1:
        raise ValueError(f"enumerate_circular needs n >= 1, got {n}")
    budget = budget or DEFAULT_BUDGET
    size = 2 * n
    # One circle, no annular boundary pair: only the raw-state ceiling applies.
    raw = catalan(n) * size
    if raw > budget.max_raw_states:
        raise BudgetExceededError(
            f"{raw} raw states exceed the budget of {budget.max_raw_states}"
        )
    result = set()
    for word in _dyck_words(n):
        stack: list[int] = []
        pairs: list[tuple[int, int]] = []
        for i, ch in enumerate(word):
            if ch == "U":
                stack.append(i)
            else:
                pairs.append((stack.pop(), i))
        best = min(
            tuple(
                sorted(
                    tuple(sorted(((a + r) % size, (b + r) % size)))
                    for a, b in pairs
                )
            )
            for r in range(size)
        )
        result.add(best)
    return result
