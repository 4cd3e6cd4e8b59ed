"""Self-check suite: formulas against oracles, bijections, invariants, snapshots.

Every check compares two independent routes to the same number or object —
a closed formula against brute-force enumeration, a map against its
inverse, a bundled snapshot against a fresh computation — and reports one
CheckResult per instance or named property.  run_all collects everything;
summarize turns the results into a pass/fail matrix with failures
localized to their instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .bijections import (
    from_graph,
    from_linear,
    from_necklace,
    reflect,
    to_graph,
    to_linear,
    to_necklace,
    validate_graph,
)
from .counting import (
    count_ann,
    count_circular,
    count_fixed_crosscuts,
    count_maximal,
    count_maximal_prime,
    count_necklace,
)
from .enumeration import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    enumerate_matchings,
    oracle_count,
    state_oracle_count,
)
from .model import AnnularMatching, compress, endpoints
from .numtheory import catalan
from .refdata import bundled_sequence

__all__ = [
    "CheckResult",
    "feasible_triples",
    "run_all",
    "summarize",
    "verify_bijections",
    "verify_counts",
    "verify_invariants",
    "verify_sequences",
]


@dataclass(frozen=True)
class CheckResult:
    check: str
    instance: str
    ok: bool
    detail: str = ""


def feasible_triples(max_endpoints: int) -> Iterator[tuple[int, int, int]]:
    """All (n, m, k) whose boundaries have at most max_endpoints points each."""
    for a in range(max_endpoints + 1):
        for b in range(max_endpoints + 1):
            if (a - b) % 2:
                continue
            for k in range(a % 2, min(a, b) + 1, 2):
                yield (a - k) // 2, (b - k) // 2, k


def verify_counts(
    max_endpoints: int = 12,
    budget: EnumerationBudget | None = None,
    count_fn: Callable[[int, int, int], int] | None = None,
) -> list[CheckResult]:
    """Closed formula vs. both enumeration oracles on every feasible triple.

    count_fn substitutes for the closed formula; injecting a deliberately
    wrong function must make exactly the affected instances fail, which is
    how the suite's own error localization is tested.
    """
    budget = budget or DEFAULT_BUDGET
    formula = count_fn or count_fixed_crosscuts
    results = []
    for n, m, k in feasible_triples(max_endpoints):
        want = formula(n, m, k)
        by_cells = oracle_count(n, m, k, budget=budget)
        by_states = state_oracle_count(n, m, k, budget=budget)
        results.append(
            CheckResult(
                "formula-vs-oracles",
                f"(n={n}, m={m}, k={k})",
                want == by_cells == by_states,
                f"formula={want} cells={by_cells} states={by_states}",
            )
        )
    return results


def _bijection_failures(matching: AnnularMatching) -> list[str]:
    problems = []
    if compress(endpoints(matching)) != matching:
        problems.append("endpoint diagram did not compress back")
    if reflect(reflect(matching)) != matching:
        problems.append("reflect is not an involution here")
    if matching.m == 0:
        if from_necklace(to_necklace(matching)) != matching:
            problems.append("necklace round trip failed")
        if matching.crosscuts == 1 and from_linear(to_linear(matching)) != matching:
            problems.append("linear round trip failed")
    if matching.crosscuts or matching.m == 0:
        graph = to_graph(matching)
        bad = validate_graph(graph)
        if bad:
            problems.append(f"graph image invalid: {bad[0]}")
        elif from_graph(graph) != matching:
            problems.append("graph round trip failed")
        elif len(graph.cycle_vertices) != matching.crosscuts:
            problems.append("graph cycle length differs from cross-cut count")
        elif graph.num_edges != matching.crosscuts + matching.n + matching.m:
            problems.append("graph edge count off")
    return problems


def verify_bijections(
    max_endpoints: int = 12, budget: EnumerationBudget | None = None
) -> list[CheckResult]:
    """Round-trip every map on every matching with <= max_endpoints total."""
    budget = budget or DEFAULT_BUDGET
    results = []
    for n, m, k in feasible_triples(max_endpoints):
        if (2 * n + k) + (2 * m + k) > max_endpoints:
            continue
        ok = True
        detail = ""
        seen = 0
        for matching in enumerate_matchings(n, m, k, budget=budget):
            seen += 1
            problems = _bijection_failures(matching)
            if problems:
                ok = False
                detail = f"{matching.encode()}: {problems[0]}"
                break
        results.append(
            CheckResult(
                "bijection-round-trips",
                f"(n={n}, m={m}, k={k})",
                ok,
                detail or f"{seen} matchings checked",
            )
        )
    return results


def verify_invariants() -> list[CheckResult]:
    """Named identities and inequalities between the counting functions."""
    results = []

    def add(check: str, ok: bool, detail: str) -> None:
        results.append(CheckResult(check, "sweep", ok, detail))

    bad = [
        (n, k)
        for n in range(11)
        for k in range(11)
        if (n, k) != (0, 0) and count_maximal(n, k) != count_necklace(n + k, n)
    ]
    add(
        "necklace-identity",
        not bad and count_maximal(0, 0) == 1,
        f"failures: {bad[:3]}" if bad else "n,k <= 10",
    )

    bad = [n for n in range(13) if count_maximal(n, 1) != catalan(n)]
    add("catalan-column", not bad, f"failures: {bad}" if bad else "n <= 12")

    bad = [
        (n, p)
        for p in (2, 3, 5, 7)
        for n in range(13)
        if count_maximal_prime(n, p) != count_maximal(n, p)
    ]
    add("prime-case", not bad, f"failures: {bad[:3]}" if bad else "p in {2,3,5,7}, n <= 12")

    bad = [
        (n, k)
        for n in range(11)
        for k in range(11)
        if count_fixed_crosscuts(n, 0, k) != count_maximal(n, k)
    ]
    add("maximal-reduction", not bad, f"failures: {bad[:3]}" if bad else "n,k <= 10")

    bad = [
        (a, b)
        for a in range(17)
        for b in range(17)
        if count_ann(a, b) != count_ann(b, a)
    ]
    add("reflection-symmetry", not bad, f"failures: {bad[:3]}" if bad else "a,b <= 16")

    strict = all(
        count_circular(n) < count_maximal(n, 0) < catalan(n) for n in range(3, 13)
    )
    degenerate = (
        count_circular(1) == count_maximal(1, 0) == catalan(1) == 1
        and count_maximal(0, 0) == catalan(0) == 1
        and count_maximal(2, 0) == catalan(2) == 2
        and count_circular(2) == 1
    )
    add("counting-strictness", strict and degenerate, "3 <= n <= 12 plus n <= 2 pattern")

    bad = [
        (n, m, k)
        for k in (2, 3, 4)
        for n in range(1, 5)
        for m in range(1, 5)
        if count_fixed_crosscuts(n, m, k)
        <= count_maximal(n, k) * count_maximal(m, k)
    ]
    add("product-strictness", not bad, f"failures: {bad[:3]}" if bad else "k in {2,3,4}, n,m in 1..4")

    return results


def verify_sequences() -> list[CheckResult]:
    """Bundled snapshots against freshly computed counts on all overlaps."""
    results = []

    def sweep(check: str, seq_id: str, pairs) -> None:
        seq = bundled_sequence(seq_id)
        bad = [
            (args, want, got)
            for args, want, got in pairs(seq)
            if want != got
        ]
        results.append(
            CheckResult(
                check,
                seq_id,
                not bad,
                f"first failure: {bad[0]}" if bad else f"{len(seq)} bundled values",
            )
        )

    sweep(
        "sequence-agreement",
        "A003239",
        lambda seq: [
            (n, seq.value(n), count_maximal(n, 0))
            for n in range(seq.offset, seq.offset + len(seq))
        ],
    )
    sweep(
        "sequence-agreement",
        "A002995",
        lambda seq: [
            (n, seq.value(n + 1), count_circular(n))
            for n in range(1, seq.offset + len(seq) - 1)
        ],
    )
    sweep(
        "sequence-agreement",
        "A007595",
        lambda seq: [
            (n, seq.value(n), count_maximal(n, 2))
            for n in range(seq.offset, seq.offset + len(seq))
        ],
    )
    sweep(
        "sequence-agreement",
        "A003441",
        lambda seq: [
            (n, seq.value(n), count_maximal(n, 3))
            for n in range(seq.offset, seq.offset + len(seq))
        ],
    )
    sweep(
        "sequence-agreement",
        "A047996",
        lambda seq: [
            ((n, k), seq.triangle(2 * n + k, n), count_maximal(n, k))
            for n in range(0, 13)
            for k in range(0, 25 - 2 * n)
        ],
    )
    sweep(
        "sequence-agreement",
        "A241926",
        lambda seq: [
            ((n, k), seq.triangle(n + k, n), count_maximal(n, k))
            for n in range(0, 13)
            for k in range(0, 25 - n)
        ],
    )
    return results


def run_all(
    max_endpoints: int = 12,
    sequences: bool = False,
    budget: EnumerationBudget | None = None,
    count_fn: Callable[[int, int, int], int] | None = None,
) -> list[CheckResult]:
    results = verify_counts(max_endpoints, budget=budget, count_fn=count_fn)
    results += verify_bijections(max_endpoints, budget=budget)
    results += verify_invariants()
    if sequences:
        results += verify_sequences()
    return results


def summarize(results: list[CheckResult]) -> tuple[str, bool]:
    """Pass/fail matrix plus localized failures; returns (text, all_ok)."""
    order: list[str] = []
    passed: dict[str, int] = {}
    failed: dict[str, int] = {}
    for result in results:
        if result.check not in order:
            order.append(result.check)
            passed[result.check] = 0
            failed[result.check] = 0
        (passed if result.ok else failed)[result.check] += 1
    width = max(len(name) for name in order) if order else 0
    lines = []
    for name in order:
        total = passed[name] + failed[name]
        verdict = "PASS" if failed[name] == 0 else f"FAIL ({failed[name]})"
        lines.append(f"{name:<{width}}  {total:>5} instances  {verdict}")
    failures = [r for r in results if not r.ok]
    for result in failures[:10]:
        lines.append(f"FAILED {result.check} at {result.instance}: {result.detail}")
    if len(failures) > 10:
        lines.append(f"... and {len(failures) - 10} more failures")
    return "\n".join(lines), not failures
