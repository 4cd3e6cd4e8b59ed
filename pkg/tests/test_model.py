"""Canonical forms, the code grammar, and endpoint diagrams."""

import pytest
from hypothesis import given, strategies as st

from annular.errors import CodeParseError
from annular.model import (
    AnnularMatching,
    GapCell,
    Necklace,
    boundary_decomposition,
    canonical_rotation,
    compress,
    endpoints,
    is_dyck_word,
    least_rotation_index,
    matching_from_leftset,
    parse_code,
    validate,
)


def naive_least_rotation(seq):
    return min(range(len(seq)), key=lambda s: tuple(seq[s:]) + tuple(seq[:s]))


def test_least_rotation_exhaustive_small():
    for length in range(1, 9):
        for bits in range(3**length):
            word = ""
            v = bits
            for _ in range(length):
                word += "abc"[v % 3]
                v //= 3
            i = least_rotation_index(word)
            j = naive_least_rotation(word)
            assert word[i:] + word[:i] == word[j:] + word[:j], word


@given(st.text(alphabet="ab()", min_size=1, max_size=40))
def test_least_rotation_matches_naive(word):
    i = least_rotation_index(word)
    assert word[i:] + word[:i] == min(word[s:] + word[:s] for s in range(len(word)))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=12))
def test_canonical_rotation_idempotent(items):
    items = tuple(items)
    canon = canonical_rotation(items)
    assert canonical_rotation(canon) == canon
    assert sorted(canon) == sorted(items)


def test_is_dyck_word():
    assert is_dyck_word("")
    assert is_dyck_word("UD")
    assert is_dyck_word("UUDDUD")
    assert not is_dyck_word("DU")
    assert not is_dyck_word("UUD")
    assert not is_dyck_word("UDX")


def test_gap_cell_encode():
    assert GapCell("UUDD", "UD").encode() == "(UUDD|UD)"
    assert GapCell("", "").encode() == "(|)"


def test_parse_code_canonical_forms():
    assert parse_code("(UD|)").encode() == "(UD|)"
    assert parse_code("(UUDD|UD)(|)").encode() == "(UUDD|UD)(|)"
    assert parse_code("outer:LLRR;inner:LR").encode() == "outer:LLRR;inner:LR"


def test_parse_code_accepts_any_rotation():
    # the two cell orders name the same cyclic sequence
    assert parse_code("(|)(UUDD|UD)") == parse_code("(UUDD|UD)(|)")
    # necklace words may come in any rotation too
    assert parse_code("outer:RLLR;inner:") == parse_code("outer:LLRR;inner:")


def test_parse_code_rejects_garbage():
    for bad in [
        "",
        "(UD",
        "(DU|)",
        "(UD|)(",
        "(UD|)x",
        "outer:LL;inner:",
        "outer:LX;inner:",
        "(UD|)outer:;inner:",
    ]:
        with pytest.raises(CodeParseError):
            parse_code(bad)


@given(st.text(alphabet="UD|()LRouter:;in", max_size=24))
def test_parse_code_fuzz(code):
    # any input either parses to a canonical matching or raises the parse error
    try:
        matching = parse_code(code)
    except CodeParseError:
        return
    assert validate(matching) == []
    assert parse_code(matching.encode()) == matching


def test_necklace_canonicalization():
    assert Necklace.from_word("RLLR").word == "LLRR"
    assert Necklace.from_word("BWB").word == "BBW"
    assert Necklace.from_word("LLRR").is_canonical()


def test_from_cells_normalizes_rotation():
    a = AnnularMatching.from_cells([GapCell("", ""), GapCell("UD", "")])
    b = AnnularMatching.from_cells([GapCell("UD", ""), GapCell("", "")])
    assert a == b
    assert a.encode() == "(UD|)(|)"


def test_from_cells_rejects_non_dyck():
    with pytest.raises(ValueError):
        AnnularMatching.from_cells([GapCell("DU", "")])


def test_from_necklaces_rejects_unbalanced():
    with pytest.raises(ValueError):
        AnnularMatching.from_necklaces("LLR", "")


def test_matching_parameters():
    m = parse_code("(UUDD|UD)(|)")
    assert (m.n, m.m, m.k) == (2, 1, 2)
    assert m.outer_endpoints == 6
    assert m.inner_endpoints == 4
    z = parse_code("outer:LLRR;inner:")
    assert (z.n, z.m, z.k) == (2, 0, 0)


def test_validate_flags_bad_instances():
    # built directly, sidestepping the validating constructors
    wrong = AnnularMatching(crosscuts=1, cells=(GapCell("DU", ""),))
    assert any(v.startswith("Dyck prefix:") for v in validate(wrong))
    unbalanced = AnnularMatching(crosscuts=1, cells=(GapCell("UUD", ""),))
    assert any(v.startswith("Dyck balance:") for v in validate(unbalanced))
    rotated = AnnularMatching(crosscuts=2, cells=(GapCell("", ""), GapCell("UD", "")))
    assert any(v.startswith("not canonical:") for v in validate(rotated))
    shape = AnnularMatching(crosscuts=2, cells=(GapCell("", ""),))
    assert any(v.startswith("shape:") for v in validate(shape))
    neck = AnnularMatching(
        crosscuts=0,
        outer_necklace=Necklace("RL"),
        inner_necklace=Necklace(""),
    )
    assert any(v.startswith("not canonical:") for v in validate(neck))


def test_boundary_decomposition_example():
    # openers at 0 and 2 on six positions: positions 4 and 5 stay unmatched
    crosscuts, gaps, pairs = boundary_decomposition(6, frozenset({0, 2}))
    assert crosscuts == (4, 5)
    assert gaps == ("", "UDUD")
    assert pairs[0] == 1 and pairs[2] == 3


def test_matching_from_leftset_examples():
    m = matching_from_leftset(3, [0], 1, [], 0)
    assert m.encode() == "(UD|)"
    z = matching_from_leftset(4, [0, 2], 4, [1, 3], 0)
    assert z.k == 0 and z.n == 2 and z.m == 2


def test_matching_from_leftset_twist_range():
    with pytest.raises(ValueError):
        matching_from_leftset(3, [0], 1, [], 1)
    with pytest.raises(ValueError):
        matching_from_leftset(4, [0, 2], 4, [1, 3], 1)  # k = 0 admits only t = 0


def test_matching_from_leftset_mismatched_boundaries():
    with pytest.raises(ValueError):
        matching_from_leftset(4, [0], 4, [0, 1], 0)


def test_matching_from_leftset_total_on_small_states():
    import itertools

    for outer_size, inner_size in [(4, 2), (5, 3), (6, 4)]:
        for out_count in range(outer_size // 2 + 1):
            k = outer_size - 2 * out_count
            if k > inner_size or (inner_size - k) % 2:
                continue
            in_count = (inner_size - k) // 2
            for s_out in itertools.combinations(range(outer_size), out_count):
                for s_in in itertools.combinations(range(inner_size), in_count):
                    for t in range(max(k, 1)):
                        m = matching_from_leftset(outer_size, s_out, inner_size, s_in, t)
                        assert validate(m) == []
                        assert m.outer_endpoints == outer_size
                        assert m.inner_endpoints == inner_size


def test_endpoints_compress_round_trip():
    from annular.enumeration import enumerate_matchings

    for n, m, k in [(0, 0, 0), (2, 1, 2), (1, 1, 1), (3, 0, 0), (0, 2, 0), (2, 2, 3)]:
        for matching in enumerate_matchings(n, m, k):
            diagram = endpoints(matching)
            assert compress(diagram) == matching


def test_compress_rejects_malformed_diagram():
    from annular.model import EndpointDiagram

    bad = EndpointDiagram(("leftHC",), (), frozenset())
    with pytest.raises(ValueError):
        compress(bad)
