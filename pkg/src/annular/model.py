"""Canonical combinatorial forms for non-crossing matchings in an annulus.

A matching lives on two concentric boundary circles.  Chords come in three
kinds: half-circles with both endpoints on the outer circle, half-circles
with both endpoints on the inner circle, and cross-cuts joining the two
circles.  Rotating either circle does not change the matching, so every
matching is stored in a canonical form that quotients rotation out.

With k >= 1 cross-cuts the annulus is divided into k gaps, and the matching
is equivalent to a cyclic sequence of k cells, one per gap, each holding the
Dyck word of the outer half-circles and the Dyck word of the inner
half-circles nested in that gap.  The canonical form is the least rotation
of the cell sequence under the symbol order U < D < '|' < '(' < ')'.

With k = 0 the two circles are independent and the matching is a pair of
balanced necklaces over {L, R}, each stored as its least rotation.

Text codes follow the same split:

* k >= 1: the cells concatenated, e.g. ``(UUDD|UD)(|)`` for two cross-cuts
  with outer word UUDD and inner word UD in the first gap.
* k = 0: ``outer:<word>;inner:<word>`` with L/R letters, e.g.
  ``outer:LLRR;inner:LR``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import CodeParseError

__all__ = [
    "AnnularMatching",
    "Chord",
    "EndpointDiagram",
    "GapCell",
    "Necklace",
    "boundary_decomposition",
    "canonical_rotation",
    "compress",
    "endpoints",
    "is_dyck_word",
    "least_rotation_index",
    "matching_from_leftset",
    "parse_code",
    "validate",
    "validate_diagram",
]

# Symbol order used to canonicalize cell sequences.
CELL_SYMBOLS = "UD|()"
_SYMBOL_RANK = {ch: i for i, ch in enumerate(CELL_SYMBOLS)}

LABEL_CROSSCUT = "crosscut"
LABEL_LEFT = "leftHC"
LABEL_RIGHT = "rightHC"

KIND_OUTER = "outerHalfCircle"
KIND_INNER = "innerHalfCircle"
KIND_CROSSCUT = "crosscut"


def is_dyck_word(word: str) -> bool:
    """True when word is over {U, D}, balanced, with no prefix dipping below zero."""
    depth = 0
    for ch in word:
        if ch == "U":
            depth += 1
        elif ch == "D":
            depth -= 1
            if depth < 0:
                return False
        else:
            return False
    return depth == 0


def least_rotation_index(seq: Sequence) -> int:
    """Index at which the lexicographically least rotation of seq starts.

    Booth's algorithm, linear time.  Works on any sequence whose items
    support == and < (strings, tuples of tuples, ...).
    """
    n = len(seq)
    if n == 0:
        raise ValueError("an empty sequence has no rotations")
    doubled = seq + seq
    fail = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        item = doubled[j]
        i = fail[j - best - 1]
        while i != -1 and item != doubled[best + i + 1]:
            if item < doubled[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if item != doubled[best + i + 1]:
            if item < doubled[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return best % n


def canonical_rotation(seq):
    """The lexicographically least rotation of a nonempty sequence.

    Preserves the input type for str, tuple, and list.
    """
    i = least_rotation_index(seq)
    if i == 0:
        return seq
    return seq[i:] + seq[:i]


class GapCell(NamedTuple):
    """One gap between consecutive cross-cuts: an outer and an inner Dyck word."""

    outer: str
    inner: str

    def encode(self) -> str:
        return f"({self.outer}|{self.inner})"


_CELL_KEYS: dict[GapCell, tuple[int, ...]] = {}


def _cell_key(cell: GapCell) -> tuple[int, ...]:
    key = _CELL_KEYS.get(cell)
    if key is None:
        key = tuple(_SYMBOL_RANK[ch] for ch in cell.encode())
        _CELL_KEYS[cell] = key
    return key


def _canonical_cells(cells: tuple[GapCell, ...]) -> tuple[GapCell, ...]:
    if len(cells) == 1:
        return cells
    i = least_rotation_index([_cell_key(c) for c in cells])
    if i == 0:
        return cells
    return cells[i:] + cells[:i]


@dataclass(frozen=True)
class Necklace:
    """A cyclic word stored as a concrete string; canonical means least rotation."""

    word: str

    @classmethod
    def from_word(cls, word: str) -> "Necklace":
        if word:
            word = canonical_rotation(word)
        return cls(word)

    def is_canonical(self) -> bool:
        return not self.word or self.word == canonical_rotation(self.word)

    def __len__(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class AnnularMatching:
    """A non-crossing matching of the annulus, in canonical form.

    Build instances through from_cells, from_necklaces, parse_code, or
    matching_from_leftset; the raw constructor performs no validation so
    that validate() can inspect malformed values.
    """

    crosscuts: int
    cells: tuple[GapCell, ...] = ()
    outer_necklace: Necklace | None = None
    inner_necklace: Necklace | None = None

    @classmethod
    def from_cells(cls, cells: Iterable[GapCell | tuple[str, str]]) -> "AnnularMatching":
        """Canonical matching with k >= 1 cross-cuts from its gap cells."""
        normalized = tuple(
            c if isinstance(c, GapCell) else GapCell(c[0], c[1]) for c in cells
        )
        if not normalized:
            raise ValueError("a matching with cross-cuts needs at least one cell")
        for cell in normalized:
            if not is_dyck_word(cell.outer) or not is_dyck_word(cell.inner):
                raise ValueError(f"gap words must be Dyck words, got {cell!r}")
        return cls(crosscuts=len(normalized), cells=_canonical_cells(normalized))

    @classmethod
    def from_necklaces(cls, outer_word: str, inner_word: str) -> "AnnularMatching":
        """Canonical matching with no cross-cuts from its two boundary words."""
        for word in (outer_word, inner_word):
            if set(word) - {"L", "R"}:
                raise ValueError(f"boundary words use letters L and R, got {word!r}")
            if word.count("L") != word.count("R"):
                raise ValueError(f"boundary word must balance L against R, got {word!r}")
        return cls(
            crosscuts=0,
            outer_necklace=Necklace.from_word(outer_word),
            inner_necklace=Necklace.from_word(inner_word),
        )

    @property
    def k(self) -> int:
        return self.crosscuts

    @property
    def n(self) -> int:
        """Number of outer half-circles."""
        if self.crosscuts:
            return sum(cell.outer.count("U") for cell in self.cells)
        return self.outer_necklace.word.count("L")

    @property
    def m(self) -> int:
        """Number of inner half-circles."""
        if self.crosscuts:
            return sum(cell.inner.count("U") for cell in self.cells)
        return self.inner_necklace.word.count("L")

    @property
    def outer_endpoints(self) -> int:
        return 2 * self.n + self.crosscuts

    @property
    def inner_endpoints(self) -> int:
        return 2 * self.m + self.crosscuts

    def encode(self) -> str:
        """Canonical text code; parse_code inverts this exactly."""
        if self.crosscuts:
            return "".join(cell.encode() for cell in self.cells)
        return f"outer:{self.outer_necklace.word};inner:{self.inner_necklace.word}"

    def __str__(self) -> str:
        return self.encode()


_CELL_RE = re.compile(r"\(([UD]*)\|([UD]*)\)")
_NECKLACE_RE = re.compile(r"outer:([LR]*);inner:([LR]*)\Z")


def parse_code(code: str) -> AnnularMatching:
    """Parse a text code and return the canonical matching it denotes.

    Accepts any rotation of a valid code; the result is always canonical.
    """
    if code.startswith("outer:"):
        match = _NECKLACE_RE.match(code)
        if match is None:
            raise CodeParseError(f"malformed necklace code: {code!r}")
        outer_word, inner_word = match.groups()
        try:
            return AnnularMatching.from_necklaces(outer_word, inner_word)
        except ValueError as exc:
            raise CodeParseError(str(exc)) from None
    cells = []
    pos = 0
    while pos < len(code):
        match = _CELL_RE.match(code, pos)
        if match is None:
            raise CodeParseError(f"malformed cell code at offset {pos}: {code!r}")
        cells.append(GapCell(match.group(1), match.group(2)))
        pos = match.end()
    if not cells:
        raise CodeParseError("empty code")
    try:
        return AnnularMatching.from_cells(cells)
    except ValueError as exc:
        raise CodeParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Boundary decomposition and the left-set constructor
# ---------------------------------------------------------------------------


def _cyclic_pairing(size: int, openers: frozenset) -> dict[int, int]:
    """Match every opener to the nearest free closing position counter-clockwise.

    Positions 0..size-1 sit counter-clockwise on a circle.  Two sweeps
    suffice: openers still unmatched after the first sweep close against the
    leading free closers on the wrap-around.  The result maps each matched
    position to its partner, in both directions.
    """
    pairs: dict[int, int] = {}
    stack: list[int] = []
    for step in range(2 * size):
        pos = step if step < size else step - size
        if pos in openers:
            if pos not in pairs and pos not in stack:
                stack.append(pos)
        elif pos not in pairs and stack:
            opener = stack.pop()
            pairs[opener] = pos
            pairs[pos] = opener
    if stack:
        raise ValueError("more openers than closing positions on the boundary")
    return pairs


def boundary_decomposition(
    size: int, openers: Iterable[int]
) -> tuple[tuple[int, ...], tuple[str, ...], dict[int, int]]:
    """Decompose one boundary circle given its half-circle opening positions.

    Returns (crosscut positions ascending, gap words, chord pairing).  The
    positions left unmatched by the nearest-free pairing are the cross-cut
    endpoints; gap i is the arc immediately counter-clockwise of cross-cut
    i, written as a word with U at openers and D elsewhere.  When there are
    no cross-cuts the gap tuple is empty.
    """
    opener_set = frozenset(openers)
    if any(p < 0 or p >= size for p in opener_set):
        raise ValueError("opener positions must lie in range(size)")
    pairs = _cyclic_pairing(size, opener_set)
    crosscuts = tuple(
        p for p in range(size) if p not in opener_set and p not in pairs
    )
    k = len(crosscuts)
    gaps: list[str] = []
    for i in range(k):
        start = crosscuts[i]
        span = (crosscuts[(i + 1) % k] - start - 1) % size if k > 1 else size - 1
        letters = []
        pos = start
        for _ in range(span):
            pos = pos + 1 if pos + 1 < size else 0
            letters.append("U" if pos in opener_set else "D")
        gaps.append("".join(letters))
    return crosscuts, tuple(gaps), pairs


@lru_cache(maxsize=None)
def _crosscuts_and_gaps(size: int, openers: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[str, ...]]:
    crosscuts, gaps, _ = boundary_decomposition(size, openers)
    return crosscuts, gaps


def matching_from_leftset(
    outer_size: int,
    s_out: Iterable[int],
    inner_size: int,
    s_in: Iterable[int],
    t: int = 0,
) -> AnnularMatching:
    """Build the canonical matching determined by left-endpoint sets and a twist.

    s_out and s_in pick the positions, counter-clockwise on each boundary,
    where a half-circle opens.  Every opener is matched to the nearest free
    position counter-clockwise; the positions left over become cross-cut
    endpoints, and outer cross-cut i is joined to inner cross-cut i + t
    (indices cyclic).  Distinct states may and do produce equal matchings;
    canonicalization collapses them.
    """
    out_spots = tuple(sorted(set(s_out)))
    in_spots = tuple(sorted(set(s_in)))
    k = outer_size - 2 * len(out_spots)
    if k != inner_size - 2 * len(in_spots):
        raise ValueError(
            "boundaries disagree on the number of cross-cuts: "
            f"{k} versus {inner_size - 2 * len(in_spots)}"
        )
    if k < 0:
        raise ValueError("more openers than the boundary has room for")
    if not 0 <= t < max(k, 1):
        raise ValueError(f"twist {t} out of range for {k} cross-cuts")
    if out_spots and not 0 <= out_spots[0] <= out_spots[-1] < outer_size:
        raise ValueError("outer opener positions must lie in range(outer_size)")
    if in_spots and not 0 <= in_spots[0] <= in_spots[-1] < inner_size:
        raise ValueError("inner opener positions must lie in range(inner_size)")
    if k == 0:
        outer_word = "".join(
            "L" if p in set(out_spots) else "R" for p in range(outer_size)
        )
        inner_word = "".join(
            "L" if p in set(in_spots) else "R" for p in range(inner_size)
        )
        return AnnularMatching.from_necklaces(outer_word, inner_word)
    _, outer_gaps = _crosscuts_and_gaps(outer_size, out_spots)
    _, inner_gaps = _crosscuts_and_gaps(inner_size, in_spots)
    cells = tuple(
        GapCell(outer_gaps[i], inner_gaps[(i + t) % k]) for i in range(k)
    )
    return AnnularMatching(crosscuts=k, cells=_canonical_cells(cells))


# ---------------------------------------------------------------------------
# Endpoint diagrams
# ---------------------------------------------------------------------------


class Chord(NamedTuple):
    """One chord of an endpoint diagram; endpoints are (side, index) pairs."""

    kind: str
    a: tuple[str, int]
    b: tuple[str, int]

    @classmethod
    def make(cls, kind: str, a: tuple[str, int], b: tuple[str, int]) -> "Chord":
        return cls(kind, *sorted((a, b)))


@dataclass(frozen=True)
class EndpointDiagram:
    """Explicit endpoint labels and chords for one concrete rotation.

    Endpoint indices run counter-clockwise from an arbitrary but fixed
    start; labels say what sits at each index.  twist records the uniform
    cyclic offset of the cross-cut pairing (0 in the layout produced by
    endpoints()).
    """

    outer_labels: tuple[str, ...]
    inner_labels: tuple[str, ...]
    chords: frozenset[Chord]
    twist: int = 0


def _side_layout(cells: tuple[GapCell, ...], which: str) -> tuple[tuple[str, ...], tuple[int, ...]]:
    labels: list[str] = []
    cut_positions: list[int] = []
    for cell in cells:
        cut_positions.append(len(labels))
        labels.append(LABEL_CROSSCUT)
        for ch in getattr(cell, which):
            labels.append(LABEL_LEFT if ch == "U" else LABEL_RIGHT)
    return tuple(labels), tuple(cut_positions)


def _stack_chords(side: str, kind: str, labels: Sequence[str], start: int, stop: int) -> list[Chord]:
    chords: list[Chord] = []
    stack: list[int] = []
    for pos in range(start, stop):
        if labels[pos] == LABEL_LEFT:
            stack.append(pos)
        elif labels[pos] == LABEL_RIGHT:
            chords.append(Chord.make(kind, (side, stack.pop()), (side, pos)))
    return chords


def _necklace_chords(side: str, kind: str, word: str, opener: str) -> list[Chord]:
    openers = frozenset(i for i, ch in enumerate(word) if ch == opener)
    pairs = _cyclic_pairing(len(word), openers)
    return [
        Chord.make(kind, (side, a), (side, b))
        for a, b in pairs.items()
        if a < b
    ]


def endpoints(matching: AnnularMatching) -> EndpointDiagram:
    """Expand a canonical matching into its endpoint diagram at twist 0."""
    if matching.crosscuts:
        outer_labels, outer_cuts = _side_layout(matching.cells, "outer")
        inner_labels, inner_cuts = _side_layout(matching.cells, "inner")
        chords = []
        for i in range(matching.crosscuts):
            chords.append(
                Chord.make(KIND_CROSSCUT, ("outer", outer_cuts[i]), ("inner", inner_cuts[i]))
            )
        chords.extend(_stack_chords("outer", KIND_OUTER, outer_labels, 0, len(outer_labels)))
        chords.extend(_stack_chords("inner", KIND_INNER, inner_labels, 0, len(inner_labels)))
        return EndpointDiagram(outer_labels, inner_labels, frozenset(chords), twist=0)
    outer_word = matching.outer_necklace.word
    inner_word = matching.inner_necklace.word
    outer_labels = tuple(LABEL_LEFT if ch == "L" else LABEL_RIGHT for ch in outer_word)
    inner_labels = tuple(LABEL_LEFT if ch == "L" else LABEL_RIGHT for ch in inner_word)
    chords = _necklace_chords("outer", KIND_OUTER, outer_word, "L")
    chords += _necklace_chords("inner", KIND_INNER, inner_word, "L")
    return EndpointDiagram(outer_labels, inner_labels, frozenset(chords), twist=0)


def _gap_words_from_labels(labels: Sequence[str], cuts: Sequence[int]) -> list[str]:
    size = len(labels)
    k = len(cuts)
    words = []
    for i in range(k):
        start = cuts[i]
        span = (cuts[(i + 1) % k] - start - 1) % size if k > 1 else size - 1
        letters = []
        pos = start
        for _ in range(span):
            pos = pos + 1 if pos + 1 < size else 0
            letters.append("U" if labels[pos] == LABEL_LEFT else "D")
        words.append("".join(letters))
    return words


def validate_diagram(diagram: EndpointDiagram) -> list[str]:
    """Check an endpoint diagram; returns a list of violations, empty when valid."""
    violations: list[str] = []
    valid_labels = {LABEL_CROSSCUT, LABEL_LEFT, LABEL_RIGHT}
    for side, labels in (("outer", diagram.outer_labels), ("inner", diagram.inner_labels)):
        bad = set(labels) - valid_labels
        if bad:
            violations.append(f"alphabet: unknown {side} labels {sorted(bad)}")
    if violations:
        return violations
    outer_cuts = [i for i, lab in enumerate(diagram.outer_labels) if lab == LABEL_CROSSCUT]
    inner_cuts = [i for i, lab in enumerate(diagram.inner_labels) if lab == LABEL_CROSSCUT]
    if len(outer_cuts) != len(inner_cuts):
        violations.append(
            f"shape: {len(outer_cuts)} outer cross-cut endpoints versus {len(inner_cuts)} inner"
        )
        return violations
    k = len(outer_cuts)
    for side, labels in (("outer", diagram.outer_labels), ("inner", diagram.inner_labels)):
        lefts = sum(1 for lab in labels if lab == LABEL_LEFT)
        rights = sum(1 for lab in labels if lab == LABEL_RIGHT)
        if lefts != rights:
            violations.append(f"shape: unbalanced half-circle endpoints on {side} boundary")
    if violations:
        return violations

    # Half-circle chords are forced by the labels; rebuild and compare.
    expected: set[Chord] = set()
    if k:
        # Within each gap the pairing is plain stack matching.
        for side, labels, cuts, kind in (
            ("outer", diagram.outer_labels, outer_cuts, KIND_OUTER),
            ("inner", diagram.inner_labels, inner_cuts, KIND_INNER),
        ):
            size = len(labels)
            stack: list[int] = []
            order = []
            for i in range(k):
                start = cuts[i]
                span = (cuts[(i + 1) % k] - start - 1) % size if k > 1 else size - 1
                pos = start
                segment = []
                for _ in range(span):
                    pos = pos + 1 if pos + 1 < size else 0
                    segment.append(pos)
                order.append(segment)
            for segment in order:
                stack.clear()
                for pos in segment:
                    if labels[pos] == LABEL_LEFT:
                        stack.append(pos)
                    else:
                        if not stack:
                            violations.append(
                                f"Dyck prefix: unmatched right endpoint at {side} position {pos}"
                            )
                            return violations
                        expected.add(Chord.make(kind, (side, stack.pop()), (side, pos)))
                if stack:
                    violations.append(
                        f"Dyck balance: unmatched left endpoint at {side} position {stack[-1]}"
                    )
                    return violations
    else:
        for side, labels, kind in (
            ("outer", diagram.outer_labels, KIND_OUTER),
            ("inner", diagram.inner_labels, KIND_INNER),
        ):
            word = "".join("L" if lab == LABEL_LEFT else "R" for lab in labels)
            expected.update(_necklace_chords(side, kind, word, "L"))

    given_half = {c for c in diagram.chords if c.kind != KIND_CROSSCUT}
    if given_half != expected:
        violations.append("chords: half-circle chords disagree with the labels")

    cut_chords = [c for c in diagram.chords if c.kind == KIND_CROSSCUT]
    if len(cut_chords) != k:
        violations.append(f"shape: expected {k} cross-cut chords, found {len(cut_chords)}")
        return violations
    if k:
        offsets = set()
        seen_out = set()
        seen_in = set()
        for chord in cut_chords:
            ends = {chord.a[0]: chord.a[1], chord.b[0]: chord.b[1]}
            if set(ends) != {"outer", "inner"}:
                violations.append(f"chords: cross-cut chord {chord} must join the two boundaries")
                return violations
            if ends["outer"] not in outer_cuts or ends["inner"] not in inner_cuts:
                violations.append(f"chords: cross-cut chord {chord} misses a cross-cut endpoint")
                return violations
            oi = outer_cuts.index(ends["outer"])
            ii = inner_cuts.index(ends["inner"])
            seen_out.add(oi)
            seen_in.add(ii)
            offsets.add((ii - oi) % k)
        if len(seen_out) != k or len(seen_in) != k:
            violations.append("chords: cross-cut endpoints are not matched bijectively")
        elif len(offsets) != 1:
            violations.append(f"twist: cross-cut offsets {sorted(offsets)} are not uniform")
        elif diagram.twist % k != next(iter(offsets)):
            violations.append(
                f"twist: recorded twist {diagram.twist} disagrees with chords {sorted(offsets)}"
            )
    elif diagram.twist != 0:
        violations.append("twist: nonzero twist recorded without cross-cuts")
    return violations


def compress(diagram: EndpointDiagram) -> AnnularMatching:
    """Collapse an endpoint diagram back to its canonical matching.

    Inverse of endpoints(); also accepts valid diagrams drawn at a nonzero
    twist or rotation, which collapse to the same canonical form.
    """
    violations = validate_diagram(diagram)
    if violations:
        raise ValueError("invalid endpoint diagram: " + "; ".join(violations))
    outer_cuts = [i for i, lab in enumerate(diagram.outer_labels) if lab == LABEL_CROSSCUT]
    inner_cuts = [i for i, lab in enumerate(diagram.inner_labels) if lab == LABEL_CROSSCUT]
    k = len(outer_cuts)
    if k == 0:
        outer_word = "".join(
            "L" if lab == LABEL_LEFT else "R" for lab in diagram.outer_labels
        )
        inner_word = "".join(
            "L" if lab == LABEL_LEFT else "R" for lab in diagram.inner_labels
        )
        return AnnularMatching.from_necklaces(outer_word, inner_word)
    outer_gaps = _gap_words_from_labels(diagram.outer_labels, outer_cuts)
    inner_gaps = _gap_words_from_labels(diagram.inner_labels, inner_cuts)
    twist = None
    for chord in diagram.chords:
        if chord.kind == KIND_CROSSCUT:
            ends = {chord.a[0]: chord.a[1], chord.b[0]: chord.b[1]}
            twist = (inner_cuts.index(ends["inner"]) - outer_cuts.index(ends["outer"])) % k
            break
    cells = tuple(
        GapCell(outer_gaps[i], inner_gaps[(i + twist) % k]) for i in range(k)
    )
    return AnnularMatching.from_cells(cells)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _dyck_violations(word: str, where: str) -> list[str]:
    violations = []
    extra = set(word) - {"U", "D"}
    if extra:
        violations.append(f"alphabet: {where} uses letters {sorted(extra)}")
        return violations
    depth = 0
    for ch in word:
        depth += 1 if ch == "U" else -1
        if depth < 0:
            violations.append(f"Dyck prefix: {where} dips below zero")
            return violations
    if depth != 0:
        violations.append(f"Dyck balance: {where} has {depth} unmatched U")
    return violations


def validate(matching: AnnularMatching) -> list[str]:
    """Check the canonical-form invariants; returns violations, empty when valid."""
    violations: list[str] = []
    k = matching.crosscuts
    if k < 0:
        return [f"shape: negative cross-cut count {k}"]
    if k:
        if matching.outer_necklace is not None or matching.inner_necklace is not None:
            violations.append("shape: cross-cut matching carries boundary necklaces")
        if len(matching.cells) != k:
            violations.append(
                f"shape: {k} cross-cuts but {len(matching.cells)} cells"
            )
            return violations
        for i, cell in enumerate(matching.cells):
            violations.extend(_dyck_violations(cell.outer, f"cell {i} outer word"))
            violations.extend(_dyck_violations(cell.inner, f"cell {i} inner word"))
        if not violations and matching.cells != _canonical_cells(matching.cells):
            violations.append("not canonical: cell sequence is not its least rotation")
        return violations
    if matching.cells:
        violations.append("shape: cells present without cross-cuts")
    if matching.outer_necklace is None or matching.inner_necklace is None:
        violations.append("shape: matching without cross-cuts needs both necklaces")
        return violations
    for side, neck in (("outer", matching.outer_necklace), ("inner", matching.inner_necklace)):
        word = neck.word
        extra = set(word) - {"L", "R"}
        if extra:
            violations.append(f"alphabet: {side} necklace uses letters {sorted(extra)}")
            continue
        if word.count("L") != word.count("R"):
            violations.append(f"shape: {side} necklace is unbalanced")
        if not neck.is_canonical():
            violations.append(f"not canonical: {side} necklace is not its least rotation")
    return violations
