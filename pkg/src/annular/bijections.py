"""Constructive correspondences for annulus matchings.

Each map here realizes a counting identity as an explicit bijection:
matchings without inner half-circles correspond to binary necklaces, single
cross-cut matchings to Dyck words, matchings without any cross-cuts to
marked plane trees, and matchings with k cross-cuts to connected unicyclic
graphs carrying a rotation system and an oriented k-cycle.  Every map comes
with its inverse, and the pair is round-trip tested over exhaustive
enumerations.

Graphs use half-edge rotation systems: edge e = (tail, head) contributes
half-edge (e, 0) at its tail and (e, 1) at its head, and each vertex lists
its incident half-edges in counter-clockwise order.  A graph is marked
either by a distinguished root vertex (tree form) or by an oriented cycle
(unicyclic form); isomorphism respects the marker.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .model import (
    AnnularMatching,
    GapCell,
    Necklace,
    boundary_decomposition,
    is_dyck_word,
)

__all__ = [
    "GRAPH_SCHEMA",
    "PlanarGraph",
    "canonical_key",
    "from_graph",
    "from_linear",
    "from_necklace",
    "graph_from_json",
    "graph_to_json",
    "is_isomorphic",
    "reflect",
    "split",
    "to_graph",
    "to_linear",
    "to_necklace",
    "to_tree",
    "validate_graph",
]


# ---------------------------------------------------------------------------
# Necklaces
# ---------------------------------------------------------------------------


def to_necklace(matching: AnnularMatching) -> Necklace:
    """Map a matching without inner half-circles to a binary necklace.

    Reading the outer boundary counter-clockwise: a white bead at every
    half-circle left endpoint, a black bead at every right endpoint and at
    every cross-cut endpoint.  The result has n white and n + k black beads.
    """
    if matching.m != 0:
        raise ValueError("matching has inner half-circles, no necklace form")
    if matching.crosscuts:
        letters = []
        for cell in matching.cells:
            letters.append("B")
            for ch in cell.outer:
                letters.append("W" if ch == "U" else "B")
        word = "".join(letters)
    else:
        word = matching.outer_necklace.word.replace("L", "W").replace("R", "B")
    return Necklace.from_word(word)


def from_necklace(neck: Necklace) -> AnnularMatching:
    """Inverse of to_necklace.

    Every white bead is matched to the nearest free black bead
    counter-clockwise, wrapping as often as needed; black beads left over
    become cross-cut endpoints.
    """
    word = neck.word
    stray = set(word) - {"B", "W"}
    if stray:
        raise ValueError(f"necklace beads must be B or W, got {sorted(stray)}")
    whites = [i for i, ch in enumerate(word) if ch == "W"]
    blacks = len(word) - len(whites)
    if len(whites) > blacks:
        raise ValueError("more white beads than black: no matching exists")
    if len(whites) == blacks:
        return AnnularMatching.from_necklaces(
            word.replace("W", "L").replace("B", "R"), ""
        )
    _, gaps, _ = boundary_decomposition(len(word), whites)
    return AnnularMatching.from_cells(GapCell(gap, "") for gap in gaps)


# ---------------------------------------------------------------------------
# Linear matchings
# ---------------------------------------------------------------------------


def to_linear(matching: AnnularMatching) -> str:
    """Cut a one-cross-cut matching open into a Dyck word.

    The cross-cut marks where to cut the outer circle; the single gap's
    outer word is the linear matching.
    """
    if matching.crosscuts != 1:
        raise ValueError(f"need exactly one cross-cut, matching has {matching.crosscuts}")
    if matching.m != 0:
        raise ValueError("matching has inner half-circles, no linear form")
    return matching.cells[0].outer


def from_linear(word: str) -> AnnularMatching:
    """Wrap a Dyck word into the single gap of a one-cross-cut matching."""
    if not is_dyck_word(word):
        raise ValueError(f"not a Dyck word: {word!r}")
    return AnnularMatching.from_cells([GapCell(word, "")])


# ---------------------------------------------------------------------------
# Reflection and splitting
# ---------------------------------------------------------------------------


def reflect(matching: AnnularMatching) -> AnnularMatching:
    """Swap the roles of the two boundary circles; an involution."""
    if matching.crosscuts:
        return AnnularMatching.from_cells(
            GapCell(cell.inner, cell.outer) for cell in matching.cells
        )
    return AnnularMatching.from_necklaces(
        matching.inner_necklace.word, matching.outer_necklace.word
    )


def split(matching: AnnularMatching) -> tuple[AnnularMatching, AnnularMatching]:
    """Erase the inner content in the first coordinate, the outer in the second.

    Injective when the matching has no inner half-circles, no cross-cuts,
    or a single cross-cut; many-to-one in general.
    """
    if matching.crosscuts:
        outer_part = AnnularMatching.from_cells(
            GapCell(cell.outer, "") for cell in matching.cells
        )
        inner_part = AnnularMatching.from_cells(
            GapCell("", cell.inner) for cell in matching.cells
        )
    else:
        outer_part = AnnularMatching.from_necklaces(matching.outer_necklace.word, "")
        inner_part = AnnularMatching.from_necklaces("", matching.inner_necklace.word)
    return outer_part, inner_part


# ---------------------------------------------------------------------------
# Marked planar graphs
# ---------------------------------------------------------------------------

GRAPH_SCHEMA = "annular-graph/v1"


@dataclass(frozen=True)
class PlanarGraph:
    """Connected graph with a rotation system and one marker.

    edges[e] = (tail, head); half-edge (e, 0) sits at the tail, (e, 1) at
    the head.  rotations[v] lists v's half-edges counter-clockwise.  Exactly
    one marker is set: root (a distinguished vertex, tree form) or an
    oriented cycle given by cycle_vertices and cycle_edges, where
    cycle_edges[i] runs from cycle_vertices[i] to cycle_vertices[i+1],
    cyclically.
    """

    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[tuple[int, int], ...], ...]
    root: int | None = None
    cycle_vertices: tuple[int, ...] = ()
    cycle_edges: tuple[int, ...] = ()

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def validate_graph(graph: PlanarGraph) -> list[str]:
    """Check the PlanarGraph invariants; returns violations, empty when valid."""
    problems: list[str] = []
    v_count = len(graph.rotations)
    if v_count == 0:
        return ["graph has no vertices"]
    for e, pair in enumerate(graph.edges):
        if len(pair) != 2 or not all(0 <= v < v_count for v in pair):
            return [f"edge {e} endpoints {pair} out of range"]
    placed: set[tuple[int, int]] = set()
    for v, rot in enumerate(graph.rotations):
        for he in rot:
            if len(he) != 2 or not (0 <= he[0] < len(graph.edges)) or he[1] not in (0, 1):
                return [f"vertex {v} rotation names unknown half-edge {he}"]
            if graph.edges[he[0]][he[1]] != v:
                problems.append(f"half-edge {he} listed at vertex {v}, belongs elsewhere")
            if he in placed:
                problems.append(f"half-edge {he} appears twice")
            placed.add(he)
    if len(placed) != 2 * len(graph.edges):
        problems.append("rotation system does not place every half-edge")
    if problems:
        return problems

    adjacency: list[list[int]] = [[] for _ in range(v_count)]
    for u, v in graph.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    reached = {0}
    frontier = [0]
    while frontier:
        here = frontier.pop()
        for there in adjacency[here]:
            if there not in reached:
                reached.add(there)
                frontier.append(there)
    if len(reached) != v_count:
        problems.append("graph is disconnected")

    has_cycle_marker = bool(graph.cycle_vertices) or bool(graph.cycle_edges)
    if (graph.root is None) and not has_cycle_marker:
        problems.append("no marker: need a distinguished vertex or an oriented cycle")
        return problems
    if (graph.root is not None) and has_cycle_marker:
        problems.append("both markers set: distinguished vertex and oriented cycle")
        return problems
    if graph.root is not None:
        if not 0 <= graph.root < v_count:
            problems.append(f"distinguished vertex {graph.root} out of range")
        if len(graph.edges) != v_count - 1:
            problems.append(
                f"marked tree needs {v_count - 1} edges, found {len(graph.edges)}"
            )
        return problems
    k = len(graph.cycle_vertices)
    if k == 0 or len(graph.cycle_edges) != k:
        problems.append("oriented cycle marker malformed")
        return problems
    if len(graph.edges) != v_count:
        problems.append(
            f"unicyclic graph needs exactly {v_count} edges, found {len(graph.edges)}; "
            "the marked cycle would not be the only cycle"
        )
    if len(set(graph.cycle_vertices)) != k or len(set(graph.cycle_edges)) != k:
        problems.append("oriented cycle repeats a vertex or edge")
        return problems
    for i in range(k):
        e = graph.cycle_edges[i]
        want = (graph.cycle_vertices[i], graph.cycle_vertices[(i + 1) % k])
        if graph.edges[e] != want:
            problems.append(
                f"cycle edge {e} joins {graph.edges[e]}, marker expects {want}"
            )
    return problems


class _GraphBuilder:
    def __init__(self, base_vertices: int):
        self.edges: list[tuple[int, int]] = []
        self.rot: dict[int, list[tuple[int, int]]] = {
            v: [] for v in range(base_vertices)
        }
        self.next_vertex = base_vertices

    def attach_forest(self, base: int, word: str) -> list[tuple[int, int]]:
        """Grow the ordered forest of a Dyck word under base; returns root half-edges."""
        roots: list[tuple[int, int]] = []
        stack = [base]
        for ch in word:
            if ch == "U":
                child = self.next_vertex
                self.next_vertex = child + 1
                self.rot[child] = []
                eid = len(self.edges)
                self.edges.append((stack[-1], child))
                if len(stack) == 1:
                    roots.append((eid, 0))
                else:
                    self.rot[stack[-1]].append((eid, 0))
                self.rot[child].append((eid, 1))
                stack.append(child)
            else:
                stack.pop()
        return roots

    def freeze(
        self,
        root: int | None = None,
        cycle_vertices: tuple[int, ...] = (),
        cycle_edges: tuple[int, ...] = (),
    ) -> PlanarGraph:
        rotations = tuple(tuple(self.rot[v]) for v in range(self.next_vertex))
        return PlanarGraph(tuple(self.edges), rotations, root, cycle_vertices, cycle_edges)


def _balanced_anchor(word: str) -> int:
    """Rotation index after which an L/R word reads as a valid Dyck word."""
    depth = 0
    low = 0
    anchor = 0
    for i, ch in enumerate(word):
        depth += 1 if ch == "L" else -1
        if depth < low:
            low = depth
            anchor = i + 1
    return anchor % len(word) if word else 0


def to_tree(matching: AnnularMatching) -> PlanarGraph:
    """Map a matching whose chords all sit on the outer boundary to a marked tree.

    Regions become vertices; the region touching the inner boundary is the
    distinguished root, and each half-circle becomes the edge between the
    regions on its two sides.
    """
    if matching.crosscuts or matching.m:
        raise ValueError("only matchings in some Ann_0(2n, 0) have a tree form")
    word = matching.outer_necklace.word
    builder = _GraphBuilder(1)
    if word:
        a = _balanced_anchor(word)
        linear = (word[a:] + word[:a]).replace("L", "U").replace("R", "D")
        builder.rot[0] = builder.attach_forest(0, linear)
    return builder.freeze(root=0)


def to_graph(matching: AnnularMatching) -> PlanarGraph:
    """Map a matching to its marked planar graph.

    With k >= 1 cross-cuts: the cross-cuts collapse to an oriented k-cycle,
    one vertex per gap; each gap's outer word becomes an ordered forest
    attached inside the cycle and its inner word a forest outside, so the
    graph has n edges within the cycle and m outside.  "Inside" at a cycle
    vertex means strictly between the outgoing and the incoming cycle
    half-edge in counter-clockwise order.

    Without cross-cuts only the all-outer case maps (tree form, see
    to_tree); a matching with k = 0 and inner half-circles has no connected
    graph image and is rejected.
    """
    k = matching.crosscuts
    if k == 0:
        if matching.m != 0:
            raise ValueError(
                "matchings without cross-cuts but with inner half-circles have no graph form"
            )
        return to_tree(matching)
    builder = _GraphBuilder(k)
    for j in range(k):
        builder.edges.append((j, (j + 1) % k))
    for i, cell in enumerate(matching.cells):
        in_he = ((i - 1) % k, 1)
        out_he = (i, 0)
        exterior = builder.attach_forest(i, cell.inner)
        interior = builder.attach_forest(i, cell.outer)
        builder.rot[i] = [in_he, *exterior, out_he, *interior]
    return builder.freeze(
        cycle_vertices=tuple(range(k)), cycle_edges=tuple(range(k))
    )


def _subtree_word(graph: PlanarGraph, he: tuple[int, int]) -> str:
    eid, end = he
    child = graph.edges[eid][1 - end]
    parent_he = (eid, 1 - end)
    rot = graph.rotations[child]
    i = rot.index(parent_he)
    parts = ["U"]
    for nxt in rot[i + 1 :] + rot[:i]:
        parts.append(_subtree_word(graph, nxt))
    parts.append("D")
    return "".join(parts)


def _extract_cells(graph: PlanarGraph) -> list[GapCell]:
    k = len(graph.cycle_vertices)
    cells: list[GapCell] = []
    for i, v in enumerate(graph.cycle_vertices):
        in_he = (graph.cycle_edges[(i - 1) % k], 1)
        out_he = (graph.cycle_edges[i], 0)
        rot = graph.rotations[v]
        start = rot.index(in_he)
        ordered = rot[start:] + rot[:start]
        cut = ordered.index(out_he)
        exterior = ordered[1:cut]
        interior = ordered[cut + 1 :]
        outer_word = "".join(_subtree_word(graph, he) for he in interior)
        inner_word = "".join(_subtree_word(graph, he) for he in exterior)
        cells.append(GapCell(outer_word, inner_word))
    return cells


def from_graph(graph: PlanarGraph) -> AnnularMatching:
    """Inverse of to_graph / to_tree; rejects malformed graphs."""
    problems = validate_graph(graph)
    if problems:
        raise ValueError("malformed graph: " + "; ".join(problems))
    if graph.root is not None:
        words = [_subtree_word(graph, he) for he in graph.rotations[graph.root]]
        boundary = "".join(words).replace("U", "L").replace("D", "R")
        return AnnularMatching.from_necklaces(boundary, "")
    return AnnularMatching.from_cells(_extract_cells(graph))


def canonical_key(graph: PlanarGraph) -> tuple[str, str]:
    """A key equal for two graphs exactly when they are isomorphic.

    Isomorphism means a relabeling that preserves rotations and the marker,
    with trees compared up to cyclic re-rooting of the rotation at the
    distinguished vertex and cycles up to cyclic shift of the marker.
    """
    kind = "tree" if graph.root is not None else "unicyclic"
    return kind, from_graph(graph).encode()


def is_isomorphic(first: PlanarGraph, second: PlanarGraph) -> bool:
    return canonical_key(first) == canonical_key(second)


def graph_to_json(graph: PlanarGraph) -> str:
    """Serialize to the documented JSON schema (deterministic output)."""
    payload = {
        "schema": GRAPH_SCHEMA,
        "edges": [list(e) for e in graph.edges],
        "rotations": [[list(h) for h in rot] for rot in graph.rotations],
        "root": graph.root,
        "cycle_vertices": list(graph.cycle_vertices),
        "cycle_edges": list(graph.cycle_edges),
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def graph_from_json(text: str) -> PlanarGraph:
    """Parse the JSON schema back into a validated PlanarGraph."""
    payload = json.loads(text)
    if payload.get("schema") != GRAPH_SCHEMA:
        raise ValueError(f"unknown graph schema {payload.get('schema')!r}")
    graph = PlanarGraph(
        edges=tuple((int(u), int(v)) for u, v in payload["edges"]),
        rotations=tuple(
            tuple((int(e), int(end)) for e, end in rot) for rot in payload["rotations"]
        ),
        root=None if payload["root"] is None else int(payload["root"]),
        cycle_vertices=tuple(int(v) for v in payload["cycle_vertices"]),
        cycle_edges=tuple(int(e) for e in payload["cycle_edges"]),
    )
    problems = validate_graph(graph)
    if problems:
        raise ValueError("malformed graph: " + "; ".join(problems))
    return graph
