"""Exact enumeration of non-crossing matchings on an annulus.

The package models matchings of boundary endpoints on an annulus up to
rotation, counts them with closed formulas backed by brute-force oracles,
enumerates canonical representatives, converts them to necklaces, Dyck
words, and marked planar graphs, and renders them as SVG.  See the README
for the command-line surface.
"""

from .bijections import (
    PlanarGraph,
    canonical_key,
    from_graph,
    from_linear,
    from_necklace,
    graph_from_json,
    graph_to_json,
    is_isomorphic,
    reflect,
    split,
    to_graph,
    to_linear,
    to_necklace,
    to_tree,
    validate_graph,
)
from .counting import (
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
from .enumeration import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    enumerate_circular,
    enumerate_matchings,
    gen_compositions,
    gen_dyck,
    oracle_count,
    state_oracle_count,
)
from .errors import BudgetExceededError, CodeParseError, ReferenceMismatchError
from .model import (
    AnnularMatching,
    Chord,
    EndpointDiagram,
    GapCell,
    Necklace,
    compress,
    endpoints,
    matching_from_leftset,
    parse_code,
    validate,
)
from .refdata import (
    ALLOWED_SEQUENCES,
    ReferenceSequence,
    bundled_sequence,
    fetch_sequence,
)
from .render import render_svg
from .tables import CountTable, table_ann, table_maximal, table_total

__all__ = [
    "ALLOWED_SEQUENCES",
    "AnnularMatching",
    "BudgetExceededError",
    "Chord",
    "CodeParseError",
    "CountQuery",
    "CountTable",
    "DEFAULT_BUDGET",
    "EndpointDiagram",
    "EnumerationBudget",
    "GapCell",
    "Necklace",
    "PlanarGraph",
    "ReferenceMismatchError",
    "ReferenceSequence",
    "bundled_sequence",
    "canonical_key",
    "compress",
    "count_ann",
    "count_circular",
    "count_endpoints",
    "count_fixed_crosscuts",
    "count_maximal",
    "count_maximal_prime",
    "count_necklace",
    "count_total",
    "endpoints",
    "enumerate_circular",
    "enumerate_matchings",
    "fetch_sequence",
    "from_graph",
    "from_linear",
    "from_necklace",
    "gen_compositions",
    "gen_dyck",
    "graph_from_json",
    "graph_to_json",
    "is_isomorphic",
    "matching_from_leftset",
    "oracle_count",
    "parse_code",
    "reflect",
    "render_svg",
    "split",
    "state_oracle_count",
    "table_ann",
    "table_maximal",
    "table_total",
    "to_graph",
    "to_linear",
    "to_necklace",
    "to_tree",
    "validate",
    "validate_graph",
]
