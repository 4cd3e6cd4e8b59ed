"""Count tables over parameter grids, with CSV and JSON serialization.

Three kinds of table are built here: "maximal" (matchings whose inner
endpoints all belong to cross-cuts, on a grid of (n, k)), "ann" (all
matchings by outer and inner endpoint counts), and "total" (all matchings
by total endpoint count).  CSV output leaves zero cells blank by default,
so a grid diffs cleanly against published tables; JSON always carries the
zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .counting import count_ann, count_maximal, count_total

__all__ = [
    "CountTable",
    "TABLE_SCHEMA",
    "table_ann",
    "table_maximal",
    "table_total",
]

TABLE_SCHEMA = "annular-table/v1"


@dataclass(frozen=True)
class CountTable:
    """A rectangular grid of exact counts with labeled axes."""

    kind: str
    row_label: str
    col_label: str
    row_values: tuple[int, ...]
    col_values: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]

    def cell(self, row: int, col: int) -> int:
        """Look up a cell by axis values (not positions)."""
        return self.cells[self.row_values.index(row)][self.col_values.index(col)]

    def to_csv(self, include_zeros: bool = False) -> str:
        """Render as CSV; zero cells print as blanks unless include_zeros."""

        def fmt(value: int) -> str:
            return str(value) if value or include_zeros else ""

        if self.kind == "total":
            header = [self.col_label] + [str(c) for c in self.col_values]
            data = [self.row_label] + [fmt(v) for v in self.cells[0]]
            return "\n".join([",".join(header), ",".join(data)]) + "\n"
        header = [f"{self.row_label}\\{self.col_label}"] + [
            str(c) for c in self.col_values
        ]
        lines = [",".join(header)]
        for value, row in zip(self.row_values, self.cells):
            lines.append(",".join([str(value)] + [fmt(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "schema": TABLE_SCHEMA,
            "kind": self.kind,
            "row_label": self.row_label,
            "col_label": self.col_label,
            "rows": list(self.row_values),
            "cols": list(self.col_values),
            "cells": [list(row) for row in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, payload: dict) -> "CountTable":
        if payload.get("schema") != TABLE_SCHEMA:
            raise ValueError(f"unknown table schema {payload.get('schema')!r}")
        return cls(
            kind=payload["kind"],
            row_label=payload["row_label"],
            col_label=payload["col_label"],
            row_values=tuple(int(v) for v in payload["rows"]),
            col_values=tuple(int(v) for v in payload["cols"]),
            cells=tuple(tuple(int(v) for v in row) for row in payload["cells"]),
        )


def table_maximal(
    n_range: tuple[int, int] = (0, 10), k_range: tuple[int, int] = (0, 10)
) -> CountTable:
    """Counts of matchings whose inner endpoints all belong to cross-cuts."""
    rows = tuple(range(n_range[0], n_range[1] + 1))
    cols = tuple(range(k_range[0], k_range[1] + 1))
    cells = tuple(tuple(count_maximal(n, k) for k in cols) for n in rows)
    return CountTable("maximal", "n", "k", rows, cols, cells)


def table_ann(max_endpoints: int = 12) -> CountTable:
    """All-matching counts on a grid of (outer, inner) endpoint counts."""
    axis = tuple(range(0, max_endpoints + 1))
    cells = tuple(tuple(count_ann(a, b) for b in axis) for a in axis)
    return CountTable("ann", "n", "m", axis, axis, cells)


def table_total(max_order: int = 13) -> CountTable:
    """All-matching counts by total endpoint count 2n, one row per table."""
    cols = tuple(range(0, max_order + 1))
    cells = (tuple(count_total(2 * n) for n in cols),)
    return CountTable("total", "count", "n", (0,), cols, cells)
