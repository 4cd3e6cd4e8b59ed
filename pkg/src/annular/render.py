"""Deterministic SVG rendering of annulus matchings.

The picture shows two concentric circles with equally spaced endpoints,
straight segments for cross-cuts, and quadratic arcs for half-circles
(outer arcs bow inward, inner arcs bow outward).  Layout depends only on
the canonical code, which is embedded verbatim in the document's <desc>
element, so a rendering can be traced back to the matching it shows.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .model import (
    KIND_CROSSCUT,
    KIND_OUTER,
    LABEL_LEFT,
    AnnularMatching,
    Chord,
    endpoints,
)

__all__ = ["render_svg"]

_SIZE = 420.0
_CENTER = _SIZE / 2.0
_OUTER_RADIUS = 180.0
_INNER_RADIUS = 72.0


def _point(radius: float, count: int, index: float) -> tuple[float, float]:
    # index 0 sits at the top; increasing indices run counter-clockwise
    angle = math.pi / 2.0 + 2.0 * math.pi * index / count
    return (
        _CENTER + radius * math.cos(angle),
        _CENTER - radius * math.sin(angle),
    )


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _half_circle_path(chord: Chord, count: int, opener: int) -> str:
    """Quadratic arc between two same-boundary endpoints.

    The arc spans counter-clockwise from the chord's opening endpoint to
    its closing one; its control point sits at the angular midpoint of that
    span, pushed inward (outer boundary) or outward (inner boundary) in
    proportion to the span.
    """
    (_, a), (_, b) = chord.a, chord.b
    closer = b if opener == a else a
    span = (closer - opener) % count or count
    mid = opener + span / 2.0
    fraction = span / count
    if chord.kind == KIND_OUTER:
        radius = _OUTER_RADIUS
        control_radius = max(radius * (1.0 - 1.5 * fraction), _INNER_RADIUS * 0.4)
    else:
        radius = _INNER_RADIUS
        control_radius = min(
            radius + (_OUTER_RADIUS - radius) * 1.5 * fraction,
            _OUTER_RADIUS * 0.92,
        )
    x1, y1 = _point(radius, count, opener)
    x2, y2 = _point(radius, count, closer)
    cx, cy = _point(control_radius, count, mid)
    return (
        f'<path d="M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cx)} {_fmt(cy)} '
        f'{_fmt(x2)} {_fmt(y2)}" fill="none" stroke="#222222" stroke-width="1.6"/>'
    )


def render_svg(matching: AnnularMatching) -> str:
    """Render a matching as a standalone SVG 1.1 document."""
    diagram = endpoints(matching)
    outer_count = len(diagram.outer_labels)
    inner_count = len(diagram.inner_labels)
    openers = {
        "outer": {
            i for i, lab in enumerate(diagram.outer_labels) if lab == LABEL_LEFT
        },
        "inner": {
            i for i, lab in enumerate(diagram.inner_labels) if lab == LABEL_LEFT
        },
    }

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(_SIZE)}" height="{_fmt(_SIZE)}" '
        f'viewBox="0 0 {_fmt(_SIZE)} {_fmt(_SIZE)}">',
        f"<desc>{escape(matching.encode())}</desc>",
        f'<circle cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" r="{_fmt(_OUTER_RADIUS)}" '
        'fill="none" stroke="#999999" stroke-width="1"/>',
        f'<circle cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" r="{_fmt(_INNER_RADIUS)}" '
        'fill="none" stroke="#999999" stroke-width="1"/>',
    ]

    for chord in sorted(diagram.chords):
        if chord.kind == KIND_CROSSCUT:
            ends = dict((side, idx) for side, idx in (chord.a, chord.b))
            x1, y1 = _point(_OUTER_RADIUS, outer_count, ends["outer"])
            x2, y2 = _point(_INNER_RADIUS, inner_count, ends["inner"])
            parts.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                'stroke="#222222" stroke-width="1.6"/>'
            )
        else:
            side = chord.a[0]
            count = outer_count if side == "outer" else inner_count
            pair = {chord.a[1], chord.b[1]}
            opener = next(iter(pair & openers[side]))
            parts.append(_half_circle_path(chord, count, opener))

    for count, radius in ((outer_count, _OUTER_RADIUS), (inner_count, _INNER_RADIUS)):
        for i in range(count):
            x, y = _point(radius, count, i)
            parts.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#222222"/>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
