"""Tiny deterministic SVG writer for dominance drawings.

One circle per downset at its dominance coordinates on a unit grid scaled
by a pixel factor, one line per cover relation, fixed styling.  Output is
byte-stable: iteration follows coordinate order and all numbers are plain
integers.
"""

from __future__ import annotations


def dominance_svg(coords: dict, covers: list, scale: int = 24) -> str:
    """coords: downset -> (x rank, y rank), both 1-based; covers: pairs of
    downsets to join with a segment."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    side = (len(coords) + 1) * scale
    r = max(2, scale // 6)
    lines = []
    for a, b in sorted(covers, key=lambda c: (coords[c[0]], coords[c[1]])):
        (x1, y1), (x2, y2) = coords[a], coords[b]
        lines.append(
            f'<line x1="{x1 * scale}" y1="{y1 * scale}" '
            f'x2="{x2 * scale}" y2="{y2 * scale}"/>'
        )
    dots = [
        f'<circle cx="{x * scale}" cy="{y * scale}" r="{r}"/>'
        for x, y in sorted(coords.values())
    ]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {side} {side}" width="{side}" height="{side}">',
        '<g stroke="#555555" stroke-width="1">',
        *lines,
        "</g>",
        '<g fill="#111111">',
        *dots,
        "</g>",
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
