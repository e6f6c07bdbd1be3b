"""Text and SVG pictures of an arrangement.

Lattice y grows upwards; both renderers flip it so that row 0 of the
output is the top edge of the array.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid_core import Arrangement, unit_diagonals, validate


class InvalidArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class RenderStyle:
    cell_px: int = 40
    grid_stroke: str = "black"
    diagonal_stroke: str = "red"
    show_anchors: bool = False

    def __post_init__(self):
        if self.cell_px < 8:
            raise ValueError(f"cell_px must be at least 8, got {self.cell_px}")


def _check(a: Arrangement) -> None:
    verdict = validate(a)
    if not verdict.ok:
        raise InvalidArrangementError(
            f"arrangement has {len(verdict.conflicts)} intersecting pair(s); refusing to render"
        )


def render_ascii(a: Arrangement) -> str:
    """One character per cell interior: '/' where a diagonal crosses the cell.

    Returns 2n+1 lines joined by newlines, with a trailing newline.
    """
    _check(a)
    n = a.grid.n
    rows = []
    for r in range(2 * n + 1):
        if r % 2 == 0:
            rows.append(list("+" + "-+" * n))
        else:
            rows.append(list("|" + " |" * n))
    for d in a.diagonals:
        for u in unit_diagonals(d):
            rows[2 * (n - u.y) - 1][2 * u.x + 1] = "/"
    return "\n".join("".join(row) for row in rows) + "\n"


def render_svg(a: Arrangement, style: RenderStyle = RenderStyle()) -> str:
    """SVG with one <line> per grid line and one per diagonal, anchor to tip.

    Coordinates are unshifted lattice units times cell_px; the margin lives
    in the viewBox so (0, 0) is the top-left lattice point.
    """
    _check(a)
    n = a.grid.n
    c = style.cell_px
    side = n * c
    margin = c // 2
    full = side + 2 * margin

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{full}" height="{full}" '
        f'viewBox="{-margin} {-margin} {full} {full}">',
        f'<rect x="{-margin}" y="{-margin}" width="{full}" height="{full}" fill="white"/>',
    ]
    for i in range(n + 1):
        out.append(
            f'<line class="grid" x1="{i * c}" y1="0" x2="{i * c}" y2="{side}" '
            f'stroke="{style.grid_stroke}" stroke-width="1"/>'
        )
    for i in range(n + 1):
        out.append(
            f'<line class="grid" x1="0" y1="{i * c}" x2="{side}" y2="{i * c}" '
            f'stroke="{style.grid_stroke}" stroke-width="1"/>'
        )
    for d in a.diagonals:
        x1, y1 = d.x * c, (n - d.y) * c
        x2, y2 = (d.x + d.length) * c, (n - d.y - d.length) * c
        out.append(
            f'<line class="diagonal" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{style.diagonal_stroke}" stroke-width="3"/>'
        )
    if style.show_anchors:
        r = max(c // 8, 2)
        for d in a.diagonals:
            x, y = d.x * c, (n - d.y) * c
            out.append(
                f'<rect class="anchor" x="{x - r}" y="{y - r}" width="{2 * r}" height="{2 * r}" '
                f'fill="{style.diagonal_stroke}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
