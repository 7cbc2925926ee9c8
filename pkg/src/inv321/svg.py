"""Deterministic SVG drawings of involution plots and lattice paths."""
from __future__ import annotations

from .paths import DOWN, FLAT, UP, LatticePath
from .perm import Permutation

CELL = 24
PAD = 16


def _doc(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def involution_svg(p: Permutation) -> str:
    """Points (i, p(i)) joined left to right, over the main diagonal."""
    n = len(p)
    size = 2 * PAD + (n - 1) * CELL

    def xy(i: int, v: int) -> tuple[int, int]:
        return PAD + (i - 1) * CELL, size - PAD - (v - 1) * CELL

    x0, y0 = xy(1, 1)
    x1, y1 = xy(n, n)
    body = [
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#999" stroke-dasharray="4 4"/>',
    ]
    pts = " ".join("%d,%d" % xy(i, p(i)) for i in range(1, n + 1))
    body.append(f'<polyline points="{pts}" fill="none" stroke="#333"/>')
    for i in range(1, n + 1):
        cx, cy = xy(i, p(i))
        body.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="#000"/>')
    return _doc(size, size, body)


def path_svg(path: LatticePath) -> str:
    """Step polyline with the label of every down step above 1 written beside it."""
    heights = path.heights()
    top = max(heights)
    width = 2 * PAD + len(path) * CELL
    height = 2 * PAD + max(top, 1) * CELL

    def xy(k: int, h: int) -> tuple[int, int]:
        return PAD + k * CELL, height - PAD - h * CELL

    body = []
    x0, y0 = xy(0, 0)
    x1, _ = xy(len(path), 0)
    body.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#999"/>')
    pts = " ".join("%d,%d" % xy(k, h) for k, h in enumerate(heights))
    body.append(f'<polyline points="{pts}" fill="none" stroke="#000"/>')
    labels = iter(path.down_labels())
    for k, step in enumerate(path.steps):
        if step != DOWN:
            assert step in (UP, FLAT)
            continue
        lab = next(labels)
        if lab != 1:
            x, y = xy(k, heights[k])
            body.append(f'<text x="{x + CELL // 2 + 4}" y="{y + CELL // 2}" font-size="10">{lab}</text>')
    return _doc(width, height, body)
