"""Deterministic SVG output for the triangle figures.

Exact facet-frame coordinates are mapped to the equilateral picture
(x, y·√3/2), flipped so the top edge is at the top, then printed with a fixed
number of decimals. Identical input gives byte-identical output.
"""
from __future__ import annotations

from decimal import Decimal, localcontext

from .core import QuadRat
from .errors import DomainError
from .geometry import outer_triangle, row

SCENES = ("gd", "gt", "nd", "projection")
DIGITS = 12
SCALE = 400
MARGIN = 10
FILL = {"up": "#d9b44a", "down": "#8c6d1f"}
ND_FILL = {"up": "#9aa7b8", "down": "#4d5a6b"}


def _dec(x: QuadRat, sqrt5: Decimal) -> Decimal:
    return Decimal(x.p.numerator) / Decimal(x.p.denominator) + Decimal(x.q.numerator) / Decimal(x.q.denominator) * sqrt5


def _fmt(d: Decimal) -> str:
    s = str(d.quantize(Decimal(1).scaleb(-DIGITS)))
    return "0." + "0" * DIGITS if s.lstrip("-").strip("0.") == "" else s


def render_svg(scene: str, depth: int, perspective: bool = False) -> str:
    if scene not in SCENES:
        raise DomainError(f"unknown scene {scene!r}")
    if depth < 1:
        raise DomainError("depth must be at least 1")
    kind = "gd" if scene == "projection" else scene
    perspective = perspective or scene == "projection"
    facets = [f for n in range(1, depth + 1) for f in row(kind, n)]

    with localcontext() as ctx:
        ctx.prec = 50
        sqrt5 = Decimal(5).sqrt()
        k = Decimal(3).sqrt() / 2

        def pt(p):
            return _dec(p[0], sqrt5), _dec(p[1], sqrt5) * k

        polys = [(f, [pt(v) for v in f.vertices()]) for f in facets]
        frame = [pt(v) for v in outer_triangle(kind)] if kind != "gt" else []
        everything = [q for _, ps in polys for q in ps] + frame
        xmin = min(q[0] for q in everything)
        xmax = max(q[0] for q in everything)
        ymin = min(q[1] for q in everything)
        ymax = max(q[1] for q in everything)
        scale = Decimal(SCALE)

        def sx(x):
            return _fmt((x - xmin) * scale + MARGIN)

        def sy(y):
            return _fmt((ymax - y) * scale + MARGIN)

        width = _fmt((xmax - xmin) * scale + 2 * MARGIN)
        height = _fmt((ymax - ymin) * scale + 2 * MARGIN)
        fill = ND_FILL if kind == "nd" else FILL
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f"<!-- {scene} depth {depth} -->",
        ]
        if frame:
            pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in frame)
            out.append(f'<polygon points="{pts}" fill="none" stroke="#000000" stroke-width="1"/>')
        for f, ps in polys:
            pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in ps)
            out.append(
                f'<polygon points="{pts}" fill="{fill[f.orientation]}" stroke="#000000" '
                f'stroke-width="0.25" data-row="{f.row}" data-index="{f.index}"/>'
            )
        if perspective and frame:
            # lines from the two top corners through every up-facet base vertex
            _, left, right = frame
            for f, ps in polys:
                if f.orientation != "up":
                    continue
                for vx, vy in ps[:2]:
                    for cx, cy in (left, right):
                        out.append(
                            f'<line x1="{sx(cx)}" y1="{sy(cy)}" x2="{sx(vx)}" y2="{sy(vy)}" '
                            'stroke="#c0392b" stroke-width="0.2"/>'
                        )
        out.append("</svg>")
    return "\n".join(out) + "\n"
