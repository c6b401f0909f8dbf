"""Hand-written SVG charts; fixed geometry so output is byte-stable."""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

from .homology import PersistenceInterval
from .overlap import OccurrenceEvent, OverlapMatrix

__all__ = ["barcode_svg", "timeline_svg", "overlap_svg", "frequency_svg"]

WIDTH = 640
MARGIN_LEFT = 60
MARGIN_RIGHT = 20
MARGIN_TOP = 30
BAND_HEIGHT = 6
BAND_GAP = 3
SECTION_GAP = 30
AXIS_HEIGHT = 30
ROW_HEIGHT = 14
COLORS = ("#1f4e9c", "#c0392b", "#27864a", "#8e44ad")
KIND_COLORS = {"closed": "#1f4e9c", "open-chain": "#5d9bd5", "set-run": "#b0b0b0"}


def _num(x: float) -> str:
    return f"{x:.2f}"


class _Canvas:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.parts: list[str] = []

    def rect(self, x, y, w, h, fill, title=None):
        body = f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(w)}" height="{_num(h)}" fill="{fill}"'
        if title:
            self.parts.append(body + f'><title>{escape(title)}</title></rect>')
        else:
            self.parts.append(body + "/>")

    def line(self, x1, y1, x2, y2, stroke="#000", dash=False):
        extra = ' stroke-dasharray="4 3"' if dash else ""
        self.parts.append(f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                          f'stroke="{stroke}" stroke-width="1"{extra}/>')

    def text(self, x, y, s, anchor="start", size=11):
        self.parts.append(f'<text x="{_num(x)}" y="{_num(y)}" font-family="sans-serif" '
                          f'font-size="{size}" text-anchor="{anchor}">{escape(str(s))}</text>')

    def render(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
                f'viewBox="0 0 {self.width} {self.height}">')
        return "\n".join([head, f'<rect width="{self.width}" height="{self.height}" fill="#fff"/>',
                          *self.parts, "</svg>"]) + "\n"


def _tau_axis(c: _Canvas, y: float, tau_max: float, x0: float, x1: float, label="tau"):
    c.line(x0, y, x1, y)
    for k in range(6):
        t = tau_max * k / 5
        x = x0 + (x1 - x0) * k / 5
        c.line(x, y, x, y + 4)
        c.text(x, y + 16, f"{t:.3g}", anchor="middle", size=10)
    c.text(x1, y + 28, label, anchor="end", size=10)


def barcode_svg(intervals: Sequence[PersistenceInterval], title: str = "") -> str:
    """One horizontal band per interval, grouped by dimension; infinite bars run to the edge."""
    dims = sorted({iv.dimension for iv in intervals})
    finite = [v for iv in intervals for v in (iv.birth, iv.death) if not math.isinf(v)]
    tau_max = max(finite) * 1.1 if finite and max(finite) > 0 else 1.0
    x0, x1 = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    scale = (x1 - x0) / tau_max

    height = MARGIN_TOP
    for d in dims:
        n = sum(1 for iv in intervals if iv.dimension == d)
        height += n * (BAND_HEIGHT + BAND_GAP) + SECTION_GAP
    height += AXIS_HEIGHT
    c = _Canvas(WIDTH, int(height))
    if title:
        c.text(WIDTH / 2, 18, title, anchor="middle", size=13)

    y = MARGIN_TOP
    for d in dims:
        c.text(8, y + 10, f"H{d}", size=12)
        for iv in (iv for iv in intervals if iv.dimension == d):
            end = x1 if math.isinf(iv.death) else x0 + iv.death * scale
            label = f"dim {d}: [{iv.birth:.6g}, {'inf' if iv.is_essential else f'{iv.death:.6g}'})"
            c.rect(x0 + iv.birth * scale, y, max(end - (x0 + iv.birth * scale), 1.0), BAND_HEIGHT,
                   COLORS[d % len(COLORS)], label)
            y += BAND_HEIGHT + BAND_GAP
        y += SECTION_GAP / 2
        c.line(x0, y - SECTION_GAP / 4, x1, y - SECTION_GAP / 4, stroke="#ccc", dash=True)
        y += SECTION_GAP / 2
    _tau_axis(c, y, tau_max, x0, x1)
    return c.render()


def _strip(c: _Canvas, n_rows: int, d: int, labels: Sequence[str]):
    x0, x1 = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    for i, lab in enumerate(labels):
        c.text(8, MARGIN_TOP + i * ROW_HEIGHT + 10, lab, size=10)
    y_axis = MARGIN_TOP + n_rows * ROW_HEIGHT + 4
    c.line(x0, y_axis, x1, y_axis)
    for k in range(6):
        pos = d * k / 5
        x = x0 + (x1 - x0) * k / 5
        c.line(x, y_axis, x, y_axis + 4)
        c.text(x, y_axis + 16, f"{pos:.0f}", anchor="middle", size=10)
    c.text(x1, y_axis + 28, "position in note sequence", anchor="end", size=10)
    return (x1 - x0) / max(d, 1)


def timeline_svg(events: Sequence[OccurrenceEvent], cycle_numbers: Sequence[int],
                 sequence_length: int, title: str = "") -> str:
    """Strip chart of full occurrences: one row per cycle, one bar per event."""
    rows = list(cycle_numbers)
    c = _Canvas(WIDTH, MARGIN_TOP + len(rows) * ROW_HEIGHT + AXIS_HEIGHT + 10)
    if title:
        c.text(WIDTH / 2, 18, title, anchor="middle", size=13)
    unit = _strip(c, len(rows), sequence_length, [f"C{n}" for n in rows])
    index = {n: i for i, n in enumerate(rows)}
    for e in events:
        i = index[e.cycle_number]
        c.rect(MARGIN_LEFT + e.start_position * unit, MARGIN_TOP + i * ROW_HEIGHT + 2,
               e.length * unit, ROW_HEIGHT - 4, KIND_COLORS.get(e.kind, "#333"),
               f"cycle {e.cycle_number} {e.kind} at {e.start_position}, length {e.length}")
    return c.render()


def overlap_svg(om: OverlapMatrix, title: str = "") -> str:
    k, d = om.m.shape
    c = _Canvas(WIDTH, MARGIN_TOP + k * ROW_HEIGHT + AXIS_HEIGHT + 10)
    if title:
        c.text(WIDTH / 2, 18, title, anchor="middle", size=13)
    labels = [f"C{n}" for n in om.cycle_numbers] if om.cycle_numbers else [str(i + 1) for i in range(k)]
    unit = _strip(c, k, d, labels)
    for i in range(k):
        j = 0
        row = om.m[i]
        while j < d:
            if row[j]:
                start = j
                while j < d and row[j]:
                    j += 1
                c.rect(MARGIN_LEFT + start * unit, MARGIN_TOP + i * ROW_HEIGHT + 2,
                       (j - start) * unit, ROW_HEIGHT - 4, COLORS[i % len(COLORS)],
                       f"row {labels[i]}: {start}..{j - 1}")
            else:
                j += 1
    return c.render()


def frequency_svg(points: Sequence[tuple[int, float]], title: str = "") -> str:
    """Rank versus log10 frequency scatter."""
    height = 300
    c = _Canvas(WIDTH, height)
    if title:
        c.text(WIDTH / 2, 18, title, anchor="middle", size=13)
    x0, x1 = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    y0, y1 = height - AXIS_HEIGHT - 10, MARGIN_TOP
    n = max((r for r, _ in points), default=1)
    top = max((v for _, v in points), default=1.0) or 1.0
    c.line(x0, y0, x1, y0)
    c.line(x0, y0, x0, y1)
    c.text(x1, y0 + 28, "rank", anchor="end", size=10)
    c.text(x0 - 6, y1 + 4, f"{10 ** top:.0f}", anchor="end", size=10)
    c.text(x0 - 6, y0, "1", anchor="end", size=10)
    for r, v in points:
        x = x0 + (x1 - x0) * (r - 0.5) / n
        y = y0 - (y0 - y1) * v / top
        c.parts.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="3" fill="{COLORS[0]}"/>')
    return c.render()
