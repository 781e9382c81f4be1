"""Minimal deterministic SVG 1.1 line plots.

Every data series is one ``<polyline>``; axes, ticks and legend swatches use
``<line>``/``<rect>``/``<text>`` only, so series can be counted and read back.
"""
from dataclasses import dataclass
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 760, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 210, 40, 60
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2")


def _num(v):
    # shortest round-trip repr of a 4-decimal rounding: stable across platforms
    r = round(float(v), 4)
    return repr(r + 0.0)


@dataclass(frozen=True)
class Frame:
    """Maps data (x, y) in [x_min, x_max] x [y_min, y_max] to pixel coordinates."""

    x_min: float
    x_max: float
    y_min: float = 0.0
    y_max: float = 1.0

    @property
    def plot_width(self):
        return WIDTH - LEFT - RIGHT

    @property
    def plot_height(self):
        return HEIGHT - TOP - BOTTOM

    def to_px(self, x, y):
        px = LEFT + (x - self.x_min) / (self.x_max - self.x_min) * self.plot_width
        py = TOP + (self.y_max - y) / (self.y_max - self.y_min) * self.plot_height
        return px, py

    def from_px(self, px, py):
        x = self.x_min + (px - LEFT) / self.plot_width * (self.x_max - self.x_min)
        y = self.y_max - (py - TOP) / self.plot_height * (self.y_max - self.y_min)
        return x, y


@dataclass(frozen=True)
class Series:
    label: str
    x: tuple
    y: tuple
    dashed: bool = False


def _ticks(lo, hi, count=5):
    step = (hi - lo) / count
    return [lo + i * step for i in range(count + 1)]


def render_svg(series, frame: Frame, title="", x_label="z", y_label="probability"):
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{LEFT}" y="{TOP}" width="{frame.plot_width}" height="{frame.plot_height}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    if title:
        out.append(f'<text x="{LEFT + frame.plot_width / 2:g}" y="{TOP - 14}" '
                   f'text-anchor="middle" font-family="sans-serif" font-size="15">'
                   f'{escape(title)}</text>')
    y_base = TOP + frame.plot_height
    for t in _ticks(frame.x_min, frame.x_max):
        px, _ = frame.to_px(t, frame.y_min)
        out.append(f'<line x1="{_num(px)}" y1="{y_base}" x2="{_num(px)}" y2="{y_base + 5}" '
                   'stroke="black"/>')
        out.append(f'<text x="{_num(px)}" y="{y_base + 20}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="12">{t:.3g}</text>')
    for t in _ticks(frame.y_min, frame.y_max):
        _, py = frame.to_px(frame.x_min, t)
        out.append(f'<line x1="{LEFT - 5}" y1="{_num(py)}" x2="{LEFT}" y2="{_num(py)}" '
                   'stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{_num(py + 4)}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="12">{t:.2g}</text>')
    out.append(f'<text x="{LEFT + frame.plot_width / 2:g}" y="{HEIGHT - 15}" '
               f'text-anchor="middle" font-family="sans-serif" font-size="13">'
               f'{escape(x_label)}</text>')
    out.append(f'<text x="18" y="{TOP + frame.plot_height / 2:g}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13" '
               f'transform="rotate(-90 18 {TOP + frame.plot_height / 2:g})">'
               f'{escape(y_label)}</text>')

    legend_x = LEFT + frame.plot_width + 15
    for i, s in enumerate(series):
        colour = PALETTE[i % len(PALETTE)]
        dash = ' stroke-dasharray="6,4"' if s.dashed else ""
        pts = " ".join(f"{_num(px)},{_num(py)}"
                       for px, py in (frame.to_px(a, b) for a, b in zip(s.x, s.y)))
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5"{dash} '
                   f'points="{pts}"/>')
        ly = TOP + 10 + 20 * i
        out.append(f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 25}" y2="{ly}" '
                   f'stroke="{colour}" stroke-width="1.5"{dash}/>')
        out.append(f'<text x="{legend_x + 32}" y="{ly + 4}" font-family="sans-serif" '
                   f'font-size="12">{escape(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
