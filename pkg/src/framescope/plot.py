"""Static SVG of a report's eigenvalues against its certified regions."""
from __future__ import annotations

import math

SIZE = 640
PAD = 48
LEGEND_W = 180
COLORS = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"]


def _fmt(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _extent(points, regions):
    xs, ys = [], []
    for x, y in points:
        xs.append(x)
        ys.append(y)
    for reg in regions:
        if reg["kind"] == "disk":
            cx, cy = reg["center"]
            r = reg["radius"]
            xs += [cx - r, cx + r]
            ys += [cy - r, cy + r]
        else:
            for x, y in reg["vertices"]:
                xs.append(x)
                ys.append(y)
    if not xs:
        xs, ys = [0.0], [0.0]
    cx = 0.5 * (min(xs) + max(xs))
    cy = 0.5 * (min(ys) + max(ys))
    half = 0.5 * max(max(xs) - min(xs), max(ys) - min(ys))
    if half == 0.0:
        half = 1.0
    half *= 1.1  # 10% margin
    return cx, cy, half


def render_svg(report: dict) -> str:
    """Render eigenvalues as dots and each certificate region as an outline.

    Raises ``KeyError``/``TypeError``/``ValueError`` on a malformed report.
    """
    points = [(float(x), float(y)) for x, y in report["eigenvalues"]["multiplier"]]
    regions = [c["region"] for c in report.get("certificates", [])]
    cx, cy, half = _extent(points, regions)
    span = SIZE - 2 * PAD
    scale = span / (2 * half)

    def px(x):
        return PAD + (x - (cx - half)) * scale

    def py(y):
        return PAD + ((cy + half) - y) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE + LEGEND_W}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE + LEGEND_W} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE + LEGEND_W}" height="{SIZE}" fill="white"/>',
        f'<rect x="{PAD}" y="{PAD}" width="{span}" height="{span}" fill="none" stroke="#999"/>',
    ]
    # axes through the origin when visible
    if cx - half <= 0 <= cx + half:
        out.append(f'<line class="axis" x1="{_fmt(px(0))}" y1="{PAD}" x2="{_fmt(px(0))}" y2="{PAD + span}" stroke="#ccc"/>')
    if cy - half <= 0 <= cy + half:
        out.append(f'<line class="axis" x1="{PAD}" y1="{_fmt(py(0))}" x2="{PAD + span}" y2="{_fmt(py(0))}" stroke="#ccc"/>')
    out.append(f'<text x="{PAD}" y="{PAD - 8}" font-size="12">Re [{_fmt(cx - half)}, {_fmt(cx + half)}]  '
               f'Im [{_fmt(cy - half)}, {_fmt(cy + half)}]</text>')

    legend_y = PAD
    for i, reg in enumerate(regions):
        color = COLORS[i % len(COLORS)]
        if reg["kind"] == "disk":
            ccx, ccy = reg["center"]
            out.append(
                f'<circle class="region" cx="{_fmt(px(ccx))}" cy="{_fmt(py(ccy))}" '
                f'r="{_fmt(reg["radius"] * scale)}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        else:
            pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in reg["vertices"])
            out.append(f'<polygon class="region" points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        label = reg.get("label") or reg["kind"]
        out.append(f'<line x1="{SIZE}" y1="{legend_y}" x2="{SIZE + 20}" y2="{legend_y}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{SIZE + 26}" y="{legend_y + 4}" font-size="12">{label}</text>')
        legend_y += 18

    for x, y in points:
        out.append(f'<circle class="eigenvalue" cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="3" fill="black"/>')
    out.append(f'<circle cx="{SIZE + 10}" cy="{legend_y}" r="3" fill="black"/>')
    out.append(f'<text x="{SIZE + 26}" y="{legend_y + 4}" font-size="12">eigenvalues</text>')
    out.append("</svg>")
    if not all(math.isfinite(v) for p in points for v in p):
        raise ValueError("report contains non-finite eigenvalues")
    return "\n".join(out) + "\n"
