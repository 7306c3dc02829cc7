"""Self-contained SVG renderings: factor maps and cooccurrence word clouds.

Everything here is deterministic: pixel coordinates use a fixed decimal
format and the cloud layout derives its spiral start angle from a stable
CRC32 of the lemma, never from process-level hashing.
"""

from __future__ import annotations

import html
import math
import zlib

CLUSTER_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
)


def _px(v):
    return format(v, ".2f")


def scatter_svg(points, axes=(1, 2), inertia_pct=None, width=640, height=640,
                title=None, masses=None, clusters=None) -> str:
    """Factor map: one dot + label per point, mass-scaled dots optional."""
    margin = 40.0
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    if not points:
        xs = ys = [0.0]
    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(ys), max(ys)
    x_span = max(x_max - x_min, 1e-9)
    y_span = max(y_max - y_min, 1e-9)
    x_min -= 0.06 * x_span
    x_max += 0.06 * x_span
    y_min -= 0.06 * y_span
    y_max += 0.06 * y_span

    def sx(x):
        return margin + (x - x_min) / (x_max - x_min) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y - y_min) / (y_max - y_min) * (height - 2 * margin)

    max_mass = max(masses) if masses else 0.0
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" class="factor-map" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if x_min < 0 < x_max:
        out.append(f'<line x1="{_px(sx(0))}" y1="{_px(margin)}" x2="{_px(sx(0))}" '
                   f'y2="{_px(height - margin)}" stroke="#cccccc"/>')
    if y_min < 0 < y_max:
        out.append(f'<line x1="{_px(margin)}" y1="{_px(sy(0))}" x2="{_px(width - margin)}" '
                   f'y2="{_px(sy(0))}" stroke="#cccccc"/>')
    if title:
        out.append(f'<text x="{_px(width / 2)}" y="20" text-anchor="middle" '
                   f'font-size="14">{html.escape(title)}</text>')
    captions = []
    for side, ax in zip(("x", "y"), axes):
        pct = ""
        if inertia_pct is not None:
            pct = f" ({format(inertia_pct[0 if side == 'x' else 1], '.3g')}%)"
        captions.append(f"Axis {ax}{pct}")
    out.append(f'<text x="{_px(width / 2)}" y="{_px(height - 8)}" text-anchor="middle" '
               f'font-size="11" fill="#555555">{html.escape(captions[0])}</text>')
    out.append(f'<text x="14" y="{_px(height / 2)}" text-anchor="middle" font-size="11" '
               f'fill="#555555" transform="rotate(-90 14 {_px(height / 2)})">'
               f'{html.escape(captions[1])}</text>')

    for i, p in enumerate(points):
        if masses and max_mass > 0:
            radius = 1.5 + 4.5 * math.sqrt(masses[i] / max_mass)
        else:
            radius = 2.2
        color = "#1f77b4"
        if clusters is not None:
            color = CLUSTER_PALETTE[clusters.get(p.lemma, 0) % len(CLUSTER_PALETTE)]
        cx, cy = sx(p.x), sy(p.y)
        out.append(f'<circle cx="{_px(cx)}" cy="{_px(cy)}" r="{_px(radius)}" '
                   f'fill="{color}" fill-opacity="0.75"/>')
        out.append(f'<text x="{_px(cx + radius + 2)}" y="{_px(cy + 3)}" font-size="9" '
                   f'fill="#222222">{html.escape(p.lemma)}</text>')
    out.append("</svg>")
    return "\n".join(out)


def _lemma_angle(lemma: str) -> float:
    """Stable per-lemma spiral start angle (process-independent hash)."""
    return (zlib.crc32(lemma.encode("utf-8")) % 6283) / 1000.0


def cloud_font_size(weight, weight_max, min_pt=10.0, max_pt=34.0):
    """Font size linear in the index, clipped to [0, weight_max]."""
    if weight_max <= 0:
        return min_pt
    w = min(max(weight, 0.0), weight_max)
    return min_pt + (max_pt - min_pt) * (w / weight_max)


def word_cloud_svg(entries, width=520, height=340, max_terms=40, title=None) -> str:
    """Cloud of (lemma, weight) pairs, font size proportional to weight.

    Placement walks an elliptical spiral from the centre until the word's
    estimated box stops overlapping previously placed boxes; the start angle
    comes from the lemma's CRC32 so layouts are reproducible everywhere.
    """
    chosen = sorted(entries, key=lambda e: (-e[1], e[0]))[:max_terms]
    w_max = max((w for _, w in chosen), default=0.0)
    placed = []
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" class="pivot-cloud" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{_px(width / 2)}" y="16" text-anchor="middle" '
                   f'font-size="12" fill="#555555">{html.escape(title)}</text>')
    cx0, cy0 = width / 2.0, height / 2.0
    for rank, (lemma, weight) in enumerate(chosen):
        font = cloud_font_size(weight, w_max)
        box_w = 0.62 * font * max(len(lemma), 1) + 4
        box_h = 1.1 * font + 2
        theta0 = _lemma_angle(lemma)
        x = y = None
        for t in range(2500):
            theta = theta0 + 0.35 * t
            radius = 1.1 * t ** 0.82
            cand_x = cx0 + radius * math.cos(theta)
            cand_y = cy0 + 0.62 * radius * math.sin(theta)
            rect = (cand_x - box_w / 2, cand_y - box_h / 2, cand_x + box_w / 2, cand_y + box_h / 2)
            if rect[0] < 2 or rect[1] < 18 or rect[2] > width - 2 or rect[3] > height - 2:
                continue
            if all(rect[2] < r[0] or rect[0] > r[2] or rect[3] < r[1] or rect[1] > r[3]
                   for r in placed):
                x, y = cand_x, cand_y
                placed.append(rect)
                break
        if x is None:
            continue  # no room; smaller-weight terms are droppable
        color = CLUSTER_PALETTE[rank % len(CLUSTER_PALETTE)]
        out.append(f'<text x="{_px(x)}" y="{_px(y + 0.35 * font)}" text-anchor="middle" '
                   f'font-size="{_px(font)}" fill="{color}">{html.escape(lemma)}</text>')
    out.append("</svg>")
    return "\n".join(out)
