"""Static SVG panels of mean output SINR versus snapshot dimension.

One panel per input-SINR value, one series per method. Generated as
plain SVG 1.1 text with no external resources, so outputs are small,
diffable, and render anywhere.
"""

from __future__ import annotations

import math
from pathlib import Path

from .experiment import ExperimentResult, ResultRow

__all__ = ["render_panel", "write_panels", "panel_filename"]

WIDTH, HEIGHT = 560, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 16, 40, 48

# Line styles mirror the source convention: dotted = optimal,
# solid = adaptive, dash-dot = fixed loading.
_STYLES = {
    "optimal": ("#444444", "2,4"),
    "adaptive": ("#c0392b", None),
    "fixed": ("#2471a3", "9,3,2,3"),
    "grid_oracle": ("#1e8449", "6,4"),
}
_LABELS = {
    "optimal": "optimal (known R)",
    "adaptive": "adaptive loading",
    "fixed": "fixed loading (10 sigma_n^2)",
    "grid_oracle": "grid oracle",
}


def panel_filename(input_sinr_db: float) -> str:
    value = input_sinr_db
    text = str(int(value)) if float(value).is_integer() else f"{value:g}"
    return f"panel_sinr_{text}db.svg"


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(count - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


def render_panel(rows: list[ResultRow], input_sinr_db: float) -> str:
    """Render one input-SINR panel as an SVG document string."""
    rows = [r for r in rows if r.input_sinr_db == input_sinr_db and math.isfinite(r.mean_output_sinr_db)]
    if not rows:
        raise ValueError(f"no finite rows for input SINR {input_sinr_db} dB")

    ns = sorted({r.n for r in rows})
    ys = [r.mean_output_sinr_db for r in rows]
    y_lo, y_hi = min(ys) - 1.0, max(ys) + 1.0  # 1 dB padding
    x_lo, x_hi = min(ns), max(ns)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1, x_hi + 1

    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def px(n: float) -> float:
        return MARGIN_L + (n - x_lo) / (x_hi - x_lo) * plot_w

    def py(v: float) -> float:
        return MARGIN_T + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="22" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">'
        f"Output SINR vs N, input SINR = {input_sinr_db:g} dB</text>",
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#888" stroke-width="1"/>',
    ]

    for t in _ticks(y_lo, y_hi):
        if not (y_lo <= t <= y_hi):
            continue
        y = py(t)
        parts.append(
            f'<line x1="{MARGIN_L}" y1="{y:.2f}" x2="{MARGIN_L + plot_w}" y2="{y:.2f}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{MARGIN_L - 6}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{t:g}</text>'
        )
    for n in ns:
        x = px(n)
        parts.append(
            f'<text x="{x:.2f}" y="{MARGIN_T + plot_h + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{n}</text>'
        )
    parts.append(
        f'<text x="{MARGIN_L + plot_w / 2}" y="{HEIGHT - 10}" text-anchor="middle" '
        'font-family="sans-serif" font-size="12">N (snapshot dimension)</text>'
    )
    parts.append(
        f'<text x="16" y="{MARGIN_T + plot_h / 2}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 16 {MARGIN_T + plot_h / 2})">mean output SINR (dB)</text>'
    )

    legend_y = MARGIN_T + 14
    methods = [m for m in _STYLES if any(r.method == m for r in rows)]
    for method in methods:
        color, dash = _STYLES[method]
        pts = sorted((r.n, r.mean_output_sinr_db) for r in rows if r.method == method)
        path = " ".join(f"{px(n):.2f},{py(v):.2f}" for n, v in pts)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" '
            f'stroke-width="1.8"{dash_attr}/>'
        )
        for n, v in pts:
            parts.append(
                f'<circle cx="{px(n):.2f}" cy="{py(v):.2f}" r="2.4" fill="{color}"/>'
            )
        parts.append(
            f'<line x1="{MARGIN_L + 10}" y1="{legend_y}" x2="{MARGIN_L + 42}" '
            f'y2="{legend_y}" stroke="{color}" stroke-width="1.8"{dash_attr}/>'
        )
        parts.append(
            f'<text x="{MARGIN_L + 48}" y="{legend_y + 4}" '
            f'font-family="sans-serif" font-size="11">{_LABELS[method]}</text>'
        )
        legend_y += 16

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_panels(result: ExperimentResult, out_dir: str | Path) -> list[Path]:
    """Write one SVG per input-SINR value; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for sinr_db in sorted({r.input_sinr_db for r in result.rows}):
        rows = [r for r in result.rows if r.input_sinr_db == sinr_db]
        if not any(math.isfinite(r.mean_output_sinr_db) for r in rows):
            continue
        path = out_dir / panel_filename(sinr_db)
        path.write_text(render_panel(list(result.rows), sinr_db), encoding="utf-8")
        written.append(path)
    return written
