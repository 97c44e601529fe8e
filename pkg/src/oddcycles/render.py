"""Serialisation of cycle records: CSV, SVG and JSON.

All writers are deterministic.  Decimal output comes from exact interval
midpoints rounded at a fixed number of places, never from float repr.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .cycles.enumeration import CycleRecord
from .field import CycInt, ZLambda

CSV_COLUMNS = ("q", "age", "generation", "orbit", "a_coeffs", "c_coeffs", "re", "im")


def coeff_string(z: ZLambda) -> str:
    return ";".join(str(v) for v in z.c)


def decimal_places(precision: int) -> int:
    return max(4, math.floor(precision * math.log10(2)) - 1)


def fixed(value: Fraction, places: int) -> str:
    """value rounded half-up to `places` decimals."""
    scaled = value * 10**places
    n = math.floor(scaled + Fraction(1, 2))
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def coordinates(x: CycInt, precision: int) -> tuple[str, str]:
    box = x.embed(precision)
    places = decimal_places(precision)
    re = fixed((box.re_lo + box.re_hi) / 2, places)
    im = fixed((box.im_lo + box.im_hi) / 2, places)
    return _unsigned_zero(re), _unsigned_zero(im)


def _unsigned_zero(s: str) -> str:
    return s.lstrip("-") if s.strip("-0.") == "" else s


def record_row(r: CycleRecord, precision: int) -> list[str]:
    re, im = coordinates(r.point, precision)
    return [
        str(r.point.ctx.q),
        str(r.age),
        str(r.generation),
        str(r.orbit_label),
        coeff_string(r.point.a),
        coeff_string(r.point.c),
        re,
        im,
    ]


def to_csv(records: Iterable[CycleRecord], precision: int = 53) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(record_row(r, precision))
    return buf.getvalue()


def read_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def record_dict(r: CycleRecord, precision: int) -> dict:
    re, im = coordinates(r.point, precision)
    return {
        "a": list(r.point.a.c),
        "age": r.age,
        "c": list(r.point.c.c),
        "generation": r.generation,
        "im": im,
        "orbit": r.orbit_label,
        "re": re,
        "tuple": {"eps": r.tuple.eps, "l": list(r.tuple.l), "r": r.tuple.r},
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_json(q: int, query: dict, records: Sequence[CycleRecord], precision: int = 53) -> str:
    return dumps(
        {
            "count": len(records),
            "points": [record_dict(r, precision) for r in records],
            "q": q,
            "query": query,
        }
    )


_ORBIT_COLOURS = ("#1f4e99", "#b03a2e", "#1e8449", "#7d3c98")


def to_svg(
    q: int,
    records: Sequence[CycleRecord],
    extent: tuple[float, float, float, float],
    shell_radius: float,
) -> str:
    """Scatter plot with y pointing up.

    extent is (xmin, xmax, ymin, ymax) of the query region; a 5% margin is
    added.  The unit circle and the circle through the smallest points of
    age one are drawn as guides."""
    x0, x1, y0, y1 = extent
    mx, my = 0.05 * (x1 - x0), 0.05 * (y1 - y0)
    x0, x1, y0, y1 = x0 - mx, x1 + mx, y0 - my, y1 + my
    w, h = x1 - x0, y1 - y0
    dot = 0.006 * max(w, h)
    stroke = 0.0015 * max(w, h)

    def f(v: float) -> str:
        s = f"{v:.6f}"
        return "0.000000" if s == "-0.000000" else s

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="800" height="{f(800 * h / w)}" viewBox="{f(x0)} {f(-y1)} {f(w)} {f(h)}">',
        f"<title>odd vanishing cycles, q={q}, {len(records)} points</title>",
        f'<rect x="{f(x0)}" y="{f(-y1)}" width="{f(w)}" height="{f(h)}" fill="white"/>',
        f'<line x1="{f(x0)}" y1="0.000000" x2="{f(x1)}" y2="0.000000" '
        f'stroke="#bbbbbb" stroke-width="{f(stroke)}"/>',
        f'<line x1="0.000000" y1="{f(-y1)}" x2="0.000000" y2="{f(-y0)}" '
        f'stroke="#bbbbbb" stroke-width="{f(stroke)}"/>',
        f'<circle class="guide" cx="0.000000" cy="0.000000" r="1.000000" fill="none" '
        f'stroke="#888888" stroke-width="{f(stroke)}"/>',
        f'<circle class="guide" cx="0.000000" cy="0.000000" r="{f(shell_radius)}" fill="none" '
        f'stroke="#888888" stroke-width="{f(stroke)}" stroke-dasharray="{f(4 * stroke)}"/>',
        '<g class="points">',
    ]
    for r in records:
        re, im = coordinates(r.point, 53)
        colour = _ORBIT_COLOURS[r.orbit_label % len(_ORBIT_COLOURS)]
        out.append(
            f'<circle cx="{f(float(re))}" cy="{f(-float(im))}" r="{f(dot)}" fill="{colour}"/>'
        )
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)


def svg_point_count(svg: str) -> int:
    body = svg.split('<g class="points">', 1)[1]
    return body.count("<circle ")
