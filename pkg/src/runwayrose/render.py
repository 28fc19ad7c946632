"""Deterministic SVG drawing of a wind rose with an optional runway strip.

North is up and azimuths run clockwise.  Output depends only on the inputs:
no timestamps, fixed element order and fixed number formatting.
"""

from dataclasses import dataclass
import math
from xml.sax.saxutils import escape

from .errors import BadOptions
from .geometry import Strip

LABEL_MARGIN_PX = 30.0
STRIP_OVERHANG = 1.05


@dataclass(frozen=True)
class RenderOptions:
    canvas_px: int = 800
    outer_radius_px: float = 350.0
    strip: Strip = None
    show_values: bool = False
    decimals: int = 2

    def validate(self):
        if self.outer_radius_px <= 0:
            raise BadOptions("outer ring radius must be positive")
        need = 2 * (self.outer_radius_px + LABEL_MARGIN_PX)
        if self.canvas_px < need:
            raise BadOptions(f"canvas of {self.canvas_px} px is smaller than the {need:g} px "
                             "needed for the outer ring and labels")
        if int(self.decimals) != self.decimals or self.decimals < 0:
            raise BadOptions(f"decimals must be a non-negative integer, got {self.decimals}")
        return self


def _num(v):
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _polar(cx, cy, r, az_deg):
    a = math.radians(az_deg)
    return cx + r * math.sin(a), cy - r * math.cos(a)


def _centroid_radius(r_in, r_out, width_deg):
    half = math.radians(width_deg) / 2.0
    r = (2.0 / 3.0) * (r_out ** 3 - r_in ** 3) / (r_out ** 2 - r_in ** 2)
    return r * math.sin(half) / half


def render_rose_svg(rose, options=None):
    """Return the SVG document (str) for ``rose``.

    Draws one circle per ring radius, ``2 * count`` spokes on the class
    boundaries, optional cell percentages at cell centroids (both halves of
    a class carry its value) and the optional strip as a translucent band.
    """
    opts = (options or RenderOptions()).validate()
    size = opts.canvas_px
    cx = cy = size / 2.0
    scale = opts.outer_radius_px / rose.geometry.outer_radius
    n = rose.classes.count
    w = rose.classes.width

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect class="background" x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]

    if opts.strip is not None:
        clip_r = STRIP_OVERHANG * opts.outer_radius_px
        half_w = opts.strip.half_width * scale
        out += [
            '<defs><clipPath id="rose-clip">'
            f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(clip_r)}"/></clipPath></defs>',
            f'<rect class="strip" x="{_num(cx - half_w)}" y="{_num(cy - clip_r)}" '
            f'width="{_num(2 * half_w)}" height="{_num(2 * clip_r)}" '
            f'transform="rotate({_num(opts.strip.axis_azimuth)} {_num(cx)} {_num(cy)})" '
            'clip-path="url(#rose-clip)" fill="#1f77b4" fill-opacity="0.3" stroke="#1f77b4"/>',
        ]

    for r in rose.geometry.ring_radii:
        out.append(f'<circle class="ring" cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r * scale)}" '
                   'fill="none" stroke="black" stroke-width="1"/>')

    r0 = rose.geometry.calm_threshold * scale
    r1 = opts.outer_radius_px
    for k in range(2 * n):
        az = (k + 0.5) * w
        x0, y0 = _polar(cx, cy, r0, az)
        x1, y1 = _polar(cx, cy, r1, az)
        out.append(f'<line class="spoke" x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x1)}" '
                   f'y2="{_num(y1)}" stroke="gray" stroke-width="1"/>')

    for label, az in (("N", 0.0), ("E", 90.0), ("S", 180.0), ("W", 270.0)):
        x, y = _polar(cx, cy, r1 + LABEL_MARGIN_PX / 2.0, az)
        out.append(f'<text class="compass" x="{_num(x)}" y="{_num(y)}" text-anchor="middle" '
                   f'dominant-baseline="middle" font-size="14">{label}</text>')

    if opts.show_values:
        for b, (lo, hi) in enumerate(rose.geometry.bands()):
            rc = _centroid_radius(lo, hi, w) * scale
            for j in range(n):
                text = escape(f"{rose.cells[b, j]:.{int(opts.decimals)}f}")
                for az in (rose.classes.azimuth(j), rose.classes.azimuth(j) + 180.0):
                    x, y = _polar(cx, cy, rc, az)
                    out.append(f'<text class="value" x="{_num(x)}" y="{_num(y)}" '
                               'text-anchor="middle" dominant-baseline="middle" '
                               f'font-size="10">{text}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
