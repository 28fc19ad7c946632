"""Overlap between wind-rose cells and runway strips.

A strip is an infinite band of half-width ``c`` (km/h) centred on a line
through the origin.  In polar coordinates a point ``(r, phi)`` lies in the
strip iff ``r * |sin(phi - theta)| <= c``, i.e. iff ``r`` is below the radial
bound ``c / |sin(phi - theta)|``.  The covered part of an annular sector is
therefore bounded by a single curve in ``phi`` and its area integrates in
closed form, piece by piece::

    1/2 * integral (min(r_out, b(phi))**2 - r_in**2)+ dphi,
    integral c**2 / sin(phi)**2 dphi = -c**2 * cot(phi)

The same holds for a union of strips: the union bound is the pointwise
maximum of the individual bounds.

Angles are degrees at every public interface and radians inside.
"""

from dataclasses import dataclass
import math

import numpy as np

from .coefficients import DEFAULT_HALF_WIDTH, CoefficientTable
from .errors import BadGeometry, DegenerateCell
from .rose import BandGeometry, OrientationClasses

MC_DEFAULT_SAMPLES = 10_000_000
MC_DEFAULT_SEED = 20120607
_MC_CHUNK = 1 << 20


@dataclass(frozen=True)
class Strip:
    """Runway template: axis azimuth in [0, 180) degrees and crosswind half-width."""

    axis_azimuth: float = 0.0
    half_width: float = DEFAULT_HALF_WIDTH

    def __post_init__(self):
        if not self.half_width > 0:
            raise BadGeometry(f"strip half-width must be > 0, got {self.half_width}")
        az = math.fmod(float(self.axis_azimuth), 180.0)
        if az < 0:
            az += 180.0
        object.__setattr__(self, "axis_azimuth", az)
        object.__setattr__(self, "half_width", float(self.half_width))


@dataclass(frozen=True)
class AnnularSector:
    """Cell between two radii, swept clockwise from ``angle_lo`` to ``angle_hi``."""

    r_inner: float
    r_outer: float
    angle_lo: float
    angle_hi: float

    def __post_init__(self):
        if not (0 <= self.r_inner < self.r_outer):
            raise DegenerateCell(
                f"need 0 <= r_inner < r_outer, got {self.r_inner}, {self.r_outer}")
        if not 0 < self.width <= 180.0 + 1e-12:
            raise DegenerateCell(f"angular width must be in (0, 180], got {self.width}")

    @property
    def width(self):
        w = self.angle_hi - self.angle_lo
        return w + 360.0 if w < 0 else w

    @property
    def area(self):
        return 0.5 * (self.r_outer ** 2 - self.r_inner ** 2) * math.radians(self.width)

    @classmethod
    def centered(cls, r_inner, r_outer, center_deg, width_deg):
        return cls(r_inner, r_outer, center_deg - width_deg / 2.0, center_deg + width_deg / 2.0)


def radial_bound(phi_deg, strip):
    """Largest radius at relative angle ``phi_deg`` that is still inside ``strip``.

    Returns ``math.inf`` along the axis.
    """
    s = abs(math.sin(math.radians(phi_deg)))
    if s == 0.0:
        return math.inf
    return strip.half_width / s


def _bound(phi, theta, c):
    s = abs(math.sin(phi - theta))
    return math.inf if s == 0.0 else c / s


def _split_points(strips, r_in, r_out):
    """Angles (radians, mod pi) where the union bound changes regime."""
    pts = []
    for theta, c in strips:
        pts.append(theta)
        for r in (r_out, r_in):
            if r > 0 and c < r:
                a = math.asin(c / r)
                pts += [theta + a, theta - a]
    # c_b |sin(phi - ta)| = c_a |sin(phi - tb)|, solved for tan(phi)
    for i, (ta, ca) in enumerate(strips):
        for tb, cb in strips[i + 1:]:
            for sign in (1.0, -1.0):
                y = cb * math.sin(ta) - sign * ca * math.sin(tb)
                x = cb * math.cos(ta) - sign * ca * math.cos(tb)
                if x != 0.0 or y != 0.0:
                    pts.append(math.atan2(y, x))
    return pts


def _covered_fraction(r_in, r_out, lo, hi, strips):
    """Fraction of the sector ``[r_in, r_out] x [lo, hi]`` (radians) inside the strips.

    Pieces wholly inside or wholly outside are tallied by angle, so cells
    that are entirely covered or entirely missed come out as exactly 1 or 0.
    """
    cuts = {lo, hi}
    for p in _split_points(strips, r_in, r_out):
        m = math.ceil((lo - p) / math.pi)
        q = p + m * math.pi
        while q < hi:
            if q > lo:
                cuts.add(q)
            q += math.pi
    cuts = sorted(cuts)

    full_angle = 0.0
    partial_area = 0.0
    n_full = n_partial = n_empty = 0
    for p, q in zip(cuts, cuts[1:]):
        if q - p <= 0.0:
            continue
        mid = 0.5 * (p + q)
        theta, c = max(strips, key=lambda s: _bound(mid, s[0], s[1]))
        b = _bound(mid, theta, c)
        if b >= r_out:
            full_angle += q - p
            n_full += 1
        elif b > r_in:
            cot_p = 1.0 / math.tan(p - theta)
            cot_q = 1.0 / math.tan(q - theta)
            partial_area += 0.5 * (c * c * (cot_p - cot_q) - r_in ** 2 * (q - p))
            n_partial += 1
        else:
            n_empty += 1
    if n_partial == 0 and n_empty == 0:
        return 1.0
    if n_partial == 0 and n_full == 0:
        return 0.0
    area = 0.5 * (r_out ** 2 - r_in ** 2) * (hi - lo)
    return full_angle / (hi - lo) + partial_area / area


def _union_fraction(cell, strips):
    if cell.area <= 0:
        raise DegenerateCell("cell has zero area")
    lo = math.radians(cell.angle_lo)
    hi = lo + math.radians(cell.width)
    rad = [(math.radians(s.axis_azimuth), s.half_width) for s in strips]
    return min(1.0, max(0.0, _covered_fraction(cell.r_inner, cell.r_outer, lo, hi, rad)))


def sector_strip_overlap_fraction(cell, strip):
    """Exact fraction of ``cell``'s area lying inside ``strip``."""
    return _union_fraction(cell, [strip])


def union_overlap_fraction(cell, strip_a, strip_b):
    """Exact fraction of ``cell``'s area inside ``strip_a`` or ``strip_b``."""
    return _union_fraction(cell, [strip_a, strip_b])


def mc_overlap_oracle(cell, strip, samples=MC_DEFAULT_SAMPLES, seed=MC_DEFAULT_SEED):
    """Monte Carlo estimate of the covered fraction of ``cell``.

    Points are drawn uniformly by area (radius with density proportional
    to ``r``, angle uniform).  ``strip`` may also be a sequence of strips,
    in which case membership in any of them counts.

    Sample ``i`` consumes the ``2i``-th and ``2i+1``-th doubles of a Philox
    stream keyed by ``seed``, so the estimate depends only on
    ``(cell, strip, samples, seed)``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    strips = [strip] if isinstance(strip, Strip) else list(strip)
    gen = np.random.Generator(np.random.Philox(key=seed))
    r2_lo, r2_span = cell.r_inner ** 2, cell.r_outer ** 2 - cell.r_inner ** 2
    lo, width = math.radians(cell.angle_lo), math.radians(cell.width)

    hits = 0
    done = 0
    while done < samples:
        n = min(_MC_CHUNK, samples - done)
        u = gen.random((n, 2))
        r = np.sqrt(r2_lo + u[:, 0] * r2_span)
        phi = lo + u[:, 1] * width
        inside = np.zeros(n, dtype=bool)
        for s in strips:
            inside |= r * np.abs(np.sin(phi - math.radians(s.axis_azimuth))) <= s.half_width
        hits += int(np.count_nonzero(inside))
        done += n
    return hits / samples


def class_cell(geometry, classes, band, offset):
    """Band-``band`` sector centred ``offset`` classes clockwise of north."""
    lo, hi = geometry.bands()[band]
    return AnnularSector.centered(lo, hi, classes.azimuth(offset), classes.width)


def coefficient_table(geometry=None, classes=None, strip_half_width=DEFAULT_HALF_WIDTH):
    """Exact overlap coefficients for a strip along north-south.

    ``rows[b, k]`` covers the cell ``k`` classes off the axis.  The antipodal
    cell has the same fraction, and offsets ``k`` and ``count - k`` are
    mirror images, so only half the offsets are integrated.
    """
    geometry = geometry or BandGeometry()
    classes = classes or OrientationClasses()
    strip = Strip(0.0, strip_half_width)
    n = classes.count
    rows = np.empty((geometry.n_bands, n))
    for b in range(geometry.n_bands):
        for k in range(n // 2 + 1):
            rows[b, k] = sector_strip_overlap_fraction(class_cell(geometry, classes, b, k), strip)
        for k in range(n // 2 + 1, n):
            rows[b, k] = rows[b, n - k]
    return CoefficientTable(rows, "derived", geometry, classes, float(strip_half_width))


def mc_table_deviation(table, samples=MC_DEFAULT_SAMPLES, seed=MC_DEFAULT_SEED):
    """Largest ``|table - Monte Carlo|`` over every (band, offset) cell."""
    strip = Strip(0.0, table.half_width)
    worst = 0.0
    for b in range(table.geometry.n_bands):
        for k in range(table.classes.count):
            cell = class_cell(table.geometry, table.classes, b, k)
            est = mc_overlap_oracle(cell, strip, samples, seed)
            worst = max(worst, abs(est - table.rows[b, k]))
    return worst
