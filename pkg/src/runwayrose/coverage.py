"""Coverage per runway orientation, best orientation and second-runway search."""

from dataclasses import dataclass, replace
from functools import lru_cache
import math

import numpy as np

from .coefficients import DEFAULT_HALF_WIDTH
from .errors import CompatModeUnavailable, DimensionMismatch, OddClassCount, SameClass
from .geometry import AnnularSector, Strip, union_overlap_fraction
from .rose import validate_rose

DEFAULT_THRESHOLD = 95.0


@dataclass(frozen=True)
class RunwayDesignator:
    """Reciprocal runway numbers, ``low`` in 1..18 and ``high = low + 18``."""

    low: int
    high: int

    def __post_init__(self):
        if not (1 <= self.low <= 18 and self.high == self.low + 18):
            raise ValueError(f"invalid runway pair {self.low}-{self.high}")

    def __str__(self):
        return f"{self.low:02d}-{self.high:02d}"


@dataclass(frozen=True)
class CoverageReport:
    coverage: tuple
    calm_pct: float
    best_class: int
    best_azimuth_deg: float
    designator: RunwayDesignator
    meets_threshold: bool
    threshold_pct: float = DEFAULT_THRESHOLD
    coefficient_source: str = "derived"
    half_width: float = DEFAULT_HALF_WIDTH
    numbering: str = "standard"

    @property
    def best_coverage(self):
        return self.coverage[self.best_class]


def _check_dims(rose, table):
    if rose.cells.shape != table.rows.shape:
        raise DimensionMismatch(
            f"rose shape {rose.cells.shape} does not match table shape {table.rows.shape}")
    if tuple(rose.geometry.ring_radii) != tuple(table.geometry.ring_radii):
        raise DimensionMismatch("rose and table use different speed bands")


def coverage_vector(rose, table):
    """Coverage (percent of time) for every orientation class.

    ``coverage[i] = calm + sum_b sum_j table[b, (j - i) mod n] * cell[b, j]``.
    Moving the strip one class clockwise is the same as rotating the
    coefficient row one position to the right.  Sums run class by class and,
    within a class, band by band, so the classic tally is reproduced to the
    last bit.  ``above_max`` is neither calm nor covered.
    """
    _check_dims(rose, table)
    cells = rose.cells
    rows = table.rows
    n = cells.shape[1]
    i = np.arange(n)
    add = np.zeros(n)
    for j in range(n):
        offs = (j - i) % n
        for b in range(cells.shape[0]):
            add = add + rows[b, offs] * cells[b, j]
    return rose.calm + add


def best_orientation(coverage):
    """``(index, value)`` of the maximum, lowest index on ties."""
    if len(coverage) == 0:
        raise ValueError("empty coverage vector")
    best, n = coverage[0], 0
    for i, v in enumerate(coverage):
        if v > best:
            best, n = v, i
    return n, best


def runway_designator(azimuth_deg=None, mode="standard", class_index=None, classes=None):
    """Runway numbers for an orientation.

    ``standard`` rounds the azimuth to tens of degrees (half up), writing 36
    for 0.  ``paper`` reproduces the legacy 8-class table, which numbers
    class ``k`` as ``k``/``k + 18`` (and class 0 as 18-36).
    """
    if mode == "standard":
        n = math.floor(azimuth_deg / 10.0 + 0.5) % 36
        if n == 0:
            n = 36
        low = n if n <= 18 else n - 18
        return RunwayDesignator(low, low + 18)
    if mode == "paper":
        if classes is not None and classes.count != 8:
            raise CompatModeUnavailable("legacy runway numbering needs exactly 8 classes")
        if class_index is None or not 0 <= class_index < 8:
            raise ValueError(f"class index must be in 0..7, got {class_index}")
        if class_index == 0:
            return RunwayDesignator(18, 36)
        return RunwayDesignator(class_index, class_index + 18)
    raise ValueError(f"unknown numbering mode {mode!r}")


def apply_threshold(report, threshold=DEFAULT_THRESHOLD):
    if not 0 < threshold <= 100:
        raise ValueError(f"threshold must be in (0, 100], got {threshold}")
    return replace(report, meets_threshold=bool(report.best_coverage >= threshold),
                   threshold_pct=float(threshold))


def orient(rose, table, threshold=DEFAULT_THRESHOLD, numbering="standard"):
    """Validate ``rose``, score every orientation and pick the best one."""
    validate_rose(rose)
    cov = coverage_vector(rose, table)
    n, _ = best_orientation(cov)
    az = rose.classes.azimuth(n)
    report = CoverageReport(
        coverage=tuple(float(x) for x in cov),
        calm_pct=rose.calm,
        best_class=n,
        best_azimuth_deg=az,
        designator=runway_designator(az, numbering, n, rose.classes),
        meets_threshold=False,
        coefficient_source=table.source,
        half_width=table.half_width,
        numbering=numbering,
    )
    return apply_threshold(report, threshold)


@lru_cache(maxsize=4096)
def _pair_fraction(r_in, r_out, count, cell_off, partner_off, half_width):
    # cell and partner offsets are relative to the first runway
    w = 180.0 / count
    cell = AnnularSector.centered(r_in, r_out, cell_off * w, w)
    return union_overlap_fraction(cell, Strip(0.0, half_width),
                                  Strip(partner_off * w, half_width))


def pair_coverage(rose, class_a, class_b, half_width=DEFAULT_HALF_WIDTH):
    """Coverage of two runways together, from exact union areas."""
    if class_a == class_b:
        raise SameClass("a runway pair needs two different orientation classes")
    n = rose.classes.count
    add = 0.0
    for j in range(n):
        for b, (lo, hi) in enumerate(rose.geometry.bands()):
            pct = rose.cells[b, j]
            if pct == 0.0:
                continue
            f = _pair_fraction(lo, hi, n, (j - class_a) % n, (class_b - class_a) % n,
                               float(half_width))
            add += f * pct
    return float(rose.calm + add)


def best_pair(rose, primary_class, mode="perpendicular", half_width=DEFAULT_HALF_WIDTH):
    """Choose a second runway to go with ``primary_class``.

    ``perpendicular`` takes the class at right angles; ``exhaustive`` tries
    every other class and keeps the lowest-index best.  Returns
    ``((primary, partner), coverage)``.
    """
    n = rose.classes.count
    if mode == "perpendicular":
        if n % 2:
            raise OddClassCount(f"no perpendicular class with {n} classes")
        partner = (primary_class + n // 2) % n
        return (primary_class, partner), pair_coverage(rose, primary_class, partner, half_width)
    if mode == "exhaustive":
        partners = [k for k in range(n) if k != primary_class]
        values = [pair_coverage(rose, primary_class, k, half_width) for k in partners]
        idx, value = best_orientation(values)
        return (primary_class, partners[idx]), value
    raise ValueError(f"unknown pair mode {mode!r}")
