"""Binned wind data: speed bands, orientation classes and the wind rose.

Directions are meteorological FROM-directions in degrees clockwise from
north.  A runway line serves winds from ``theta`` and ``theta + 180``, so
directions are folded modulo 180 degrees before they are assigned to an
orientation class.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .errors import (BadGeometry, DimensionMismatch, EmptyInput,
                     NegativeCell, NegativeWeight, TotalExceeds100)

DEFAULT_RINGS = (6.4, 15.0, 30.0, 47.0)
DEFAULT_CLASSES = 8

#: Tolerance used when checking that a rose does not exceed 100 percent.
TOTAL_TOL = 1e-9

_COMPASS16 = ("N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE",
              "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW")


@dataclass(frozen=True)
class BandGeometry:
    """Ring radii (km/h) splitting wind speed into half-open bands.

    The first ring is the calm threshold; winds slower than it are calm.
    Band ``k`` is ``[ring_radii[k], ring_radii[k + 1])``.
    """

    ring_radii: tuple = DEFAULT_RINGS

    def __post_init__(self):
        radii = tuple(float(r) for r in self.ring_radii)
        if len(radii) < 2:
            raise BadGeometry("need at least two ring radii (one band)")
        if not all(math.isfinite(r) for r in radii) or radii[0] < 0:
            raise BadGeometry(f"ring radii must be finite and >= 0: {radii}")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise BadGeometry(f"ring radii must be strictly increasing: {radii}")
        object.__setattr__(self, "ring_radii", radii)

    @property
    def calm_threshold(self):
        return self.ring_radii[0]

    @property
    def n_bands(self):
        return len(self.ring_radii) - 1

    @property
    def outer_radius(self):
        return self.ring_radii[-1]

    def bands(self):
        """List of ``(lo, hi)`` speed pairs, innermost first."""
        return list(zip(self.ring_radii, self.ring_radii[1:]))

    def band_of(self, speed):
        """Band index of ``speed``; ``-1`` for calm, ``n_bands`` above the outer ring."""
        if speed < self.ring_radii[0]:
            return -1
        for k in range(self.n_bands):
            if speed < self.ring_radii[k + 1]:
                return k
        return self.n_bands


@dataclass(frozen=True)
class OrientationClasses:
    """``count`` runway lines at uniform spacing over [0, 180) degrees."""

    count: int = DEFAULT_CLASSES

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 2:
            raise BadGeometry(f"class count must be an integer >= 2, got {self.count}")
        object.__setattr__(self, "count", int(self.count))

    @property
    def width(self):
        """Angular width of one class sector, in degrees."""
        return 180.0 / self.count

    def azimuth(self, k):
        return k * self.width

    def azimuths(self):
        return [self.azimuth(k) for k in range(self.count)]

    def class_of(self, direction_deg):
        # half-open [axis - w/2, axis + w/2); the 180 -> 0 wrap is the modulo
        folded = math.fmod(direction_deg, 180.0)
        if folded < 0:
            folded += 180.0
        k = math.floor((folded + self.width / 2.0) / self.width)
        return k % self.count

    def name(self, k):
        """Compass name of the runway line, e.g. ``"NNE-SSW"``.

        Falls back to the two azimuths when the line is not one of the
        16 compass points.
        """
        az = self.azimuth(k)
        pos = az / 22.5
        if abs(pos - round(pos)) < 1e-9:
            i = int(round(pos))
            return f"{_COMPASS16[i % 16]}-{_COMPASS16[(i + 8) % 16]}"
        return f"{az:05.1f}-{az + 180.0:05.1f}"


@dataclass(frozen=True, eq=False)
class WindRose:
    """Percent of observation time per (band, class) cell.

    ``cells`` has shape ``(n_bands, n_classes)``.  ``above_max`` holds winds
    at or beyond the outer ring.  The calm share is not stored: it is
    whatever is left of 100 percent.
    """

    cells: np.ndarray
    geometry: BandGeometry = field(default_factory=BandGeometry)
    classes: OrientationClasses = field(default_factory=OrientationClasses)
    above_max: float = 0.0

    def __post_init__(self):
        cells = np.array(self.cells, dtype=float)
        if cells.ndim != 2:
            raise DimensionMismatch(f"cells must be 2-D, got shape {cells.shape}")
        expected = (self.geometry.n_bands, self.classes.count)
        if cells.shape != expected:
            raise DimensionMismatch(f"cells shape {cells.shape} != {expected}")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "above_max", float(self.above_max))

    @classmethod
    def zeros(cls, geometry=None, classes=None):
        geometry = geometry or BandGeometry()
        classes = classes or OrientationClasses()
        return cls(np.zeros((geometry.n_bands, classes.count)), geometry, classes)

    @property
    def total(self):
        # class by class, band by band: the order the classic tally uses
        s = 0.0
        for x in self.cells.T.ravel().tolist():
            s = s + x
        return s + self.above_max

    @property
    def calm(self):
        return 100.0 - self.total

    def rotated(self, k):
        """Rose with every class column moved ``k`` classes clockwise."""
        return WindRose(np.roll(self.cells, k, axis=1), self.geometry,
                        self.classes, self.above_max)

    def __eq__(self, other):
        if not isinstance(other, WindRose):
            return NotImplemented
        return (self.geometry == other.geometry and self.classes == other.classes
                and self.above_max == other.above_max
                and np.array_equal(self.cells, other.cells))

    __hash__ = None


@dataclass(frozen=True)
class RawObservation:
    direction_deg: float
    speed: float
    weight: float = 1.0

    def __post_init__(self):
        d = float(self.direction_deg)
        if not math.isfinite(d):
            raise ValueError(f"direction must be finite, got {d}")
        d = math.fmod(d, 360.0)
        if d < 0:
            d += 360.0
        if d >= 360.0:
            d = 0.0
        if not self.speed >= 0:
            raise ValueError(f"speed must be >= 0, got {self.speed}")
        object.__setattr__(self, "direction_deg", d)
        object.__setattr__(self, "speed", float(self.speed))
        object.__setattr__(self, "weight", float(self.weight))


def validate_rose(rose):
    """Check a rose's percentages and return it unchanged.

    Raises
    ------
    NegativeCell
        If any cell (or ``above_max``) is negative or not finite.
    TotalExceeds100
        If the recorded percentages add up to more than 100.
    """
    cells = rose.cells
    if not np.all(np.isfinite(cells)) or not math.isfinite(rose.above_max):
        raise NegativeCell("cell percentages must be finite")
    if np.any(cells < 0) or rose.above_max < 0:
        band, cls = np.argwhere(cells < 0)[0] if np.any(cells < 0) else (None, None)
        where = f" (band {band}, class {cls})" if band is not None else " (above_max)"
        raise NegativeCell(f"negative percentage{where}")
    total = rose.total
    if total > 100.0 + TOTAL_TOL:
        raise TotalExceeds100(
            f"Coverage can't be greater than 100: recorded percentages sum to {total:g}")
    return rose


def bin_observations(observations, geometry=None, classes=None, storm_as_calm=False):
    """Aggregate raw observations into a :class:`WindRose`.

    Each observation contributes its share of the total weight (times 100)
    to one cell.  Calm winds contribute to no cell.  Winds at or above the
    outer ring go to ``above_max``, or to calm when ``storm_as_calm`` is set
    (which is what an unrecorded storm amounts to in the classic tally).
    """
    geometry = geometry or BandGeometry()
    classes = classes or OrientationClasses()
    obs = list(observations)
    weights = np.array([o.weight for o in obs], dtype=float)
    if np.any(weights < 0):
        raise NegativeWeight("observation weights must be >= 0")
    total_w = weights.sum()
    if not obs or total_w <= 0:
        raise EmptyInput("no observations")

    acc = np.zeros((geometry.n_bands, classes.count))
    above = 0.0
    for o in obs:
        if o.weight == 0:
            continue
        band = geometry.band_of(o.speed)
        if band < 0:
            continue
        if band == geometry.n_bands:
            if not storm_as_calm:
                above += o.weight
            continue
        acc[band, classes.class_of(o.direction_deg)] += o.weight
    return WindRose(acc * (100.0 / total_w), geometry, classes,
                    above * (100.0 / total_w))
