"""Per-band, per-offset overlap coefficient tables."""

from dataclasses import dataclass, field
import csv
import io

import numpy as np

from .errors import CompatModeUnavailable, DimensionMismatch
from .rose import DEFAULT_CLASSES, DEFAULT_RINGS, BandGeometry, OrientationClasses

DEFAULT_HALF_WIDTH = 25.0

# AutoCAD-measured constants of the classic 8-direction, 50 km/h template
# method.  The innermost band has an implicit coefficient of 1.
PAPER_ROWS = (
    (1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0),
    (1.0, 1.0, 1.0, 0.831353, 0.626081, 0.831353, 1.0, 1.0),
    (1.0, 1.0, 0.358123, 0.0, 0.0, 0.0, 0.358123, 1.0),
)

SOURCES = ("derived", "paper")


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """Overlap fractions indexed ``[band, offset]``.

    ``rows[b, k]`` is the fraction of a band-``b`` cell lying inside a strip
    whose axis is ``k`` classes away from the cell.
    """

    rows: np.ndarray
    source: str = "derived"
    geometry: BandGeometry = field(default_factory=BandGeometry)
    classes: OrientationClasses = field(default_factory=OrientationClasses)
    half_width: float = DEFAULT_HALF_WIDTH

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float)
        if rows.shape != (self.geometry.n_bands, self.classes.count):
            raise DimensionMismatch(
                f"table shape {rows.shape} != {(self.geometry.n_bands, self.classes.count)}")
        if np.any(rows < 0) or np.any(rows > 1):
            raise ValueError("coefficients must lie in [0, 1]")
        if self.source not in SOURCES:
            raise ValueError(f"unknown coefficient source {self.source!r}")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    def to_csv(self):
        """CSV text: one row per band, one column per offset, 9 significant digits."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["band_lo", "band_hi"] + [f"offset_{k}" for k in range(self.classes.count)])
        for (lo, hi), row in zip(self.geometry.bands(), self.rows):
            w.writerow([f"{lo:.9g}", f"{hi:.9g}"] + [f"{x:.9g}" for x in row])
        return buf.getvalue()

    def to_dict(self):
        return {
            "source": self.source,
            "bands": list(self.geometry.ring_radii),
            "classes": self.classes.count,
            "crosswind_half_width_kmph": self.half_width,
            "rows": [[float(f"{x:.9g}") for x in row] for row in self.rows],
        }


def is_default_setup(geometry, classes, half_width):
    return (tuple(geometry.ring_radii) == DEFAULT_RINGS
            and classes.count == DEFAULT_CLASSES
            and float(half_width) == DEFAULT_HALF_WIDTH)


def paper_table(geometry=None, classes=None, half_width=DEFAULT_HALF_WIDTH):
    """The published constant table; only defined for the default setup."""
    geometry = geometry or BandGeometry()
    classes = classes or OrientationClasses()
    if not is_default_setup(geometry, classes, half_width):
        raise CompatModeUnavailable(
            "the published template coefficients exist only for rings 6.4/15/30/47 km/h, "
            "8 classes and a 25 km/h crosswind half-width")
    return CoefficientTable(np.array(PAPER_ROWS), "paper", geometry, classes, half_width)

