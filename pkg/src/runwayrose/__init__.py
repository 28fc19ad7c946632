"""Runway orientation from Type-II wind rose data.

Coverage of each candidate runway line is the calm share plus, for every
wind-rose cell, the cell's percentage times the fraction of the cell that
falls inside the runway's crosswind strip.  Those fractions come either
from exact geometry (:func:`coefficient_table`) or from the published
8-class template constants (:func:`paper_table`).
"""

from .coefficients import CoefficientTable, paper_table
from .coverage import (CoverageReport, RunwayDesignator, apply_threshold, best_orientation,
                       best_pair, coverage_vector, orient, pair_coverage, runway_designator)
from .errors import *  # noqa: F401,F403
from .formats import read_observations, read_rose, write_rose
from .geometry import (AnnularSector, Strip, coefficient_table, mc_overlap_oracle,
                       radial_bound, sector_strip_overlap_fraction, union_overlap_fraction)
from .render import RenderOptions, render_rose_svg
from .rose import (BandGeometry, OrientationClasses, RawObservation, WindRose,
                   bin_observations, validate_rose)

__version__ = "0.1.0"
