"""Text formats for raw observations and binned roses.

Raw observations::

    # optional comments
    direction_deg,speed_kmph[,weight]
    350,12.5
    10,31,2

Binned rose::

    # bands=6.4,15,30,47 classes=8
    <n percentages for band 0>
    ...
    above_max,<pct>        (optional)

Floats are written with ``repr`` so a binned rose reads back exactly.
"""

import csv
import io
import math
import re

import numpy as np

from .errors import ParseError
from .rose import BandGeometry, OrientationClasses, RawObservation, WindRose, bin_observations

_HEADER_RE = re.compile(r"^#\s*bands=([^\s]+)\s+classes=(\d+)\s*$")


def _float(text, lineno, what):
    try:
        v = float(text)
    except ValueError:
        raise ParseError(f"{what}: not a number: {text.strip()!r}", lineno) from None
    if not math.isfinite(v):
        raise ParseError(f"{what}: not finite: {text.strip()!r}", lineno)
    return v


def read_observations(text):
    """Parse raw observation CSV text into a list of :class:`RawObservation`."""
    obs = []
    header = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([stripped]))]
        if header is None:
            header = fields
            if header[:2] != ["direction_deg", "speed_kmph"] or header[2:] not in ([], ["weight"]):
                raise ParseError(
                    "expected header 'direction_deg,speed_kmph[,weight]', got "
                    f"{stripped!r}", lineno)
            continue
        if len(fields) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(fields)}", lineno)
        direction = _float(fields[0], lineno, "direction_deg")
        speed = _float(fields[1], lineno, "speed_kmph")
        weight = _float(fields[2], lineno, "weight") if len(fields) == 3 else 1.0
        if speed < 0:
            raise ParseError(f"negative speed {speed:g}", lineno)
        if weight < 0:
            raise ParseError(f"negative weight {weight:g}", lineno)
        obs.append(RawObservation(direction, speed, weight))
    if header is None:
        raise ParseError("missing header 'direction_deg,speed_kmph[,weight]'")
    if not obs:
        raise ParseError("no observations")
    return obs


def is_binned(text):
    """True when ``text`` starts with a binned-rose header line."""
    for line in text.splitlines():
        if line.strip():
            return bool(_HEADER_RE.match(line.strip()))
    return False


def read_rose(text):
    """Parse binned rose CSV text."""
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise ParseError("empty rose file")
    lineno, first = lines[0]
    m = _HEADER_RE.match(first)
    if not m:
        raise ParseError("expected header '# bands=<r0,r1,...> classes=<n>'", lineno)
    radii = tuple(_float(r, lineno, "bands") for r in m.group(1).split(","))
    try:
        geometry = BandGeometry(radii)
        classes = OrientationClasses(int(m.group(2)))
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None

    rows = []
    above = 0.0
    for lineno, line in lines[1:]:
        if line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if fields[0] == "above_max":
            if len(fields) != 2:
                raise ParseError("above_max row needs exactly one value", lineno)
            above = _float(fields[1], lineno, "above_max")
            continue
        if len(rows) == geometry.n_bands:
            raise ParseError(f"more than {geometry.n_bands} band rows", lineno)
        if len(fields) != classes.count:
            raise ParseError(f"expected {classes.count} values, got {len(fields)}", lineno)
        rows.append([_float(f, lineno, f"band {len(rows)}") for f in fields])
    if len(rows) != geometry.n_bands:
        raise ParseError(f"expected {geometry.n_bands} band rows, got {len(rows)}")
    return WindRose(np.array(rows), geometry, classes, above)


def write_rose(rose):
    """Binned rose CSV text; reads back bit-identical through :func:`read_rose`."""
    buf = io.StringIO()
    bands = ",".join(repr(r) for r in rose.geometry.ring_radii)
    buf.write(f"# bands={bands} classes={rose.classes.count}\n")
    for row in rose.cells:
        buf.write(",".join(repr(float(x)) for x in row) + "\n")
    if rose.above_max:
        buf.write(f"above_max,{rose.above_max!r}\n")
    return buf.getvalue()


def rose_to_dict(rose):
    return {
        "bands": list(rose.geometry.ring_radii),
        "classes": rose.classes.count,
        "cells": rose.cells.tolist(),
        "above_max": rose.above_max,
        "calm": rose.calm,
    }


def load_rose_or_observations(text, geometry=None, classes=None, storm_as_calm=False):
    """Read either format; raw observations are binned with the given setup."""
    if is_binned(text):
        return read_rose(text)
    return bin_observations(read_observations(text), geometry, classes, storm_as_calm)
