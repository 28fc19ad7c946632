import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from runwayrose import OrientationClasses, WindRose  # noqa: E402


def random_rose(rng, n_bands=3, n_classes=8, fill=None):
    """Random valid rose with total in [0, 100)."""
    cells = rng.random((n_bands, n_classes)) * rng.random((n_bands, n_classes))
    fill = rng.uniform(0, 99.9) if fill is None else fill
    cells = cells / cells.sum() * fill
    return WindRose(cells, classes=OrientationClasses(n_classes))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
