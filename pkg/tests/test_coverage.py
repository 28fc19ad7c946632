from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from runwayrose import (BandGeometry, OrientationClasses, WindRose, apply_threshold,
                        best_orientation, best_pair, coefficient_table, coverage_vector,
                        orient, pair_coverage, paper_table, runway_designator)
from runwayrose.coefficients import CoefficientTable
from runwayrose.errors import (CompatModeUnavailable, DimensionMismatch, OddClassCount,
                               SameClass, TotalExceeds100)

from conftest import random_rose
from oracles import PAPER_COEFF1, PAPER_COEFF2, direct_coverage, literal_listing_shuffle


def band2_rose():
    cells = np.zeros((3, 8))
    cells[1, 0] = 40.0
    cells[1, 4] = 60.0
    return WindRose(cells)


class TestPublishedTable:
    def test_rows_verbatim(self):
        t = paper_table()
        assert t.source == "paper"
        assert list(t.rows[0]) == [1.0] * 8
        assert list(t.rows[1]) == PAPER_COEFF1
        assert list(t.rows[2]) == PAPER_COEFF2

    @pytest.mark.parametrize("kw", [
        {"geometry": BandGeometry((5, 15, 30, 47))},
        {"classes": OrientationClasses(16)},
        {"half_width": 20.0},
    ])
    def test_only_for_defaults(self, kw):
        with pytest.raises(CompatModeUnavailable):
            paper_table(**kw)

    def test_entries_in_unit_interval(self):
        with pytest.raises(ValueError):
            CoefficientTable(np.full((3, 8), 1.5))


class TestCoverageVector:
    def test_all_calm(self):
        cov = coverage_vector(WindRose.zeros(), paper_table())
        assert list(cov) == [100.0] * 8

    @pytest.mark.parametrize("k", range(8))
    def test_inner_band_everywhere(self, k):
        cells = np.zeros((3, 8))
        cells[0, k] = 100.0
        assert list(coverage_vector(WindRose(cells), paper_table())) == [100.0] * 8

    def test_band2_example(self):
        cov = coverage_vector(band2_rose(), paper_table())
        # direct summation: 40 * 1 + 60 * 0.626081 and 40 * 0.626081 + 60 * 1
        assert cov[0] == pytest.approx(77.56486, abs=1e-9)
        assert cov[4] == pytest.approx(85.04324, abs=1e-9)
        expected = direct_coverage(band2_rose().cells.tolist(), paper_table().rows.tolist(), 0.0)
        np.testing.assert_allclose(cov, expected, atol=1e-12)

    def test_band2_best_is_diagonal(self):
        # both cells sit two classes from the 45 deg line, where coefficients are 1
        cov = coverage_vector(band2_rose(), paper_table())
        assert best_orientation(cov) == (2, 100.0)

    def test_above_max_not_covered(self):
        cells = np.zeros((3, 8))
        cells[0, 0] = 50.0
        r = WindRose(cells, above_max=10.0)
        cov = coverage_vector(r, coefficient_table())
        assert np.all(cov == pytest.approx(90.0))

    def test_dimension_mismatch(self):
        r = WindRose.zeros(classes=OrientationClasses(12))
        with pytest.raises(DimensionMismatch):
            coverage_vector(r, paper_table())
        r = WindRose.zeros(geometry=BandGeometry((5, 15, 30, 47)))
        with pytest.raises(DimensionMismatch):
            coverage_vector(r, paper_table())

    def test_against_direct_summation(self, rng):
        for count in (4, 8, 13):
            classes = OrientationClasses(count)
            table = coefficient_table(classes=classes)
            for _ in range(20):
                r = random_rose(rng, 3, count)
                expected = direct_coverage(r.cells.tolist(), table.rows.tolist(), r.calm)
                np.testing.assert_allclose(coverage_vector(r, table), expected, atol=1e-9)


rose_fill = st.floats(0, 99.9)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), rose_fill)
def test_bounds(seed, fill):
    r = random_rose(np.random.default_rng(seed), fill=fill)
    r = WindRose(r.cells * 0.9, above_max=0.05 * fill)
    for table in (paper_table(), coefficient_table()):
        cov = coverage_vector(r, table)
        assert np.all(cov >= r.calm - 1e-9)
        assert np.all(cov <= 100.0 - r.above_max + 1e-9)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2), st.integers(0, 7), st.floats(0, 5))
def test_cell_increase_bounded(seed, band, cls, delta):
    r = random_rose(np.random.default_rng(seed), fill=90.0)
    cells = r.cells.copy()
    cells[band, cls] += delta
    r2 = WindRose(cells)
    table = coefficient_table()
    diff = coverage_vector(r2, table) - coverage_vector(r, table)
    assert np.all(diff <= delta + 1e-9)


def test_literal_listing_shuffle_is_not_a_rotation():
    c = [1, 1, 1, 1, 1, 0.831353, 0.626081, 0.831353]
    assert literal_listing_shuffle(c) != c[-1:] + c[:-1]


class TestBestOrientation:
    def test_example(self):
        assert best_orientation([77.6, 70, 70, 70, 85.0, 70, 70, 70]) == (4, 85.0)

    def test_ties(self):
        assert best_orientation([100.0] * 8) == (0, 100.0)
        assert best_orientation([10, 20, 20]) == (1, 20)

    def test_empty(self):
        with pytest.raises(ValueError):
            best_orientation([])


class TestDesignator:
    @pytest.mark.parametrize("az, text", [
        (0, "18-36"), (90, "09-27"), (22.5, "02-20"), (45, "05-23"), (4.9, "18-36"),
        (5.0, "01-19"), (175, "18-36"), (157.5, "16-34"), (135, "14-32"), (180, "18-36")])
    def test_standard(self, az, text):
        assert str(runway_designator(az)) == text

    @pytest.mark.parametrize("k, text", [
        (0, "18-36"), (1, "01-19"), (2, "02-20"), (3, "03-21"), (4, "04-22"),
        (5, "05-23"), (6, "06-24"), (7, "07-25")])
    def test_legacy_numbers(self, k, text):
        assert str(runway_designator(k * 22.5, "paper", k)) == text

    def test_legacy_numbers_need_8(self):
        with pytest.raises(CompatModeUnavailable):
            runway_designator(15, "paper", 1, OrientationClasses(12))

    def test_numbers_differ_by_18(self):
        for az in np.linspace(0, 179.9, 500):
            d = runway_designator(float(az))
            assert d.high - d.low == 18


class TestThreshold:
    def _report(self, best):
        rep = orient(WindRose.zeros(), coefficient_table())
        return replace(rep, coverage=(best,) + (best - 1.0,) * 7)

    @pytest.mark.parametrize("best, meets", [(96.2, True), (85.04324, False), (95.0, True)])
    def test_cases(self, best, meets):
        rep = self._report(best)
        assert rep.best_coverage == pytest.approx(best, abs=1e-12)
        assert apply_threshold(rep, 95.0).meets_threshold is meets

    def test_exact_boundary(self):
        rep = orient(WindRose.zeros(), paper_table())
        assert apply_threshold(rep, 100.0).meets_threshold

    def test_monotone(self):
        reps = [self._report(b) for b in np.linspace(50, 100, 41)]
        flags = [apply_threshold(r, 95.0).meets_threshold for r in reps]
        assert flags == sorted(flags)

    def test_bad_threshold(self):
        with pytest.raises(ValueError):
            apply_threshold(self._report(90), 0)


class TestOrient:
    def test_band2_report(self):
        rep = orient(band2_rose(), paper_table())
        assert rep.best_class == 2
        assert rep.best_azimuth_deg == 45.0
        assert str(rep.designator) == "05-23"
        assert rep.meets_threshold
        assert rep.coverage[4] == pytest.approx(85.04324, abs=1e-9)

    def test_rejects_over_100(self):
        cells = np.zeros((3, 8))
        cells[0, 0] = 120.0
        with pytest.raises(TotalExceeds100):
            orient(WindRose(cells), paper_table())


class TestPairs:
    def test_same_class(self):
        with pytest.raises(SameClass):
            pair_coverage(band2_rose(), 3, 3)

    def test_inner_only_equals_single(self):
        cells = np.zeros((3, 8))
        cells[0] = 10.0
        r = WindRose(cells)
        assert pair_coverage(r, 0, 5) == pytest.approx(coverage_vector(r, coefficient_table())[0])

    def test_perpendicular_example(self):
        cells = np.zeros((3, 8))
        cells[2, 0] = cells[2, 4] = 50.0
        # each cell lies along one of the two runways
        assert pair_coverage(WindRose(cells), 0, 4) == 100.0
        assert best_pair(WindRose(cells), 0, "perpendicular") == ((0, 4), 100.0)

    def test_exhaustive_picks_neighbour(self):
        cells = np.zeros((3, 8))
        cells[2, 0] = 50.0
        cells[2, 1] = 40.0
        r = WindRose(cells)
        primary, _ = best_orientation(coverage_vector(r, coefficient_table()))
        assert primary == 0
        (a, b), value = best_pair(r, primary, "exhaustive")
        assert (a, b) == (0, 1)
        assert value == pytest.approx(100.0, abs=1e-12)
        _, perp = best_pair(r, primary, "perpendicular")
        assert perp < value

    def test_odd_count(self):
        r = WindRose.zeros(classes=OrientationClasses(7))
        with pytest.raises(OddClassCount):
            best_pair(r, 0, "perpendicular")
        assert best_pair(r, 0, "exhaustive") == ((0, 1), 100.0)

    def test_pair_at_least_each(self, rng):
        table = coefficient_table()
        for _ in range(10):
            r = random_rose(rng)
            cov = coverage_vector(r, table)
            for b in range(1, 8):
                p = pair_coverage(r, 0, b)
                assert p >= max(cov[0], cov[b]) - 1e-9
                assert p <= 100.0 + 1e-9
