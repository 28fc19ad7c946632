import numpy as np
import pytest

from runwayrose import WindRose, read_observations, read_rose, write_rose
from runwayrose.errors import ParseError
from runwayrose.formats import is_binned, load_rose_or_observations

from conftest import random_rose


def test_read_observations():
    text = "# station X\ndirection_deg,speed_kmph,weight\n0,10,2\n\n# gap\n190.5,20,1\n"
    obs = read_observations(text)
    assert [(o.direction_deg, o.speed, o.weight) for o in obs] == [(0, 10, 2), (190.5, 20, 1)]


def test_default_weight():
    obs = read_observations("direction_deg,speed_kmph\n10,3\n")
    assert obs[0].weight == 1.0


@pytest.mark.parametrize("text, line, msg", [
    ("direction_deg,speed_kmph\n0,10\n45,-3\n", 3, "negative speed"),
    ("direction_deg,speed_kmph\n0,abc\n", 2, "not a number"),
    ("direction_deg,speed_kmph\n0,10,1\n", 2, "expected 2 fields"),
    ("direction_deg,speed_kmph,weight\n0,10,-1\n", 2, "negative weight"),
    ("dir,speed\n0,10\n", 1, "expected header"),
    ("direction_deg,speed_kmph\n0,nan\n", 2, "not finite"),
])
def test_observation_errors(text, line, msg):
    with pytest.raises(ParseError, match=msg) as info:
        read_observations(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_no_observations():
    with pytest.raises(ParseError, match="no observations"):
        read_observations("direction_deg,speed_kmph\n# nothing\n")


def test_rose_round_trip(rng):
    for _ in range(20):
        r = random_rose(rng)
        r = WindRose(r.cells * 0.95, above_max=float(rng.uniform(0, 4)))
        back = read_rose(write_rose(r))
        assert back == r


def test_rose_text_layout():
    cells = np.zeros((3, 8))
    cells[1, 2] = 12.5
    text = write_rose(WindRose(cells, above_max=1.5))
    lines = text.splitlines()
    assert lines[0] == "# bands=6.4,15.0,30.0,47.0 classes=8"
    assert lines[2] == "0.0,0.0,12.5,0.0,0.0,0.0,0.0,0.0"
    assert lines[-1] == "above_max,1.5"


@pytest.mark.parametrize("text, msg", [
    ("1,2,3\n", "expected header"),
    ("# bands=6.4,15 classes=8\n1,2\n", "expected 8 values"),
    ("# bands=6.4,15 classes=2\n1,2\n3,4\n", "more than 1 band rows"),
    ("# bands=6.4,15,30 classes=2\n1,2\n", "expected 2 band rows"),
    ("# bands=15,6.4 classes=2\n1,2\n", "strictly increasing"),
])
def test_rose_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        read_rose(text)


def test_detects_format():
    assert is_binned("\n# bands=6.4,15 classes=2\n1,2\n")
    assert not is_binned("direction_deg,speed_kmph\n")
    r = load_rose_or_observations("direction_deg,speed_kmph\n0,10\n")
    assert r.cells[0, 0] == 100.0
