import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triexp.errors import EmptySeries, NonFiniteValue, NonIncreasingAbscissa, UnknownFixture
from triexp.series import DataPoint, TimeSeries, load_fixture, validate_series


def test_two_points_from_results_table():
    s = validate_series([DataPoint(1, 37.33), DataPoint(2, 40.33)])
    assert len(s) == 2
    assert s[0] == DataPoint(1.0, 37.33)


def test_single_point():
    assert len(validate_series([DataPoint(1, 1)])) == 1


@pytest.mark.parametrize(
    "points, error",
    [
        ([DataPoint(2, 5), DataPoint(1, 6)], NonIncreasingAbscissa),
        ([DataPoint(1, 5), DataPoint(1, 6)], NonIncreasingAbscissa),
        ([DataPoint(1, math.nan)], NonFiniteValue),
        ([DataPoint(math.inf, 1)], NonFiniteValue),
        ([], EmptySeries),
    ],
)
def test_invalid_series(points, error):
    with pytest.raises(error):
        validate_series(points)


def test_fixture_values():
    eq1 = load_fixture("gdp_hu_eq1")
    assert DataPoint(17, 143) in eq1.points
    assert eq1[0] == DataPoint(1, 37.33)
    assert eq1[29] == DataPoint(30, 172.33)
    t1 = load_fixture("gdp_hu_table1")
    assert t1[0] == DataPoint(1, 34.75)
    assert t1[2] == DataPoint(3, 40.12)
    assert t1[31] == DataPoint(32, 178.79)


def test_fixture_lengths():
    assert len(load_fixture("gdp_hu_table1")) == 32
    assert len(load_fixture("gdp_hu_eq1")) == 30


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        load_fixture("nonexistent")


@pytest.mark.parametrize("name", ["gdp_hu_table1", "gdp_hu_eq1"])
def test_fixtures_validate_idempotently(name):
    s = load_fixture(name)
    assert validate_series(s) == s
    assert validate_series(s.points, name=name) == s


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=40, unique=True), st.data())
def test_validate_is_idempotent(ts, data):
    ts = sorted(ts)
    ys = data.draw(st.lists(st.floats(-1e6, 1e6), min_size=len(ts), max_size=len(ts)))
    once = TimeSeries.from_arrays(ts, ys)
    assert validate_series(once) == once
