"""Data points, validated time series and the embedded GDP fixtures."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySeries, NonFiniteValue, NonIncreasingAbscissa, UnknownFixture


@dataclass(frozen=True)
class DataPoint:
    t: float
    y: float


@dataclass(frozen=True)
class TimeSeries:
    """Ordered, strictly increasing sequence of points.

    Build instances through :func:`validate_series`; the constructor itself
    does not check the invariants.
    """

    points: tuple[DataPoint, ...]
    name: str = ""

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> DataPoint:
        return self.points[i]

    @property
    def t(self) -> np.ndarray:
        return np.array([p.t for p in self.points], dtype=float)

    @property
    def y(self) -> np.ndarray:
        return np.array([p.y for p in self.points], dtype=float)

    @classmethod
    def from_arrays(cls, t: Iterable[float], y: Iterable[float], name: str = "") -> "TimeSeries":
        return validate_series([DataPoint(float(a), float(b)) for a, b in zip(t, y, strict=True)], name=name)


def validate_series(points: Sequence[DataPoint] | TimeSeries, name: str | None = None) -> TimeSeries:
    """Check the series invariants and return an immutable :class:`TimeSeries`.

    Raises
    ------
    EmptySeries
        No points given.
    NonFiniteValue
        Some abscissa or ordinate is NaN or infinite.
    NonIncreasingAbscissa
        Abscissas are not strictly increasing (duplicates included).
    """
    if isinstance(points, TimeSeries):
        if name is None:
            name = points.name
        points = points.points
    pts = tuple(DataPoint(float(p.t), float(p.y)) for p in points)
    if not pts:
        raise EmptySeries("series has no points")
    for i, p in enumerate(pts):
        if not (math.isfinite(p.t) and math.isfinite(p.y)):
            raise NonFiniteValue(f"point {i} is not finite: ({p.t}, {p.y})")
    for i in range(len(pts) - 1):
        if not pts[i].t < pts[i + 1].t:
            raise NonIncreasingAbscissa(
                f"abscissa at index {i + 1} ({pts[i + 1].t}) does not exceed its predecessor ({pts[i].t})"
            )
    return TimeSeries(pts, name or "")


# Table 1: year numbers 1..32 for 1991..2022, billion USD (decimal commas normalized).
_GDP_HU_TABLE1 = (
    34.75, 38.73, 40.12, 43.17, 46.43, 46.66, 47.3, 48.71,
    48.0, 49.66, 55.66, 68.33, 85.33, 100.66, 110.66, 122.66,
    140.19, 158.33, 131.07, 132.18, 141.94, 128.81, 135.68, 141.03,
    125.17, 128.61, 143.11, 160.75, 164.02, 157.23, 182.28, 178.79,
)

# Verification table interpolated by the 15-term model: year numbers 1..30 for 1992..2021.
# The blank 1991 (t=0) and 2022 (t=31) rows are left out.
_GDP_HU_EQ1 = (
    37.33, 40.33, 43.0, 45.0, 46.33, 47.0, 48.0, 48.0, 49.66, 55.66,
    68.33, 85.33, 100.66, 110.66, 122.66, 137.66, 143.0, 140.33, 134.66, 133.66,
    134.66, 134.66, 133.66, 131.33, 132.0, 143.66, 155.66, 160.33, 167.66, 172.33,
)

FIXTURE_YEAR_ORIGIN = {"gdp_hu_table1": 1990, "gdp_hu_eq1": 1991}

FIXTURES = {
    "gdp_hu_table1": _GDP_HU_TABLE1,
    "gdp_hu_eq1": _GDP_HU_EQ1,
}


def load_fixture(name: str) -> TimeSeries:
    """Return one of the embedded series (``gdp_hu_table1`` or ``gdp_hu_eq1``)."""
    try:
        values = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; available: {', '.join(sorted(FIXTURES))}") from None
    return validate_series([DataPoint(float(i + 1), v) for i, v in enumerate(values)], name=name)
