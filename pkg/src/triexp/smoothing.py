"""Triangle-centroid smoothing.

Each run of three consecutive points spans a (possibly degenerate) triangle;
the series is replaced by the centroids of those triangles, so ``n`` points
become ``n - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidOptions, SeriesTooShort
from .series import DataPoint, TimeSeries, validate_series


@dataclass(frozen=True)
class SmoothingConfig:
    passes: int = 1

    def __post_init__(self):
        if isinstance(self.passes, bool) or not isinstance(self.passes, int) or self.passes < 1:
            raise InvalidOptions(f"passes must be a positive integer, got {self.passes!r}")


def centroid(p1: DataPoint, p2: DataPoint, p3: DataPoint) -> DataPoint:
    """Intersection of the medians of the triangle p1 p2 p3."""
    return DataPoint((p1.t + p2.t + p3.t) / 3.0, (p1.y + p2.y + p3.y) / 3.0)


def smooth_once(series: TimeSeries) -> TimeSeries:
    pts = series.points
    if len(pts) < 3:
        raise SeriesTooShort(f"triangle smoothing needs at least 3 points, got {len(pts)}")
    out = [centroid(pts[k], pts[k + 1], pts[k + 2]) for k in range(len(pts) - 2)]
    return validate_series(out, name=series.name)


def smooth(series: TimeSeries, config: SmoothingConfig | None = None) -> TimeSeries:
    config = config or SmoothingConfig()
    for _ in range(config.passes):
        series = smooth_once(series)
    return series
