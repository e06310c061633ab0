"""Uniform 3-axis time series and the numeric transforms built on it.

Axis convention follows the vehicle frame used for all recordings:
X lateral, Y along the direction of motion, Z vertical. Raw device
logs are irregular, so everything downstream works on a
:class:`UniformSeries` produced by :func:`resample`.

Every operation here is a pure function over immutable values
(channel arrays are frozen after construction), so series can be
shared across threads and processed in parallel without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptySignal,
    InvalidNormalization,
    InvalidWindow,
    NonMonotonicTime,
    SignalTooShort,
)

# Unit tags carried by every series. Acceleration is m/s^2, jerk m/s^3,
# normalized values are dimensionless.
ACCELERATION = "acceleration"
JERK = "jerk"
NORMALIZED = "normalized"

_UNIT_TAGS = (ACCELERATION, JERK, NORMALIZED)

# Default grid rate. Recorded trips run at 50 samples/s; the whole
# pipeline is rate-agnostic but tests and CLI defaults assume this.
DEFAULT_RATE_HZ = 50.0


@dataclass(frozen=True)
class Sample:
    """One raw accelerometer reading at ``t`` seconds from journey start."""

    t: float
    ax: float
    ay: float
    az: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.t) or self.t < 0:
            raise ValueError(f"sample time must be finite and non-negative, got {self.t}")
        for name in ("ax", "ay", "az"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"sample {name} must be finite")


def _frozen_channel(values) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    if arr.ndim != 1:
        raise ValueError("channel must be one-dimensional")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class UniformSeries:
    """Three equal-length channels on a uniform grid.

    Sample ``k`` has timestamp ``start_t + k / rate_hz``.
    """

    start_t: float
    rate_hz: float
    ax: np.ndarray
    ay: np.ndarray
    az: np.ndarray
    unit_tag: str

    def __post_init__(self) -> None:
        if not math.isfinite(self.rate_hz) or self.rate_hz <= 0:
            raise ValueError(f"rate_hz must be positive, got {self.rate_hz}")
        if self.unit_tag not in _UNIT_TAGS:
            raise ValueError(f"unknown unit tag {self.unit_tag!r}")
        for name in ("ax", "ay", "az"):
            object.__setattr__(self, name, _frozen_channel(getattr(self, name)))
        n = len(self.ax)
        if n < 2:
            raise ValueError("series needs at least 2 samples per channel")
        if len(self.ay) != n or len(self.az) != n:
            raise ValueError("channel lengths differ")

    def __len__(self) -> int:
        return len(self.ax)

    @property
    def times(self) -> np.ndarray:
        return self.start_t + np.arange(len(self)) / self.rate_hz

    def channels(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.ax, self.ay, self.az

    def with_channels(self, ax, ay, az, unit_tag: str | None = None) -> "UniformSeries":
        return UniformSeries(self.start_t, self.rate_hz, ax, ay, az,
                             self.unit_tag if unit_tag is None else unit_tag)


@dataclass(frozen=True)
class NormalizationParams:
    """Per-axis positive scales dividing each channel into [-1, 1]."""

    sx: float
    sy: float
    sz: float

    def __post_init__(self) -> None:
        for name in ("sx", "sy", "sz"):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0:
                raise ValueError(f"scale {name} must be positive and finite, got {v}")

    def as_array(self) -> np.ndarray:
        return np.array([self.sx, self.sy, self.sz])


def grid_size(span_s: float, rate_hz: float) -> int:
    """Number of grid points covering ``span_s`` inclusively: floor(span*rate)+1.

    A 1e-9 slack absorbs float round-off in ``span*rate`` so spans that
    are a whole number of steps do not lose their final point.
    """
    return int(math.floor(span_s * rate_hz + 1e-9)) + 1


def resample(samples: list[Sample], rate_hz: float) -> UniformSeries:
    """Linearly interpolate raw samples onto a uniform grid.

    The grid spans [first t, last t]; nothing is extrapolated beyond
    the recorded span.

    Raises:
        EmptySignal: fewer than 2 samples.
        NonMonotonicTime: timestamps not strictly increasing.
    """
    if not math.isfinite(rate_hz) or rate_hz <= 0:
        raise ValueError(f"rate_hz must be positive, got {rate_hz}")
    if len(samples) < 2:
        raise EmptySignal(f"need at least 2 samples to resample, got {len(samples)}")
    t = np.array([s.t for s in samples])
    if np.any(np.diff(t) <= 0):
        k = int(np.argmax(np.diff(t) <= 0))
        raise NonMonotonicTime(f"timestamps not strictly increasing at sample {k + 1}")
    n = grid_size(float(t[-1] - t[0]), rate_hz)
    grid = t[0] + np.arange(n) / rate_hz
    # np.interp clamps at the ends, which only matters for the final
    # grid point's <=1e-9 step overshoot.
    channels = [np.interp(grid, t, np.array([getattr(s, c) for s in samples]))
                for c in ("ax", "ay", "az")]
    return UniformSeries(float(t[0]), float(rate_hz), *channels, unit_tag=ACCELERATION)


def _differentiate(values: np.ndarray, rate_hz: float) -> np.ndarray:
    out = np.empty_like(values)
    out[1:-1] = (values[2:] - values[:-2]) * (rate_hz / 2.0)
    # one-sided first-order differences keep the endpoints, so labels
    # stay aligned sample-for-sample with the differentiated series
    out[0] = (values[1] - values[0]) * rate_hz
    out[-1] = (values[-1] - values[-2]) * rate_hz
    return out


def jerk(series: UniformSeries) -> UniformSeries:
    """Differentiate an acceleration series with respect to time.

    Central differences on interior points, one-sided differences at
    the two endpoints; length and rate are preserved.

    Raises:
        UnitMismatch-like ValueError is avoided: input must be tagged
        acceleration (checked), and SignalTooShort if length < 3.
    """
    if series.unit_tag != ACCELERATION:
        raise ValueError(f"jerk expects an acceleration series, got {series.unit_tag!r}")
    if len(series) < 3:
        raise SignalTooShort("jerk needs at least 3 samples")
    jx, jy, jz = (_differentiate(c, series.rate_hz) for c in series.channels())
    return series.with_channels(jx, jy, jz, unit_tag=JERK)


def fit_normalization(series: UniformSeries) -> NormalizationParams:
    """Per-axis max-abs scales; an identically-zero channel gets scale 1.

    Dividing by these maps every channel into [-1, 1] without producing
    NaNs on degenerate (flat zero) axes.
    """
    if len(series.ax) == 0:
        raise EmptySignal("cannot fit normalization on an empty series")
    scales = []
    for c in series.channels():
        m = float(np.max(np.abs(c)))
        scales.append(m if m > 0 else 1.0)
    return NormalizationParams(*scales)


def normalize(series: UniformSeries, params: NormalizationParams) -> UniformSeries:
    """Divide each channel by its per-axis scale; output is dimensionless."""
    s = params.as_array()
    if np.any(~np.isfinite(s)) or np.any(s <= 0):
        raise InvalidNormalization(f"scales must be positive finite, got {tuple(s)}")
    ax, ay, az = series.channels()
    return series.with_channels(ax / params.sx, ay / params.sy, az / params.sz,
                                unit_tag=NORMALIZED)


def subtract_mean(series: UniformSeries) -> UniformSeries:
    """Remove the per-axis mean (optional gravity/bias preprocessing).

    Off by default throughout the pipeline: recordings are used as
    logged unless explicitly configured otherwise.
    """
    ax, ay, az = series.channels()
    return series.with_channels(ax - ax.mean(), ay - ay.mean(), az - az.mean())


def moving_average(values: np.ndarray, window: int) -> np.ndarray:
    """Centered moving average with edge truncation (shorter end windows).

    Raises:
        InvalidWindow: window is even, non-positive, or exceeds the length.
    """
    if window <= 0 or window % 2 == 0:
        raise InvalidWindow(f"window must be an odd positive integer, got {window}")
    values = np.asarray(values, dtype=float)
    n = len(values)
    if window > n:
        raise InvalidWindow(f"window {window} exceeds series length {n}")
    if window == 1:
        return values.copy()
    half = window // 2
    csum = np.concatenate(([0.0], np.cumsum(values)))
    hi = np.minimum(np.arange(n) + half + 1, n)
    lo = np.maximum(np.arange(n) - half, 0)
    return (csum[hi] - csum[lo]) / (hi - lo)


def smooth(series: UniformSeries, window: int) -> UniformSeries:
    """Channel-wise centered moving average; length and unit preserved."""
    sx, sy, sz = (moving_average(c, window) for c in series.channels())
    return series.with_channels(sx, sy, sz)
