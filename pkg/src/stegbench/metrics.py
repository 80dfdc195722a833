"""Cover/stego quality metrics: MSE, PSNR, and histogram comparison.

MSE is computed per channel as sum((stego - cover)^2) / (width * height)
and combined as the arithmetic mean of the three channel values, which
reduces to the single-plane definition on grayscale content.  Squared
differences are accumulated in integer arithmetic (exact for 8-bit
samples); only the final divisions are floating point.

PSNR = 10 * log10(cmax^2 / MSE) dB.  The peak reference cmax is either
the conventional 255 or, in "paper" mode, the maximum sample observed
across both images.  Identical images have MSE 0 and are reported as
infinite PSNR; no finite cap is invented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatchError
from .image import RgbImage

_CHANNEL_NAMES = ("red", "green", "blue")


class CmaxMode(Enum):
    """PSNR peak reference; the value is the CLI spelling."""

    FIXED_255 = "255"
    OBSERVED_MAX = "paper"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MetricsReport:
    mse: float
    per_channel_mse: tuple[float, float, float]
    psnr_db: float
    cmax: int
    cmax_mode: CmaxMode


@dataclass(frozen=True, eq=False)
class Histogram:
    """Per-channel intensity counts: 256 bins each for red, green, blue."""

    counts: np.ndarray  # shape (3, 256), int64

    def channel(self, index: int) -> np.ndarray:
        return self.counts[index]


@dataclass(frozen=True, eq=False)
class HistogramDelta:
    """Absolute per-bin differences between two histograms."""

    per_bin: np.ndarray  # shape (3, 256), int64
    per_channel_l1: tuple[int, int, int]
    total_l1: int


def _check_same_size(cover: RgbImage, stego: RgbImage) -> None:
    if (cover.width, cover.height) != (stego.width, stego.height):
        raise DimensionMismatchError(
            f"image dimensions differ: {cover.width}x{cover.height} "
            f"vs {stego.width}x{stego.height}"
        )


def per_channel_mse(cover: RgbImage, stego: RgbImage) -> tuple[float, float, float]:
    """Mean squared error of each plane, in intensity^2 units."""
    _check_same_size(cover, stego)
    diff = cover.pixels.astype(np.int64) - stego.pixels.astype(np.int64)
    sse = (diff * diff).sum(axis=(0, 1))
    pixels = cover.width * cover.height
    return tuple(int(s) / pixels for s in sse)


def mse(cover: RgbImage, stego: RgbImage) -> float:
    """Combined MSE: arithmetic mean of the three per-channel values."""
    r, g, b = per_channel_mse(cover, stego)
    return (r + g + b) / 3.0


def psnr(cover: RgbImage, stego: RgbImage, cmax_mode: CmaxMode = CmaxMode.FIXED_255) -> MetricsReport:
    """Full fidelity report for a cover/stego pair.

    Identical images yield psnr_db = math.inf.
    """
    channel_mse = per_channel_mse(cover, stego)
    combined = (channel_mse[0] + channel_mse[1] + channel_mse[2]) / 3.0
    if cmax_mode is CmaxMode.FIXED_255:
        cmax = 255
    else:
        cmax = int(max(cover.pixels.max(), stego.pixels.max()))
    if combined == 0.0:
        value = math.inf
    else:
        value = 10.0 * math.log10((cmax * cmax) / combined)
    return MetricsReport(
        mse=combined,
        per_channel_mse=channel_mse,
        psnr_db=value,
        cmax=cmax,
        cmax_mode=cmax_mode,
    )


def histogram(image: RgbImage) -> Histogram:
    """Count samples per intensity value, separately for each channel."""
    counts = np.stack(
        [np.bincount(image.plane(c).ravel(), minlength=256) for c in range(3)]
    ).astype(np.int64)
    counts.flags.writeable = False
    return Histogram(counts=counts)


def histogram_delta(cover: RgbImage, stego: RgbImage) -> HistogramDelta:
    """How far the stego histogram drifted from the cover's.

    For any LSB-style embedding of n bits the total L1 distance is at
    most 2n: each changed sample leaves one bin and enters a neighbor.
    """
    _check_same_size(cover, stego)
    per_bin = np.abs(histogram(cover).counts - histogram(stego).counts)
    per_channel = tuple(int(x) for x in per_bin.sum(axis=1))
    per_bin.flags.writeable = False
    return HistogramDelta(
        per_bin=per_bin,
        per_channel_l1=per_channel,
        total_l1=sum(per_channel),
    )


def histogram_to_csv(hist: Histogram) -> str:
    """CSV rendering with columns channel,bin,count."""
    lines = ["channel,bin,count"]
    for index, name in enumerate(_CHANNEL_NAMES):
        lines.extend(
            f"{name},{value},{int(count)}"
            for value, count in enumerate(hist.counts[index])
        )
    return "\n".join(lines) + "\n"


def metrics_kv(report: MetricsReport, **context) -> str:
    """Key-value text block for a report, context fields first.

    Context is whatever identifies the measurement (method, image,
    payload_bytes, ...).  Floats keep full precision; infinite PSNR
    prints as "inf".
    """
    pairs = list(context.items())
    pairs.append(("cmax_mode", report.cmax_mode))
    pairs.append(("cmax", report.cmax))
    for name, value in zip(_CHANNEL_NAMES, report.per_channel_mse):
        pairs.append((f"mse_{name}", value))
    pairs.append(("mse", report.mse))
    pairs.append(("psnr_db", report.psnr_db))
    return "\n".join(f"{key}: {value}" for key, value in pairs) + "\n"
