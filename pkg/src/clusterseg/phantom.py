"""Synthetic banded phantoms with known ground-truth regions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .imagecore import GrayImage

# noise source, seeded per phantom and recorded alongside the image
PRNG = "numpy.random.default_rng/PCG64"


@dataclass(frozen=True)
class PhantomSpec:
    width: int
    height: int
    regions: tuple[tuple[float, float], ...]  # (intensity, area fraction)
    noise_sigma: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("phantom dimensions must be positive")
        if not self.regions:
            raise ValueError("phantom needs at least one region")
        object.__setattr__(self, "regions", tuple((float(v), float(f)) for v, f in self.regions))
        for value, frac in self.regions:
            if not 0 <= value <= 255:
                raise ValueError(f"region intensity {value} outside [0, 255]")
            if not frac > 0:
                raise ValueError(f"area fraction must be positive, got {frac}")
        total = sum(f for _, f in self.regions)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"area fractions sum to {total}, not 1")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be >= 0")


def band_rows(spec: PhantomSpec) -> np.ndarray:
    """Row index where each band ends (exclusive), in region order."""
    cum = np.cumsum([f for _, f in spec.regions])
    ends = np.rint(cum * spec.height).astype(int)
    ends[-1] = spec.height
    return ends


def ground_truth(spec: PhantomSpec) -> np.ndarray:
    """Per-pixel region index, row-major."""
    ends = band_rows(spec)
    row_label = np.searchsorted(ends, np.arange(spec.height), side="right")
    return np.repeat(row_label, spec.width)


def make_phantom(spec: PhantomSpec) -> GrayImage:
    truth = ground_truth(spec)
    values = np.array([v for v, _ in spec.regions])[truth]
    if spec.noise_sigma > 0:
        rng = np.random.default_rng(spec.seed)
        values = values + rng.normal(0.0, spec.noise_sigma, size=values.size)
    values = np.rint(np.clip(values, 0, 255))
    return GrayImage(spec.width, spec.height, values)
