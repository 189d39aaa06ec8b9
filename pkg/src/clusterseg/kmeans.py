"""Histogram-weighted K-Means over the 256 intensity levels.

The objects being clustered are histogram bins, each weighted by its pixel
count. Since distance only depends on intensity, this yields the same
centroids as running Lloyd's algorithm on every pixel, at a cost that does
not grow with image size.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .imagecore import NBINS, GrayImage, Histogram, compute_histogram

BIN_VALUES = np.arange(NBINS, dtype=np.float64)


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    max_iter: int = 100

    def __post_init__(self) -> None:
        if not 1 <= self.k <= NBINS:
            raise ValueError(f"k must be in [1, {NBINS}], got {self.k}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass
class KMeansResult:
    centroids: np.ndarray
    bin_assignments: np.ndarray
    iterations: int
    converged: bool
    # centroids before the first update, then after every update
    centroid_trace: list[np.ndarray] = field(default_factory=list, repr=False)


def init_centroids(k: int, m: float) -> np.ndarray:
    """Evenly spaced seeds ``i * m / (k + 1)`` for i = 1..k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not m > 0:
        raise ValueError(f"max intensity must be positive, got {m}")
    return np.arange(1, k + 1, dtype=np.float64) * m / (k + 1)


def assign_bins(centroids, domain=BIN_VALUES) -> np.ndarray:
    """Nearest-centroid index for each value; ties go to the lowest index."""
    c = np.asarray(centroids, dtype=np.float64)
    if c.size == 0:
        raise ValueError("need at least one centroid")
    d = np.abs(np.asarray(domain, dtype=np.float64)[:, None] - c[None, :])
    # np.argmin returns the first minimum, which is the tie rule we want
    return np.argmin(d, axis=1)


def update_centroids(assignments, hist: Histogram, old) -> np.ndarray:
    """Count-weighted mean of the bins in each cluster.

    A cluster whose bins hold no pixels keeps its previous centroid.
    """
    a = np.asarray(assignments)
    old = np.asarray(old, dtype=np.float64)
    if a.shape != (NBINS,):
        raise ValueError("assignments must cover all 256 bins")
    k = old.size
    counts = hist.counts
    # integer sums are exact, so the quotient is correctly rounded
    mass = np.zeros(k, dtype=np.int64)
    moment = np.zeros(k, dtype=np.int64)
    np.add.at(mass, a, counts)
    np.add.at(moment, a, counts * np.arange(NBINS, dtype=np.int64))
    new = old.copy()
    occupied = mass > 0
    new[occupied] = moment[occupied] / mass[occupied]
    return new


def run_kmeans(img: GrayImage, cfg: KMeansConfig) -> KMeansResult:
    hist = compute_histogram(img)
    m = float(img.pixels.max())
    if m > 0:
        centroids = init_centroids(cfg.k, m)
    else:
        # all-black image: every seed formula collapses to zero
        centroids = np.zeros(cfg.k)
    trace = [centroids]
    assign = assign_bins(centroids)
    converged = False
    it = 0
    while it < cfg.max_iter:
        it += 1
        centroids = update_centroids(assign, hist, centroids)
        trace.append(centroids)
        new_assign = assign_bins(centroids)
        moved = np.any(new_assign != assign)
        assign = new_assign
        if not moved:
            converged = True
            break
    return KMeansResult(centroids, assign, it, converged, trace)
