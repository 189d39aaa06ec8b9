"""Fuzzy C-Means on the flattened intensity vector.

Arrays follow the (clusters, pixels) layout: row i is a cluster, column k a
pixel. Each iteration runs distances -> membership -> weights -> centers ->
objective, and stops on a small objective change or the iteration cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .imagecore import GrayImage, flatten
from .kmeans import init_centroids

DIST_EPS = 1e-6


@dataclass(frozen=True)
class FcmConfig:
    ncluster: int
    expo: float = 2.0
    max_iter: int = 3
    tol: float = 1e-5

    def __post_init__(self) -> None:
        if self.ncluster < 2:
            raise ValueError(f"ncluster must be >= 2, got {self.ncluster}")
        if not self.expo > 1:
            raise ValueError(f"fuzziness must be > 1, got {self.expo}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if not self.tol > 0:
            raise ValueError(f"tol must be > 0, got {self.tol}")

    @property
    def dist_eps(self) -> float:
        return DIST_EPS


@dataclass
class FcmResult:
    centers: np.ndarray
    membership: np.ndarray
    objective_trace: list[float]
    iterations: int
    converged: bool
    exit_reason: str  # "tol" or "max_iter"
    center_trace: list[np.ndarray] = field(default_factory=list, repr=False)


def compute_distances(centers, imgv) -> np.ndarray:
    c = np.asarray(centers, dtype=np.float64)
    x = np.asarray(imgv, dtype=np.float64)
    return np.abs(x[None, :] - c[:, None]) + DIST_EPS


def update_membership(D: np.ndarray, expo: float) -> np.ndarray:
    p = -2.0 / (expo - 1.0)
    # dividing by the column minimum keeps every power <= 1, so small
    # fuzziness factors cannot overflow; the ratio is unchanged
    tmp = (D / D.min(axis=0, keepdims=True)) ** p
    return tmp / tmp.sum(axis=0, keepdims=True)


def membership_weights(mu: np.ndarray, expo: float) -> np.ndarray:
    return mu ** expo


def update_centers(mf: np.ndarray, imgv) -> np.ndarray:
    x = np.asarray(imgv, dtype=np.float64)
    total = mf.sum(axis=1)
    if np.any(total <= 0):
        raise FloatingPointError("cluster lost all membership weight")
    # elementwise product + sum rather than a BLAS matvec keeps the
    # reduction order fixed regardless of thread count
    centers = (mf * x[None, :]).sum(axis=1) / total
    # a convex combination can overshoot the data range by an ulp
    return np.clip(centers, x.min(), x.max())


def objective(D: np.ndarray, mf: np.ndarray) -> float:
    return float(np.sum(D ** 2 * mf))


def run_fcm(img: GrayImage, cfg: FcmConfig) -> FcmResult:
    """Cluster pixel intensities.

    The returned membership is the one from the last iteration, i.e. the
    matrix whose weights produced the returned centers.
    """
    imgv = flatten(img)
    m = float(imgv.max())
    centers = init_centroids(cfg.ncluster, m) if m > 0 else np.zeros(cfg.ncluster)
    center_trace = [centers]
    trace: list[float] = []
    D = compute_distances(centers, imgv)
    reason = "max_iter"
    it = 0
    while it < cfg.max_iter:
        it += 1
        mu = update_membership(D, cfg.expo)
        mf = membership_weights(mu, cfg.expo)
        centers = update_centers(mf, imgv)
        D = compute_distances(centers, imgv)
        trace.append(objective(D, mf))
        center_trace.append(centers)
        if len(trace) > 1 and abs(trace[-1] - trace[-2]) < cfg.tol:
            reason = "tol"
            break
    return FcmResult(centers, mu, trace, it, reason == "tol", reason, center_trace)
