"""Label masks, per-cluster segmented images and region statistics."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field

import numpy as np

from .imagecore import GrayImage
from .kmeans import assign_bins

BACKGROUND = 0.0


@dataclass(frozen=True, eq=False)
class LabelMask:
    width: int
    height: int
    labels: np.ndarray = field(repr=False)
    k: int = 0

    def __post_init__(self) -> None:
        lab = np.array(self.labels, dtype=np.int64).reshape(-1)
        if lab.size != self.width * self.height:
            raise ValueError(f"expected {self.width * self.height} labels, got {lab.size}")
        k = self.k or (int(lab.max()) + 1 if lab.size else 1)
        if lab.size and (lab.min() < 0 or lab.max() >= k):
            raise ValueError(f"labels must lie in [0, {k})")
        lab.setflags(write=False)
        object.__setattr__(self, "labels", lab)
        object.__setattr__(self, "k", k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelMask):
            return NotImplemented
        return (self.width, self.height, self.k) == (other.width, other.height, other.k) \
            and np.array_equal(self.labels, other.labels)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class RegionStats:
    mean: float
    std: float
    cv: float | None  # percent; None when mean == 0
    count: int

    def to_dict(self) -> dict:
        return asdict(self)


def coefficient_of_variation(mean: float, std: float) -> float | None:
    """Relative dispersion in percent, ``100 * std / mean``."""
    if mean == 0:
        return None
    return 100.0 * std / mean


def _check_dims(img: GrayImage, mask: LabelMask) -> None:
    if (img.width, img.height) != (mask.width, mask.height):
        raise ValueError(
            f"mask is {mask.width}x{mask.height} but image is {img.width}x{img.height}")


def _check_cluster(mask: LabelMask, cluster: int) -> None:
    if not 0 <= cluster < mask.k:
        raise ValueError(f"cluster {cluster} out of range for k={mask.k}")


def mask_from_centroids(img: GrayImage, centroids) -> LabelMask:
    c = np.asarray(centroids, dtype=np.float64)
    return LabelMask(img.width, img.height, assign_bins(c, img.pixels), k=c.size)


def mask_from_membership(mu: np.ndarray, width: int, height: int) -> LabelMask:
    mu = np.asarray(mu)
    # argmax picks the first maximum on ties
    return LabelMask(width, height, np.argmax(mu, axis=0), k=mu.shape[0])


def apply_mask(img: GrayImage, mask: LabelMask, cluster: int) -> GrayImage:
    _check_dims(img, mask)
    _check_cluster(mask, cluster)
    out = np.where(mask.labels == cluster, img.pixels, BACKGROUND)
    return GrayImage(img.width, img.height, out)


def stats_of(values) -> RegionStats:
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("region is empty")
    mean = float(v.mean())
    std = float(v.std())  # population convention (ddof=0)
    return RegionStats(mean, std, coefficient_of_variation(mean, std), int(v.size))


def region_stats(img: GrayImage, mask: LabelMask, cluster: int | None = None) -> RegionStats:
    """Mean, population std and CV over one cluster, or over every pixel."""
    _check_dims(img, mask)
    if cluster is None:
        return stats_of(img.pixels)
    _check_cluster(mask, cluster)
    sel = img.pixels[mask.labels == cluster]
    if sel.size == 0:
        raise ValueError(f"cluster {cluster} has no pixels")
    return stats_of(sel)


def _fmt(x: float | None) -> str:
    return "n/a" if x is None else f"{x:.4f}"


def compare_report(a: RegionStats, b: RegionStats, names=("K-Means", "FCM")) -> str:
    rows = [
        ("Average voxel intensity", a.mean, b.mean),
        ("Standard Deviation", a.std, b.std),
        ("Coefficient of variance", a.cv, b.cv),
    ]
    w0 = max(len(r[0]) for r in rows)
    cells = [(r[0], _fmt(r[1]), _fmt(r[2])) for r in rows]
    w1 = max(len(names[0]), *(len(c[1]) for c in cells))
    w2 = max(len(names[1]), *(len(c[2]) for c in cells))
    lines = [f"{'Parameter':<{w0}}  {names[0]:>{w1}}  {names[1]:>{w2}}"]
    lines += [f"{c[0]:<{w0}}  {c[1]:>{w1}}  {c[2]:>{w2}}" for c in cells]
    return "\n".join(lines) + "\n"


# -- mask export -------------------------------------------------------------

def mask_visual(mask: LabelMask) -> GrayImage:
    """Spread labels over 0..255 for viewing; a single cluster maps to 0."""
    if mask.k > 1:
        vals = np.rint(255.0 * mask.labels / (mask.k - 1))
    else:
        vals = np.zeros(mask.labels.size)
    return GrayImage(mask.width, mask.height, vals)


def save_labels(mask: LabelMask, path: str | os.PathLike) -> None:
    rows = mask.labels.reshape(mask.height, mask.width)
    with open(path, "w") as fh:
        fh.write(f"{mask.width} {mask.height} {mask.k}\n")
        for row in rows:
            fh.write(" ".join(map(str, row)) + "\n")


def load_labels(path: str | os.PathLike) -> LabelMask:
    with open(path) as fh:
        fields = fh.read().split()
    if len(fields) < 3:
        raise ValueError(f"{path}: missing 'W H k' header")
    try:
        w, h, k = (int(f) for f in fields[:3])
        labels = [int(f) for f in fields[3:]]
    except ValueError:
        raise ValueError(f"{path}: non-integer field in label file") from None
    if w <= 0 or h <= 0 or k <= 0:
        raise ValueError(f"{path}: bad header {w} {h} {k}")
    if len(labels) != w * h:
        raise ValueError(f"{path}: expected {w * h} labels, got {len(labels)}")
    return LabelMask(w, h, labels, k=k)
