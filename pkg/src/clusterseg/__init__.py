"""K-Means and Fuzzy C-Means segmentation of 8-bit grayscale images."""

from .fcm import FcmConfig, FcmResult, run_fcm
from .imagecore import GrayImage, Histogram, PgmError, compute_histogram, flatten, load_image, save_image
from .kmeans import KMeansConfig, KMeansResult, init_centroids, run_kmeans
from .phantom import PhantomSpec, make_phantom
from .segment import (LabelMask, RegionStats, apply_mask, compare_report, mask_from_centroids,
                      mask_from_membership, region_stats)

__version__ = "0.1.0"
