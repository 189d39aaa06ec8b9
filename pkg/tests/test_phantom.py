import numpy as np
import pytest

from clusterseg.imagecore import compute_histogram, encode_pgm
from clusterseg.phantom import PhantomSpec, ground_truth, make_phantom


def test_noiseless_halves():
    img = make_phantom(PhantomSpec(4, 6, ((60, 0.5), (180, 0.5))))
    assert np.all(img.array[:3] == 60) and np.all(img.array[3:] == 180)


def test_bands_follow_listed_order():
    spec = PhantomSpec(2, 10, ((10, 0.2), (200, 0.3), (90, 0.5)))
    img = make_phantom(spec)
    assert img.array[:, 0].tolist() == [10] * 2 + [200] * 3 + [90] * 5
    assert ground_truth(spec).reshape(10, 2)[:, 1].tolist() == [0] * 2 + [1] * 3 + [2] * 5


def test_same_seed_same_bytes():
    spec = PhantomSpec(16, 16, ((60, 0.5), (180, 0.5)), noise_sigma=10, seed=7)
    assert encode_pgm(make_phantom(spec)) == encode_pgm(make_phantom(spec))


def test_different_seed_differs():
    a = make_phantom(PhantomSpec(16, 16, ((60, 0.5), (180, 0.5)), 10, seed=1))
    b = make_phantom(PhantomSpec(16, 16, ((60, 0.5), (180, 0.5)), 10, seed=2))
    assert a != b


def test_noise_stays_near_modes():
    img = make_phantom(PhantomSpec(64, 64, ((60, 0.5), (180, 0.5)), 10, seed=3))
    counts = compute_histogram(img).counts
    outside = img.size - counts[30:91].sum() - counts[150:211].sum()
    # 0.27% of a Gaussian lies beyond 3 sigma: about 11 of 4096 pixels
    assert outside <= 30
    top, bottom = img.array[:32], img.array[32:]
    assert abs(top.mean() - 60) < 1 and abs(bottom.mean() - 180) < 1
    assert 9 < top.std() < 11


def test_clamped():
    img = make_phantom(PhantomSpec(32, 32, ((2, 0.5), (253, 0.5)), 20, seed=0))
    assert img.pixels.min() == 0 and img.pixels.max() == 255


@pytest.mark.parametrize("regions", [
    ((60, 0.5), (180, 0.4)),
    ((60, 0.0), (180, 1.0)),
    ((300, 1.0),),
    (),
])
def test_rejects_bad_regions(regions):
    with pytest.raises(ValueError):
        PhantomSpec(4, 4, regions)


def test_rejects_negative_sigma():
    with pytest.raises(ValueError):
        PhantomSpec(4, 4, ((1, 1.0),), noise_sigma=-1)
