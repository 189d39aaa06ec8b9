import os

import numpy as np
import pytest
from hypothesis import settings

from clusterseg import GrayImage

settings.register_profile("ci", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE: dict[str, bool] = {}


def random_image(rng, width, height, low=0, high=256):
    return GrayImage(width, height, rng.integers(low, high, size=width * height))


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
