import numpy as np
import pytest

from stegbench import RgbImage, save_image


@pytest.fixture
def make_image():
    """Factory for seeded random RGB images; same (size, seed) -> same image."""

    def make(width: int = 16, height: int = 16, seed: int = 0) -> RgbImage:
        rng = np.random.default_rng(seed)
        return RgbImage(rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8))

    return make


@pytest.fixture
def make_png(make_image, tmp_path):
    """Write a seeded random image to a PNG under tmp_path, return its path."""

    def make(name: str = "cover.png", width: int = 16, height: int = 16, seed: int = 0):
        path = tmp_path / name
        save_image(make_image(width, height, seed), path)
        return path

    return make
