"""8-bit RGB image model: PNG I/O, plane handling, LSB primitive, capacity.

PNG is the only container because embedding lives in the least significant
bits; any lossy format would destroy them.  Accepted inputs are 8-bit RGB,
RGBA (alpha dropped) and 8-bit grayscale (gray plane replicated into all
three channels).  Output is always 8-bit RGB PNG.

Pixel order everywhere in this library is row-major: top-left origin,
left to right, then top to bottom.  Pixel index k of a width-W image sits
at row k // W, column k % W.
"""

from __future__ import annotations

import os
from enum import IntEnum

import numpy as np
from PIL import Image

from .errors import UnsupportedFormatError

from .framing import HEADER_BITS

_ALLOWED_MODES = {"RGB", "RGBA", "L"}


class Channel(IntEnum):
    """Color plane index; the fixed ordering RED < GREEN < BLUE matters."""

    RED = 0
    GREEN = 1
    BLUE = 2


class RgbImage:
    """Immutable width x height grid of 8-bit R/G/B samples.

    The backing array has shape (height, width, 3), dtype uint8, and is
    marked read-only after construction, so instances are safe to share
    between concurrent tasks.  Codec operations build new images rather
    than mutating.
    """

    __slots__ = ("_pixels",)

    def __init__(self, pixels) -> None:
        arr = np.asarray(pixels)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(
                f"expected an array of shape (height, width, 3), got {arr.shape}"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueError(f"samples must be integers, got dtype {arr.dtype}")
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("samples must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        else:
            arr = arr.copy()
        arr.flags.writeable = False
        self._pixels = arr

    @property
    def pixels(self) -> np.ndarray:
        """Read-only (height, width, 3) uint8 array."""
        return self._pixels

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    def plane(self, channel: Channel) -> np.ndarray:
        """Read-only (height, width) view of one color plane."""
        return self._pixels[:, :, int(channel)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RgbImage):
            return NotImplemented
        return np.array_equal(self._pixels, other._pixels)

    def __hash__(self):
        return hash((self.width, self.height, self._pixels.tobytes()))

    def __repr__(self) -> str:
        return f"RgbImage({self.width}x{self.height})"


def load_image(path) -> RgbImage:
    """Decode a PNG file into an :class:`RgbImage`.

    RGBA input has its alpha plane discarded; 8-bit grayscale is promoted
    by replicating the gray plane into all three channels.

    Raises:
        FileNotFoundError: *path* does not exist.
        UnsupportedFormatError: not a PNG, undecodable, 16-bit, palette,
            or any other mode outside RGB/RGBA/L.
    """
    path = os.fspath(path)
    try:
        img = Image.open(path)
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise UnsupportedFormatError(f"cannot decode {path!r}: {exc}") from exc
    with img:
        if (img.format or "").upper() != "PNG":
            raise UnsupportedFormatError(
                f"{path!r} is not a PNG file (detected format: {img.format})"
            )
        if img.mode not in _ALLOWED_MODES:
            raise UnsupportedFormatError(
                f"{path!r} has unsupported PNG mode {img.mode!r}; "
                "need 8-bit RGB, RGBA or grayscale"
            )
        try:
            arr = np.asarray(img)
        except OSError as exc:
            raise UnsupportedFormatError(f"cannot decode {path!r}: {exc}") from exc
    if img.mode == "L":
        arr = np.repeat(arr[:, :, np.newaxis], 3, axis=2)
    elif img.mode == "RGBA":
        arr = arr[:, :, :3]
    return RgbImage(arr)


def save_image(image: RgbImage, path) -> None:
    """Write *image* as a lossless 8-bit RGB PNG.

    Loading the written file reproduces the image sample for sample.
    Raises OSError when the destination cannot be written.
    """
    Image.fromarray(image.pixels.copy(), mode="RGB").save(os.fspath(path), format="PNG")


def split_planes(image: RgbImage) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Separate the red, green and blue planes (read-only views)."""
    return image.plane(Channel.RED), image.plane(Channel.GREEN), image.plane(Channel.BLUE)


def merge_planes(red, green, blue) -> RgbImage:
    """Recombine three equally sized planes; inverse of :func:`split_planes`."""
    red, green, blue = (np.asarray(p) for p in (red, green, blue))
    if not (red.shape == green.shape == blue.shape):
        raise ValueError(
            f"planes differ in shape: {red.shape}, {green.shape}, {blue.shape}"
        )
    return RgbImage(np.stack((red, green, blue), axis=-1))


def replace_lsb(sample, bit):
    """Set the least significant bit of an 8-bit sample (or array of them).

    The result differs from the input by at most 1 and only when the LSB
    actually changes.  Works elementwise on uint8 arrays.
    """
    return (sample & 0xFE) | bit


def extract_lsb(sample):
    """Least significant bit of an 8-bit sample (or array of them)."""
    return sample & 1


def capacity_bits(image: RgbImage) -> int:
    """Embedding capacity in bits: one bit per pixel for every method here."""
    return image.width * image.height


def payload_capacity_bytes(image: RgbImage) -> int:
    """Largest framed payload, in bytes, the image can carry.

    The 32-bit length header is part of the embedded stream, so whole
    payload bytes fit in floor((capacity - 32) / 8); never negative.
    """
    return max(0, (capacity_bits(image) - HEADER_BITS) // 8)
