"""The three embedding codecs behind one embed/extract interface.

Every method stores exactly one payload bit per pixel, in row-major pixel
order, by replacing the least significant bit of a single sample of that
pixel.  They differ only in which channel carries bit k:

    cyclic   channel = k mod 3, i.e. R, G, B, R, G, B, ...
    lsb      always BLUE; red and green planes are never written
    karim    LSB(red) XOR key-bit selects GREEN (0) or BLUE (1);
             the red plane is never written, so extraction can replay
             the same decision from the stego image alone

The karim key is a bit string cycled over pixel positions.  Extraction
with the wrong key reads the wrong channel wherever the XOR flips, so the
recovered payload is garbage rather than an error.

A deliberate pitfall to avoid when re-implementing the cyclic walk with a
1-based channel counter: resetting the counter when it *equals* 3 yields
R, G, R, G, ... and never touches blue.  The cycle here is defined as
pixel index mod 3, which extraction must mirror exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import CapacityError, MissingKeyError, UnexpectedKeyError
from .framing import (
    HEADER_BITS,
    as_bit_array,
    bits_to_bytes,
    bytes_to_bits,
    frame_payload,
    parse_frame,
    parse_header,
)
from .errors import TruncatedBodyError, TruncatedHeaderError
from .image import Channel, RgbImage, capacity_bits


class Method(Enum):
    """Embedding method; the value is the name the CLI uses."""

    CLASSIC_LSB = "lsb"
    KARIM = "karim"
    CYCLIC = "cyclic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class StegoKey:
    """Non-empty bit string driving karim channel selection.

    Shorter keys than the message are cycled over pixel positions.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) == 0:
            raise ValueError("key must contain at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("key bits must be 0 or 1")

    @classmethod
    def from_bytes(cls, data: bytes) -> "StegoKey":
        return cls(tuple(int(b) for b in bytes_to_bits(data)))

    @classmethod
    def from_hex(cls, text: str) -> "StegoKey":
        """Parse a hexadecimal key string, e.g. "a3" -> bits 10100011."""
        try:
            data = bytes.fromhex(text)
        except ValueError as exc:
            raise ValueError(f"invalid hex key {text!r}: {exc}") from exc
        if not data:
            raise ValueError("key must not be empty")
        return cls.from_bytes(data)

    def tile(self, n: int) -> np.ndarray:
        """First *n* bits of the endlessly repeated key."""
        arr = np.asarray(self.bits, dtype=np.uint8)
        if n <= len(arr):
            return arr[:n].copy()
        reps = -(-n // len(arr))
        return np.tile(arr, reps)[:n]


@dataclass(frozen=True)
class EmbedReport:
    """Outcome of one embedding: the stego image plus change accounting.

    samples_changed counts positions whose LSB actually flipped; over
    random payloads that is about half of bits_embedded.
    """

    stego: RgbImage
    bits_embedded: int
    samples_changed: int


def channel_for_index(i: int) -> Channel:
    """Channel carrying bit/pixel *i* under the cyclic walk: R, G, B, R, ..."""
    if i < 0:
        raise ValueError("pixel index must be >= 0")
    return Channel(i % 3)


def _check_payload_fits(cover: RgbImage, nbits: int) -> None:
    cap = capacity_bits(cover)
    if nbits > cap:
        raise CapacityError(
            f"payload of {nbits} bits exceeds the {cap}-bit capacity "
            f"of a {cover.width}x{cover.height} image"
        )


def _check_request_fits(stego: RgbImage, nbits: int) -> None:
    if nbits < 0:
        raise ValueError("bit count must be >= 0")
    cap = capacity_bits(stego)
    if nbits > cap:
        raise CapacityError(
            f"requested {nbits} bits but a {stego.width}x{stego.height} "
            f"image holds only {cap}"
        )


def _embed_at(cover: RgbImage, bits: np.ndarray, channels) -> EmbedReport:
    # channels: per-bit channel index, broadcastable against arange(n)
    n = bits.size
    flat = cover.pixels.reshape(-1, 3).copy()
    idx = np.arange(n)
    old = flat[idx, channels]
    new = (old & 0xFE) | bits
    changed = int(np.count_nonzero(new != old))
    flat[idx, channels] = new
    stego = RgbImage(flat.reshape(cover.height, cover.width, 3))
    return EmbedReport(stego=stego, bits_embedded=n, samples_changed=changed)


def _extract_at(stego: RgbImage, nbits: int, channels) -> np.ndarray:
    flat = stego.pixels.reshape(-1, 3)
    return (flat[np.arange(nbits), channels] & 1).astype(np.uint8)


def embed_cyclic(cover: RgbImage, payload) -> EmbedReport:
    """Embed bit k in the LSB of channel (k mod 3) of pixel k."""
    bits = as_bit_array(payload)
    _check_payload_fits(cover, bits.size)
    return _embed_at(cover, bits, np.arange(bits.size) % 3)


def extract_cyclic(stego: RgbImage, nbits: int) -> np.ndarray:
    """Read back *nbits* LSBs along the R, G, B, ... cycle."""
    _check_request_fits(stego, nbits)
    return _extract_at(stego, nbits, np.arange(nbits) % 3)


def embed_classic_lsb(cover: RgbImage, payload) -> EmbedReport:
    """Embed bit k in the BLUE-channel LSB of pixel k."""
    bits = as_bit_array(payload)
    _check_payload_fits(cover, bits.size)
    return _embed_at(cover, bits, int(Channel.BLUE))


def extract_classic_lsb(stego: RgbImage, nbits: int) -> np.ndarray:
    """Read back *nbits* BLUE-channel LSBs."""
    _check_request_fits(stego, nbits)
    return _extract_at(stego, nbits, int(Channel.BLUE))


def _karim_channels(image: RgbImage, nbits: int, key: StegoKey) -> np.ndarray:
    red_lsb = (image.pixels.reshape(-1, 3)[:nbits, int(Channel.RED)] & 1).astype(np.uint8)
    decision = red_lsb ^ key.tile(nbits)
    return np.where(decision == 0, int(Channel.GREEN), int(Channel.BLUE))


def embed_karim(cover: RgbImage, payload, key: StegoKey) -> EmbedReport:
    """Embed bit k in GREEN or BLUE of pixel k as picked by the key XOR rule."""
    if key is None:
        raise MissingKeyError("karim embedding requires a key")
    bits = as_bit_array(payload)
    _check_payload_fits(cover, bits.size)
    return _embed_at(cover, bits, _karim_channels(cover, bits.size, key))


def extract_karim(stego: RgbImage, nbits: int, key: StegoKey) -> np.ndarray:
    """Read back *nbits* bits by replaying the key XOR channel decision."""
    if key is None:
        raise MissingKeyError("karim extraction requires a key")
    _check_request_fits(stego, nbits)
    return _extract_at(stego, nbits, _karim_channels(stego, nbits, key))


def _check_key(method: Method, key: StegoKey | None) -> None:
    if method is Method.KARIM:
        if key is None:
            raise MissingKeyError(f"method {method} requires a key")
    elif key is not None:
        raise UnexpectedKeyError(f"method {method} does not take a key")


def embed_bits(cover: RgbImage, payload, method: Method, key: StegoKey | None = None) -> EmbedReport:
    """Embed a raw (unframed) bit sequence with the selected method."""
    _check_key(method, key)
    if method is Method.CYCLIC:
        return embed_cyclic(cover, payload)
    if method is Method.CLASSIC_LSB:
        return embed_classic_lsb(cover, payload)
    return embed_karim(cover, payload, key)


def extract_bits(stego: RgbImage, nbits: int, method: Method, key: StegoKey | None = None) -> np.ndarray:
    """Extract a raw bit sequence; inverse of :func:`embed_bits`."""
    _check_key(method, key)
    if method is Method.CYCLIC:
        return extract_cyclic(stego, nbits)
    if method is Method.CLASSIC_LSB:
        return extract_classic_lsb(stego, nbits)
    return extract_karim(stego, nbits, key)


def embed_message(cover: RgbImage, data: bytes, method: Method, key: StegoKey | None = None) -> EmbedReport:
    """Frame *data* with its length header and embed the whole stream."""
    _check_key(method, key)
    frame = frame_payload(data)
    return embed_bits(cover, frame, method, key)


def extract_message(stego: RgbImage, method: Method, key: StegoKey | None = None) -> bytes:
    """Recover the framed byte payload embedded by :func:`embed_message`.

    Raises:
        TruncatedHeaderError: the image is too small to hold a header.
        TruncatedBodyError: the decoded header announces more bits than
            the image can hold (e.g. the image never carried a message).
    """
    _check_key(method, key)
    cap = capacity_bits(stego)
    if cap < HEADER_BITS:
        raise TruncatedHeaderError(
            f"a {stego.width}x{stego.height} image cannot hold the "
            f"{HEADER_BITS}-bit header"
        )
    header = extract_bits(stego, HEADER_BITS, method, key)
    length = parse_header(header)
    total = HEADER_BITS + 8 * length
    if total > cap:
        raise TruncatedBodyError(
            f"header announces {length} payload bytes ({total} bits total) "
            f"but the image holds only {cap} bits"
        )
    frame = extract_bits(stego, total, method, key)
    _, body = parse_frame(frame)
    return bits_to_bytes(body)
