"""Payload framing: opaque bytes <-> self-describing bit stream.

Frame layout (bits are MSB-first within every byte):

    [32 bits]           body length in BYTES, big-endian unsigned
    [8 * length bits]   body

The header tells the extractor how many body bits follow, so the receiver
needs nothing beyond the stego image itself.  Header and body travel
through the exact same channel sequence as one flat bit stream.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import (
    NonOctetLengthError,
    PayloadTooLargeError,
    TruncatedBodyError,
    TruncatedHeaderError,
)

HEADER_BITS = 32
MAX_PAYLOAD_BYTES = 0xFFFFFFFF


def as_bit_array(bits) -> np.ndarray:
    """Normalize a bit sequence to a 1-D uint8 array, validating 0/1 content."""
    arr = np.asarray(bits)
    if arr.dtype == np.bool_:
        arr = arr.astype(np.uint8)
    if arr.ndim != 1:
        raise ValueError(f"bits must be a 1-D sequence, got shape {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError("bit values must be 0 or 1")
    return arr.astype(np.uint8, copy=False)


def bytes_to_bits(data: bytes) -> np.ndarray:
    """Explode a byte string into its bits, MSB first within each byte.

    b"B" (0x42) becomes [0,1,0,0,0,0,1,0].
    """
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))


def bits_to_bytes(bits) -> bytes:
    """Pack a bit sequence back into bytes; inverse of :func:`bytes_to_bits`.

    Raises:
        NonOctetLengthError: if the bit count is not a multiple of 8.
    """
    arr = as_bit_array(bits)
    if arr.size % 8:
        raise NonOctetLengthError(
            f"bit count {arr.size} is not a multiple of 8"
        )
    return np.packbits(arr).tobytes()


def frame_payload(data: bytes) -> np.ndarray:
    """Prefix *data* with its 32-bit big-endian byte count and return the bits.

    Raises:
        PayloadTooLargeError: when the byte count does not fit the header.
    """
    if len(data) > MAX_PAYLOAD_BYTES:
        raise PayloadTooLargeError(
            f"payload of {len(data)} bytes exceeds the {MAX_PAYLOAD_BYTES}-byte frame limit"
        )
    return bytes_to_bits(struct.pack(">I", len(data)) + bytes(data))


def parse_header(bits) -> int:
    """Decode the body length (in bytes) from the first 32 bits.

    Raises:
        TruncatedHeaderError: fewer than 32 bits available.
    """
    arr = as_bit_array(bits)
    if arr.size < HEADER_BITS:
        raise TruncatedHeaderError(
            f"need {HEADER_BITS} header bits, have {arr.size}"
        )
    (length,) = struct.unpack(">I", np.packbits(arr[:HEADER_BITS]).tobytes())
    return length


def parse_frame(bits) -> tuple[int, np.ndarray]:
    """Split a framed bit stream into (body length in bytes, body bits).

    Accepts any prefix of a bit stream that starts with a frame; trailing
    bits beyond the frame are ignored.

    Raises:
        TruncatedHeaderError: fewer than 32 bits available.
        TruncatedBodyError: fewer body bits than the header announces.
    """
    arr = as_bit_array(bits)
    length = parse_header(arr)
    body_bits = 8 * length
    available = arr.size - HEADER_BITS
    if available < body_bits:
        raise TruncatedBodyError(
            f"header announces {length} body bytes ({body_bits} bits) "
            f"but only {available} bits follow"
        )
    return length, arr[HEADER_BITS : HEADER_BITS + body_bits]
