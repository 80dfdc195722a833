"""Exception hierarchy shared by all stegbench modules."""


class StegError(Exception):
    """Base class for every error raised by this library."""


class FramingError(StegError):
    """Base class for payload framing and bit-conversion errors."""


class NonOctetLengthError(FramingError):
    """Bit count is not a multiple of 8, so it cannot form whole bytes."""


class PayloadTooLargeError(FramingError):
    """Payload exceeds the 2^32 - 1 bytes the length header can describe."""


class TruncatedHeaderError(FramingError):
    """Fewer bits available than the 32 the length header needs."""


class TruncatedBodyError(FramingError):
    """The header announces more body bits than are actually available."""


class UnsupportedFormatError(StegError):
    """Input file is not a decodable 8-bit RGB/RGBA/grayscale PNG."""


class DimensionMismatchError(StegError):
    """Two images that must share dimensions do not."""


class CapacityError(StegError):
    """Embedding payload or extraction request exceeds the 1 bit/pixel capacity."""


class MissingKeyError(StegError):
    """The selected method requires a key and none was given."""


class UnexpectedKeyError(StegError):
    """A key was given to a method that does not use one."""
