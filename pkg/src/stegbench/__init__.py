"""LSB steganography codecs with a PSNR/MSE benchmark harness.

Three embedding methods over 8-bit RGB images: classic blue-channel LSB,
a keyed red-LSB-XOR channel selector, and a cyclic red/green/blue rotation.
Everything needed to reproduce the benchmark tables lives behind
:func:`run_experiment`; the same codecs are scriptable via the
``stegbench`` command.
"""

from .bench import (
    BenchMode,
    ExperimentSpec,
    ResultTable,
    TableCell,
    default_karim_key,
    emit_table,
    generate_cipher,
    parse_table_csv,
    run_experiment,
)
from .errors import (
    CapacityError,
    DimensionMismatchError,
    FramingError,
    MissingKeyError,
    NonOctetLengthError,
    PayloadTooLargeError,
    StegError,
    TruncatedBodyError,
    TruncatedHeaderError,
    UnexpectedKeyError,
    UnsupportedFormatError,
)
from .framing import (
    HEADER_BITS,
    MAX_PAYLOAD_BYTES,
    bits_to_bytes,
    bytes_to_bits,
    frame_payload,
    parse_frame,
    parse_header,
)
from .image import (
    Channel,
    RgbImage,
    capacity_bits,
    extract_lsb,
    load_image,
    merge_planes,
    payload_capacity_bytes,
    replace_lsb,
    save_image,
    split_planes,
)
from .methods import (
    EmbedReport,
    Method,
    StegoKey,
    channel_for_index,
    embed_bits,
    embed_classic_lsb,
    embed_cyclic,
    embed_karim,
    embed_message,
    extract_bits,
    extract_classic_lsb,
    extract_cyclic,
    extract_karim,
    extract_message,
)
from .metrics import (
    CmaxMode,
    Histogram,
    HistogramDelta,
    MetricsReport,
    histogram,
    histogram_delta,
    histogram_to_csv,
    metrics_kv,
    mse,
    per_channel_mse,
    psnr,
)

__version__ = "0.1.0"

__all__ = [
    "BenchMode",
    "CapacityError",
    "Channel",
    "CmaxMode",
    "DimensionMismatchError",
    "EmbedReport",
    "ExperimentSpec",
    "FramingError",
    "HEADER_BITS",
    "Histogram",
    "HistogramDelta",
    "MAX_PAYLOAD_BYTES",
    "MetricsReport",
    "Method",
    "MissingKeyError",
    "NonOctetLengthError",
    "PayloadTooLargeError",
    "ResultTable",
    "RgbImage",
    "StegError",
    "StegoKey",
    "TableCell",
    "TruncatedBodyError",
    "TruncatedHeaderError",
    "UnexpectedKeyError",
    "UnsupportedFormatError",
    "bits_to_bytes",
    "bytes_to_bits",
    "capacity_bits",
    "channel_for_index",
    "default_karim_key",
    "embed_bits",
    "embed_classic_lsb",
    "embed_cyclic",
    "embed_karim",
    "embed_message",
    "emit_table",
    "extract_bits",
    "extract_classic_lsb",
    "extract_cyclic",
    "extract_karim",
    "extract_lsb",
    "extract_message",
    "frame_payload",
    "generate_cipher",
    "histogram",
    "histogram_delta",
    "histogram_to_csv",
    "load_image",
    "merge_planes",
    "metrics_kv",
    "mse",
    "parse_frame",
    "parse_header",
    "parse_table_csv",
    "payload_capacity_bytes",
    "per_channel_mse",
    "psnr",
    "replace_lsb",
    "run_experiment",
    "save_image",
    "split_planes",
    "__version__",
]
