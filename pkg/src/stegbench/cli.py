"""Command line front end: embed, extract, eval, bench.

Exit codes are stable and scriptable:

    0  success
    1  other embedding/extraction failure
    2  usage error (bad flags, bad experiment shape)
    3  payload exceeds capacity
    4  key missing, unexpected, or not valid hex
    5  file I/O failure
    6  unsupported or mismatched image format
    7  stego data truncated or header unreadable
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from .bench import (
    BenchMode,
    ExperimentSpec,
    default_karim_key,
    emit_table,
    run_experiment,
)
from .errors import (
    CapacityError,
    DimensionMismatchError,
    MissingKeyError,
    PayloadTooLargeError,
    StegError,
    TruncatedBodyError,
    TruncatedHeaderError,
    UnexpectedKeyError,
    UnsupportedFormatError,
)
from .image import load_image, save_image
from .methods import Method, StegoKey, embed_message, extract_message
from .metrics import CmaxMode, histogram_delta, metrics_kv, psnr

_EXIT_OK = 0
_EXIT_FAILURE = 1
_EXIT_USAGE = 2
_EXIT_CAPACITY = 3
_EXIT_KEY = 4
_EXIT_IO = 5
_EXIT_FORMAT = 6
_EXIT_TRUNCATED = 7

_EPILOG = """\
exit codes:
  0  success
  1  other embedding/extraction failure
  2  usage error
  3  payload exceeds capacity
  4  key missing, unexpected, or not valid hex
  5  file I/O failure
  6  unsupported or mismatched image format
  7  stego data truncated or header unreadable
"""


class _CliError(Exception):
    """Command failure with a chosen exit code."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_key(text: str | None) -> StegoKey | None:
    if text is None:
        return None
    try:
        return StegoKey.from_hex(text)
    except ValueError as exc:
        raise _CliError(f"bad --key value: {exc}", _EXIT_KEY) from exc


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed {text!r} is not an integer") from None
    if not 0 <= value <= 0xFFFFFFFFFFFFFFFF:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _sizes_kb(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad size list {text!r}; expected comma-separated KB counts"
        ) from None
    if not sizes or any(size < 0 for size in sizes):
        raise argparse.ArgumentTypeError("sizes must be non-negative KB counts")
    return sizes


def cmd_embed(args: argparse.Namespace) -> int:
    if args.text is not None:
        payload = args.text.encode("utf-8")
    else:
        payload = Path(args.data).read_bytes()
    key = _parse_key(args.key)
    cover = load_image(args.cover)
    method = Method(args.method)
    report = embed_message(cover, payload, method, key)
    save_image(report.stego, args.out)
    scored = psnr(cover, report.stego, CmaxMode.FIXED_255)
    sys.stdout.write(metrics_kv(
        scored,
        method=method.value,
        cover=args.cover,
        stego=args.out,
        payload_bytes=len(payload),
        bits_embedded=report.bits_embedded,
        samples_changed=report.samples_changed,
    ))
    return _EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    key = _parse_key(args.key)
    stego = load_image(args.stego)
    method = Method(args.method)
    data = extract_message(stego, method, key)
    Path(args.out).write_bytes(data)
    print(f"method: {method.value}")
    print(f"stego: {args.stego}")
    print(f"out: {args.out}")
    print(f"payload_bytes: {len(data)}")
    return _EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    cover = load_image(args.cover)
    stego = load_image(args.stego)
    report = psnr(cover, stego, CmaxMode(args.cmax))
    delta = histogram_delta(cover, stego)
    sys.stdout.write(metrics_kv(report, cover=args.cover, stego=args.stego))
    print(f"hist_l1_total: {delta.total_l1}")
    return _EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    key = _parse_key(args.key)
    if key is None:
        key = default_karim_key(args.seed)
    spec = ExperimentSpec(
        mode=BenchMode(args.mode),
        image_paths=tuple(args.images),
        cipher_sizes_kb=args.sizes_kb,
        methods=tuple(Method),
        seed=args.seed,
        key=key,
        cmax_mode=CmaxMode(args.cmax),
    )
    try:
        table = run_experiment(spec)
    except ValueError as exc:
        raise _CliError(str(exc), _EXIT_USAGE) from exc
    sys.stdout.write(emit_table(table, args.format))
    return _EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegbench",
        description="LSB steganography codecs and a PSNR benchmark harness.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    method_choices = [method.value for method in Method]

    embed = sub.add_parser("embed", help="hide a payload inside a cover image")
    embed.add_argument("--cover", required=True, help="cover PNG path")
    source = embed.add_mutually_exclusive_group(required=True)
    source.add_argument("--data", help="payload file")
    source.add_argument("--text", help="payload as a UTF-8 string")
    embed.add_argument("--method", required=True, choices=method_choices)
    embed.add_argument("--key", help="hex key (karim only)")
    embed.add_argument("--out", required=True, help="stego PNG path")
    embed.set_defaults(func=cmd_embed)

    extract = sub.add_parser("extract", help="recover a payload from a stego image")
    extract.add_argument("--stego", required=True, help="stego PNG path")
    extract.add_argument("--method", required=True, choices=method_choices)
    extract.add_argument("--key", help="hex key (karim only)")
    extract.add_argument("--out", required=True, help="payload output path")
    extract.set_defaults(func=cmd_extract)

    evaluate = sub.add_parser("eval", help="score a stego image against its cover")
    evaluate.add_argument("--cover", required=True)
    evaluate.add_argument("--stego", required=True)
    evaluate.add_argument("--cmax", choices=[str(m) for m in CmaxMode],
                          default=str(CmaxMode.FIXED_255),
                          help="PSNR peak: fixed 255 or observed sample maximum")
    evaluate.set_defaults(func=cmd_eval)

    bench = sub.add_parser("bench", help="run a PSNR experiment grid")
    bench.add_argument("--mode", required=True,
                       choices=[str(m) for m in BenchMode])
    bench.add_argument("--images", required=True, nargs="+",
                       help="cover PNG paths")
    bench.add_argument("--sizes-kb", type=_sizes_kb, default=(2, 4, 6, 8),
                       help="comma-separated cipher sizes in KB (default 2,4,6,8)")
    bench.add_argument("--seed", type=_u64, default=0,
                       help="cipher generator seed (default 0)")
    bench.add_argument("--key", help="hex key for karim cells")
    bench.add_argument("--format", choices=["csv", "md"], default="csv")
    bench.add_argument("--cmax", choices=[str(m) for m in CmaxMode],
                       default=str(CmaxMode.FIXED_255))
    bench.set_defaults(func=cmd_bench)

    return parser


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (CapacityError, PayloadTooLargeError)):
        return _EXIT_CAPACITY
    if isinstance(exc, (MissingKeyError, UnexpectedKeyError)):
        return _EXIT_KEY
    if isinstance(exc, (UnsupportedFormatError, DimensionMismatchError)):
        return _EXIT_FORMAT
    if isinstance(exc, (TruncatedHeaderError, TruncatedBodyError)):
        return _EXIT_TRUNCATED
    if isinstance(exc, StegError):
        return _EXIT_FAILURE
    return _EXIT_IO


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (StegError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
