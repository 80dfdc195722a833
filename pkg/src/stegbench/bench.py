"""Benchmark runner: seeded cipher payloads, PSNR tables, CSV/markdown output.

Three experiment shapes, selected by :class:`BenchMode`:

    IMAGES  same cipher size, one row per cover image
    SIZES   same cipher size, one row per cover dimension
    CIPHER  one cover image, one row per cipher size

Each cell embeds a seeded pseudorandom cipher with one method and scores
the stego image against its cover.  Cells embed the raw cipher bits, with
no length frame, so the full 1 bit/pixel capacity is measurable; framing
is a transport concern of the embed/extract commands, not of distortion
measurement.  A failing cell (payload too big, unreadable image, ...) is
recorded in the table rather than aborting the run.

Results are fully deterministic in (spec, seed): cipher bytes come from a
seeded generator and cells are keyed by (row, method), so two identical
runs emit byte-identical CSV.
"""

from __future__ import annotations

import csv
import io
import os
import random
from dataclasses import dataclass, field
from enum import Enum

from .errors import StegError
from .framing import bytes_to_bits
from .image import RgbImage, load_image
from .methods import Method, StegoKey, embed_bits
from .metrics import CmaxMode, psnr

_BYTES_PER_KB = 1024


class BenchMode(Enum):
    """Experiment shape; the value is the CLI spelling."""

    IMAGES = "images"
    SIZES = "sizes"
    CIPHER = "cipher"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExperimentSpec:
    """Declarative benchmark configuration.

    cipher_sizes_kb lists the payload sizes (1 KB = 1024 bytes); CIPHER
    mode uses them all as rows, the other modes embed the first size into
    every image.  The key feeds karim cells and is ignored by the other
    methods.
    """

    mode: BenchMode
    image_paths: tuple[str, ...]
    cipher_sizes_kb: tuple[int, ...]
    methods: tuple[Method, ...] = tuple(Method)
    seed: int = 0
    key: StegoKey | None = None
    cmax_mode: CmaxMode = CmaxMode.FIXED_255


@dataclass(frozen=True)
class TableCell:
    psnr_db: float | None = None
    mse: float | None = None
    error: str | None = None


@dataclass
class ResultTable:
    """PSNR/MSE grid keyed by (row label, method)."""

    row_header: str
    rows: tuple[str, ...]
    methods: tuple[Method, ...]
    payload_bytes: dict[str, int] = field(default_factory=dict)
    cells: dict[tuple[str, Method], TableCell] = field(default_factory=dict)


def generate_cipher(seed: int, size_kb: int) -> bytes:
    """Deterministic pseudorandom payload of size_kb * 1024 bytes."""
    if size_kb < 0:
        raise ValueError("cipher size must be >= 0 KB")
    return random.Random(seed).randbytes(size_kb * _BYTES_PER_KB)


def default_karim_key(seed: int) -> StegoKey:
    """128-bit key derived from the bench seed, used when none is given."""
    return StegoKey.from_bytes(random.Random(f"karim-key:{seed}").randbytes(16))


def _run_cell(cover: RgbImage, cipher: bytes, method: Method,
              key: StegoKey | None, cmax_mode: CmaxMode) -> TableCell:
    try:
        payload = bytes_to_bits(cipher)
        report = embed_bits(cover, payload, method,
                            key if method is Method.KARIM else None)
        scored = psnr(cover, report.stego, cmax_mode)
        return TableCell(psnr_db=scored.psnr_db, mse=scored.mse)
    except StegError as exc:
        return TableCell(error=str(exc))


def _unique_label(label: str, used: set[str]) -> str:
    candidate = label
    n = 2
    while candidate in used:
        candidate = f"{label} ({n})"
        n += 1
    used.add(candidate)
    return candidate


def run_experiment(spec: ExperimentSpec) -> ResultTable:
    """Execute every (row, method) cell of the experiment.

    Cells are independent; results are keyed, not appended, so any
    evaluation order produces the same table.
    """
    if not spec.image_paths:
        raise ValueError("at least one image is required")
    if not spec.cipher_sizes_kb:
        raise ValueError("at least one cipher size is required")
    if spec.mode is BenchMode.CIPHER and len(spec.image_paths) != 1:
        raise ValueError(
            f"cipher mode takes exactly one image, got {len(spec.image_paths)}"
        )

    # (label, cover or None, load error, cipher bytes) per row
    rows: list[tuple[str, RgbImage | None, str | None, bytes]] = []
    used_labels: set[str] = set()

    if spec.mode is BenchMode.CIPHER:
        path = spec.image_paths[0]
        cover, load_error = _try_load(path)
        for size_kb in spec.cipher_sizes_kb:
            label = _unique_label(str(size_kb), used_labels)
            rows.append((label, cover, load_error, generate_cipher(spec.seed, size_kb)))
        row_header = "cipher_kb"
    else:
        cipher = generate_cipher(spec.seed, spec.cipher_sizes_kb[0])
        for path in spec.image_paths:
            cover, load_error = _try_load(path)
            if spec.mode is BenchMode.IMAGES or cover is None:
                label = os.path.basename(path)
            else:
                label = f"{cover.width}x{cover.height}"
            rows.append((_unique_label(label, used_labels), cover, load_error, cipher))
        row_header = "image" if spec.mode is BenchMode.IMAGES else "dimensions"

    table = ResultTable(
        row_header=row_header,
        rows=tuple(label for label, _, _, _ in rows),
        methods=spec.methods,
    )
    for label, cover, load_error, cipher in rows:
        table.payload_bytes[label] = len(cipher)
        for method in spec.methods:
            if load_error is not None:
                cell = TableCell(error=load_error)
            else:
                cell = _run_cell(cover, cipher, method, spec.key, spec.cmax_mode)
            table.cells[(label, method)] = cell
    return table


def _try_load(path: str) -> tuple[RgbImage | None, str | None]:
    try:
        return load_image(path), None
    except (StegError, OSError) as exc:
        return None, str(exc)


_ERROR_PREFIX = "error:"


def emit_table(table: ResultTable, fmt: str = "csv") -> str:
    """Render a table as "csv" (full precision) or "md" (aligned PSNR grid)."""
    if fmt == "csv":
        return _emit_csv(table)
    if fmt == "md":
        return _emit_markdown(table)
    raise ValueError(f"unknown table format {fmt!r}; use 'csv' or 'md'")


def _emit_csv(table: ResultTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = [table.row_header, "payload_bytes"]
    for method in table.methods:
        header += [f"{method.value}_psnr_db", f"{method.value}_mse"]
    writer.writerow(header)
    for label in table.rows:
        record = [label, str(table.payload_bytes[label])]
        for method in table.methods:
            cell = table.cells[(label, method)]
            if cell.error is not None:
                record += [_ERROR_PREFIX + cell.error, ""]
            else:
                record += [repr(cell.psnr_db), repr(cell.mse)]
        writer.writerow(record)
    return buf.getvalue()


def parse_table_csv(text: str) -> ResultTable:
    """Rebuild a ResultTable from :func:`emit_table`'s CSV output."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty CSV") from None
    if len(header) < 2 or header[1] != "payload_bytes":
        raise ValueError("missing payload_bytes column")
    methods = []
    for column in header[2::2]:
        if not column.endswith("_psnr_db"):
            raise ValueError(f"unexpected column {column!r}")
        methods.append(Method(column[: -len("_psnr_db")]))
    table = ResultTable(
        row_header=header[0],
        rows=(),
        methods=tuple(methods),
    )
    rows = []
    for record in reader:
        label = record[0]
        rows.append(label)
        table.payload_bytes[label] = int(record[1])
        for i, method in enumerate(methods):
            psnr_text, mse_text = record[2 + 2 * i], record[3 + 2 * i]
            if psnr_text.startswith(_ERROR_PREFIX):
                cell = TableCell(error=psnr_text[len(_ERROR_PREFIX):])
            else:
                cell = TableCell(psnr_db=float(psnr_text), mse=float(mse_text))
            table.cells[(label, method)] = cell
    table.rows = tuple(rows)
    return table


def _format_psnr(cell: TableCell) -> str:
    if cell.error is not None:
        return "error"
    if cell.psnr_db == float("inf"):
        return "inf"
    return f"{cell.psnr_db:.4f}"


def _emit_markdown(table: ResultTable) -> str:
    headers = [table.row_header] + [method.value for method in table.methods]
    body = [
        [label] + [_format_psnr(table.cells[(label, method)]) for method in table.methods]
        for label in table.rows
    ]
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in body)) if body else len(headers[i])
        for i in range(len(headers))
    ]
    def line(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    out = [line(headers), line(["-" * w for w in widths])]
    out += [line(row) for row in body]
    return "\n".join(out) + "\n"
