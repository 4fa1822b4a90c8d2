"""File formats: sparse CSV signals, periodic documents, kernel reports, PGM images.

All writers are deterministic (same data, same bytes).  All readers
raise a typed error from :mod:`bishift.errors` on malformed input.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

import numpy as np

from .errors import (
    BadMagicError,
    BadValueTokenError,
    DuplicateIndexError,
    RankMismatchError,
    SchemaError,
    TruncatedPixelDataError,
)
from .fields import FloatField, parse_field_spec
from .parsing import parse_system
from .sequences import FiniteSeq, PeriodicSeq, SeqVector
from .systems import KernelBasis, System

_INDEX_RE = re.compile(r"-?[0-9]+\Z")


def read_seq_csv(path, rank: int, field) -> FiniteSeq:
    """Read a sparse signal: one row per nonzero sample, ``i_1,..,i_r,value``."""
    text = Path(path).read_text()
    terms = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != rank + 1:
            raise RankMismatchError(
                f"{path}: line {lineno} has {len(cells)} fields, expected {rank + 1}"
            )
        if not all(_INDEX_RE.fullmatch(c) for c in cells[:rank]):
            raise BadValueTokenError(
                f"{path}: line {lineno}: bad index {cells[:rank]!r}"
            )
        idx = tuple(int(c) for c in cells[:rank])
        if idx in terms:
            raise DuplicateIndexError(f"{path}: line {lineno}: index {idx} repeated")
        terms[idx] = field.parse_token(cells[rank])
    return FiniteSeq(rank, field, terms)


def write_seq_csv(path, seq: FiniteSeq) -> None:
    """Write rows in ascending lexicographic index order."""
    field = seq.field
    lines = []
    for idx in seq.sorted_support():
        cells = [str(x) for x in idx]
        cells.append(field.format_value(seq.terms[idx]))
        lines.append(",".join(cells))
    Path(path).write_text("".join(line + "\n" for line in lines))


def _pgm_tokens(data: bytes):
    """Header tokens of a PGM file, skipping whitespace and # comments."""
    pos = 0
    tokens = []
    while len(tokens) < 4 and pos < len(data):
        c = data[pos : pos + 1]
        if c.isspace():
            pos += 1
            continue
        if c == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
        if len(tokens) == 4:
            pos += 1  # single whitespace byte separates header from raster
    return tokens, pos


def read_pgm(path):
    """Read a binary P5 image.

    Pixel at row y, column x becomes the sample at index (x, y) with
    value gray / maxval in the default float field.  Returns
    ``(seq, width, height, maxval)`` so a caller can write the image
    back with identical geometry.
    """
    data = Path(path).read_bytes()
    tokens, pos = _pgm_tokens(data)
    if not tokens or tokens[0] != b"P5":
        raise BadMagicError(f"{path}: not a binary P5 image")
    if len(tokens) < 4:
        raise BadMagicError(f"{path}: incomplete P5 header")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise BadMagicError(f"{path}: non-numeric P5 header fields") from None
    if width < 1 or height < 1:
        raise BadMagicError(f"{path}: bad image size {width}x{height}")
    if not 1 <= maxval <= 65535:
        raise BadMagicError(f"{path}: maxval {maxval} outside 1..65535")
    sample_bytes = 1 if maxval < 256 else 2
    expected = width * height * sample_bytes
    raster = data[pos:]
    if len(raster) < expected:
        raise TruncatedPixelDataError(
            f"{path}: raster has {len(raster)} bytes, expected {expected}"
        )
    if len(raster) > expected and raster[expected:].strip():
        raise TruncatedPixelDataError(f"{path}: trailing data after the raster")
    dtype = np.uint8 if sample_bytes == 1 else np.dtype(">u2")
    grays = np.frombuffer(raster[:expected], dtype=dtype).reshape(height, width)
    field = FloatField()
    terms = {}
    for y, x in zip(*np.nonzero(grays)):
        terms[(int(x), int(y))] = int(grays[y, x]) / maxval
    return FiniteSeq(2, field, terms), width, height, maxval


def write_pgm(path, seq: FiniteSeq, width: int, height: int, maxval: int = 255) -> None:
    """Write the window [0,width) x [0,height) of a rank-2 float signal.

    Samples are clamped to [0, 1] and quantized to round(v * maxval)
    half up; anything outside the window is not written.
    """
    if seq.rank != 2:
        raise RankMismatchError("image output needs a rank-2 signal")
    if not 1 <= maxval <= 65535:
        raise ValueError(f"maxval {maxval} outside 1..65535")
    grays = np.zeros((height, width), dtype=np.uint32)
    for (x, y), v in seq.terms.items():
        if 0 <= x < width and 0 <= y < height:
            value = min(max(float(v.payload), 0.0), 1.0)
            grays[y, x] = int(value * maxval + 0.5)
    dtype = np.uint8 if maxval < 256 else np.dtype(">u2")
    header = f"P5\n{width} {height}\n{maxval}\n".encode("ascii")
    Path(path).write_bytes(header + grays.astype(dtype).tobytes())


def _stacked_values(vec: SeqVector):
    out = []
    for comp in vec:
        out.extend(comp.values)
    return out


def write_kernel_report(kernel: KernelBasis, path) -> None:
    """Write periods, dimension and the basis in stacked coordinate order."""
    field = kernel.field
    doc = {
        "rank": kernel.rank,
        "field": field.spec(),
        "periods": list(kernel.periods),
        "dimension": kernel.dimension,
        "basis": [
            [field.format_value(v) for v in _stacked_values(vec)]
            for vec in kernel.basis
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def read_kernel_report(path) -> KernelBasis:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: invalid kernel report: {e}") from None
    for key in ("rank", "field", "periods", "dimension", "basis"):
        if key not in doc:
            raise SchemaError(f"{path}: kernel report is missing {key!r}")
    rank = doc["rank"]
    field = parse_field_spec(doc["field"])
    periods = tuple(doc["periods"])
    size = math.prod(periods)
    basis = []
    for row in doc["basis"]:
        if len(row) % size:
            raise SchemaError(f"{path}: basis row length {len(row)} not a multiple of {size}")
        values = [field.parse_token(t) for t in row]
        comps = [
            PeriodicSeq(rank, field, periods, values[j * size : (j + 1) * size])
            for j in range(len(values) // size)
        ]
        basis.append(SeqVector(comps))
    if doc["dimension"] != len(basis):
        raise SchemaError(f"{path}: dimension {doc['dimension']} but {len(basis)} basis rows")
    return KernelBasis(
        rank=rank,
        field=field,
        periods=periods,
        dimension=len(basis),
        basis=tuple(basis),
    )


def write_periodic_json(path, signal) -> None:
    """Write a periodic signal or signal vector as one stacked document."""
    if isinstance(signal, PeriodicSeq):
        signal = SeqVector([signal])
    if not isinstance(signal, SeqVector) or signal.kind != "periodic":
        raise TypeError("expected a periodic signal or signal vector")
    field = signal.field
    doc = {
        "rank": signal.rank,
        "field": field.spec(),
        "periods": list(signal.periods),
        "values": [field.format_value(v) for v in _stacked_values(signal)],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def read_periodic_json(path, components: int = 1) -> SeqVector:
    """Read a stacked periodic document with the given component count."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: invalid periodic document: {e}") from None
    for key in ("rank", "field", "periods", "values"):
        if key not in doc:
            raise SchemaError(f"{path}: periodic document is missing {key!r}")
    rank = doc["rank"]
    field = parse_field_spec(doc["field"])
    periods = tuple(doc["periods"])
    size = math.prod(periods)
    values = doc["values"]
    if len(values) != components * size:
        raise SchemaError(
            f"{path}: {len(values)} values for {components} components of size {size}"
        )
    parsed = [field.parse_token(str(t)) for t in values]
    comps = [
        PeriodicSeq(rank, field, periods, parsed[j * size : (j + 1) * size])
        for j in range(components)
    ]
    return SeqVector(comps)


def read_system(path) -> System:
    return parse_system(Path(path).read_text())
