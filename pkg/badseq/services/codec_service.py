"""
badseq/services/codec_service.py
---------------------------------
The two wire formats, both one vector per line:

  csv    1,1,0,3            unsigned decimals, single commas, no spaces, "\\n"
  jsonl  ["1","1","0","3"]  decimal strings, since values outgrow any
                            fixed-width integer a JSON reader might use

Writers stream (they never hold the sequence), readers materialize.
"""

from __future__ import annotations

import csv
import json
import logging
import os
from collections.abc import Iterable
from typing import TextIO

from ..errors import BadseqError, SequenceFormatError
from ..models import VectorSequence, make_vector
from ..utils import parse_decimal

log = logging.getLogger(__name__)

FORMATS = ("csv", "jsonl")


def detect_format(path: str) -> str:
    """Format from the file extension; anything that is not .jsonl/.json is csv."""
    ext = os.path.splitext(path)[1].lower()
    return "jsonl" if ext in (".jsonl", ".json", ".ndjson") else "csv"


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise SequenceFormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def format_vector(vec: Iterable[int], fmt: str = "csv") -> str:
    """One record, without the trailing newline."""
    if fmt == "jsonl":
        return json.dumps([str(int(value)) for value in vec], separators=(",", ":"))
    return ",".join(str(int(value)) for value in vec)


def write_vectors(vectors: Iterable[Iterable[int]], fh: TextIO, fmt: str = "csv") -> int:
    """Write every vector as one line; returns how many were written."""
    _check_format(fmt)
    if fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        written = 0
        for vec in vectors:
            writer.writerow([str(int(value)) for value in vec])
            written += 1
        return written

    written = 0
    for vec in vectors:
        fh.write(format_vector(vec, "jsonl"))
        fh.write("\n")
        written += 1
    return written


def _parse_cell(raw, line_no: int) -> int:
    # jsonl readers may hand us ints as well as strings; both are accepted.
    if isinstance(raw, int) and not isinstance(raw, bool):
        if raw < 0:
            raise SequenceFormatError(f"line {line_no}: negative coordinate {raw}")
        return raw
    if not isinstance(raw, str):
        raise SequenceFormatError(f"line {line_no}: coordinate {raw!r} is not a decimal")
    try:
        return parse_decimal(raw, "coordinate")
    except ValueError as e:
        raise SequenceFormatError(f"line {line_no}: {e}") from None


def _csv_rows(fh: TextIO):
    for line_no, row in enumerate(csv.reader(fh), start=1):
        if not row or row == [""]:
            continue
        yield line_no, row


def _jsonl_rows(fh: TextIO):
    for line_no, line in enumerate(fh, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            row = json.loads(line)
        except json.JSONDecodeError as e:
            raise SequenceFormatError(f"line {line_no}: not JSON ({e.msg})") from None
        if not isinstance(row, list):
            raise SequenceFormatError(f"line {line_no}: expected a JSON array")
        yield line_no, row


def read_sequence(fh: TextIO, fmt: str = "csv", dim: int | None = None) -> VectorSequence:
    """
    Parse a whole file into a VectorSequence. Every line must have the same
    number of coordinates; an empty file needs `dim` to be meaningful.
    """
    _check_format(fmt)
    rows = _jsonl_rows(fh) if fmt == "jsonl" else _csv_rows(fh)
    vectors = []
    for line_no, row in rows:
        if not row:
            raise SequenceFormatError(f"line {line_no}: empty vector")
        vec = make_vector(_parse_cell(cell, line_no) for cell in row)
        if dim is None:
            dim = len(vec)
        elif len(vec) != dim:
            raise SequenceFormatError(f"line {line_no}: {len(vec)} coordinates, expected {dim}")
        vectors.append(vec)
    if dim is None:
        raise SequenceFormatError("no vectors found and no dimension given")
    log.info("read %d vectors of dimension %d", len(vectors), dim)
    return VectorSequence(dim=dim, vectors=tuple(vectors))


def read_path(path: str, fmt: str | None = None) -> VectorSequence:
    fmt = fmt or detect_format(path)
    try:
        with open(path, newline="" if fmt == "csv" else None, encoding="utf-8") as fh:
            return read_sequence(fh, fmt)
    except OSError as e:
        raise BadseqError(f"cannot read {path}: {e.strerror}") from None
