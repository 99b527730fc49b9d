import io

import pytest

from badseq.errors import BadseqError, SequenceFormatError
from badseq.services.codec_service import (
    detect_format,
    format_vector,
    read_path,
    read_sequence,
    write_vectors,
)
from badseq.services.construction_service import construct
from badseq.utils import parse_decimal

from .conftest import seq_of


def _written(vectors, fmt):
    buf = io.StringIO()
    count = write_vectors(vectors, buf, fmt)
    return count, buf.getvalue()


def test_csv_bytes_are_exact(base):
    count, text = _written(base, "csv")
    assert count == 4
    assert text == "1,1\n0,2\n1,0\n0,0\n"


def test_jsonl_bytes_are_exact(base):
    count, text = _written(base, "jsonl")
    assert count == 4
    assert text.splitlines()[0] == '["1","1"]'
    assert text.endswith('["0","0"]\n')


def test_format_vector_big_values():
    big = 3**100
    assert format_vector((big, 0)) == f"{big},0"
    assert format_vector((big, 0), "jsonl") == f'["{big}","0"]'


def test_unknown_format_is_rejected(base):
    with pytest.raises(SequenceFormatError):
        write_vectors(base, io.StringIO(), "xml")


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_written_sequence_reads_back(fmt):
    seq = construct(4)
    _, text = _written(seq, fmt)
    assert read_sequence(io.StringIO(text), fmt) == seq


def test_both_formats_decode_to_the_same_sequence():
    from_csv = read_sequence(io.StringIO("1,1,0,4\n0,2,1,5\n"), "csv")
    from_jsonl = read_sequence(io.StringIO('["1","1","0","4"]\n["0","2","1","5"]\n'), "jsonl")
    assert from_csv == from_jsonl
    assert from_csv[1] == (0, 2, 1, 5)


def test_jsonl_accepts_plain_integers():
    seq = read_sequence(io.StringIO("[1,2]\n[0,3]\n"), "jsonl")
    assert list(seq) == [(1, 2), (0, 3)]


def test_blank_lines_are_skipped():
    seq = read_sequence(io.StringIO("1,1\n\n0,2\n"), "csv")
    assert len(seq) == 2


def test_empty_file_needs_a_dimension():
    with pytest.raises(SequenceFormatError):
        read_sequence(io.StringIO(""), "csv")
    assert len(read_sequence(io.StringIO(""), "csv", dim=3)) == 0


@pytest.mark.parametrize(
    "text",
    ["1,-2\n", "1,a\n", "1,1.5\n", "1,2\n1\n", "1,2\n3,4,5\n", "1, 2\n", " 1,2\n", "1,+2\n", "1,1_0\n"],
)
def test_malformed_csv_is_rejected(text):
    with pytest.raises(SequenceFormatError):
        read_sequence(io.StringIO(text), "csv")


@pytest.mark.parametrize("raw", ["12", "0", "9" * 5000])
def test_parse_decimal_accepts_plain_digits(raw):
    assert parse_decimal(raw) == int(raw)


@pytest.mark.parametrize("raw", ["", " 1", "1 ", "1\n", "+1", "-1", "1_000", "1e3", "\uff11", None])
def test_parse_decimal_is_strict(raw):
    with pytest.raises(ValueError):
        parse_decimal(raw)


@pytest.mark.parametrize(
    "text",
    ['{"a": 1}\n', "[1, 2\n", '["1","x"]\n', "[-1]\n", "[true]\n", '["1"]\n["1","2"]\n'],
)
def test_malformed_jsonl_is_rejected(text):
    with pytest.raises(SequenceFormatError):
        read_sequence(io.StringIO(text), "jsonl")


def test_detect_format():
    assert detect_format("seq.jsonl") == "jsonl"
    assert detect_format("SEQ.NDJSON") == "jsonl"
    assert detect_format("seq.csv") == "csv"
    assert detect_format("seq.txt") == "csv"


def test_read_path_uses_the_extension(tmp_path):
    path = tmp_path / "tiny.jsonl"
    path.write_text('["1","1"]\n["0","2"]\n', encoding="utf-8")
    assert read_path(str(path)) == seq_of((1, 1), (0, 2))


def test_read_path_missing_file(tmp_path):
    with pytest.raises(BadseqError):
        read_path(str(tmp_path / "missing.csv"))
