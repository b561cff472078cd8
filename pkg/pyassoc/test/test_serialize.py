# Copyright 2019 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import io

import pytest

from pyassoc.bench import BenchRecord
from pyassoc.serialize import (
    CSV_COLUMNS,
    read_binary,
    read_records,
    read_text,
    write_binary,
    write_records,
    write_text,
)
from pyassoc.words import MAX_PAYLOAD, WORD_MASK, WordArray


def test_read_text():
    stream = io.StringIO("3\n\n 1\n2\n")
    assert read_text(stream) == [3, 1, 2]
    assert read_text(io.StringIO("")) == []
    assert read_text(io.StringIO(f"{WORD_MASK}\n")) == [WORD_MASK]
    assert read_text(io.StringIO("-5\n"), min_value=-10) == [-5]


@pytest.mark.parametrize(
    "text, message",
    [
        ("1\nfoo\n", "line 2"),
        ("1\n2\n1.5\n", "line 3"),
        ("-1\n", "line 1: invalid integer"),
        ("1_000\n", "line 1: invalid integer"),
        ("7\n+5\n", "line 2: invalid integer"),
        ("\u0663\n", "line 1: invalid integer"),
        ("1 2\n", "line 1: invalid integer"),
        (f"{MAX_PAYLOAD + 1}\n", "exceeds the maximum"),
    ],
)
def test_read_text_errors(text, message):
    with pytest.raises(ValueError, match=message):
        read_text(io.StringIO(text), max_value=MAX_PAYLOAD)


def test_write_text():
    stream = io.StringIO()
    write_text(stream, [0, 7, WORD_MASK])
    assert stream.getvalue() == f"0\n7\n{WORD_MASK}\n"


def test_binary():
    data = bytes([1, 0, 0, 0, 0, 0, 0, 0]) + bytes([0xFF] * 8)
    assert read_binary(data) == [1, WORD_MASK]
    assert read_binary(b"\x02\x01", 1) == [2, 1]
    assert read_binary(b"\x00\x01", 2) == [256]
    assert read_binary(b"") == []

    stream = io.BytesIO()
    write_binary(stream, WordArray([1, WORD_MASK]))
    assert stream.getvalue() == data

    stream = io.BytesIO()
    write_binary(stream, WordArray([258]), 2)
    assert stream.getvalue() == b"\x02\x01"


def test_binary_errors():
    with pytest.raises(ValueError, match="multiple"):
        read_binary(b"\x00" * 7)
    with pytest.raises(ValueError):
        read_binary(b"\x00" * 3, 3)
    with pytest.raises(ValueError, match="does not fit"):
        write_binary(io.BytesIO(), WordArray([256]), 1)


def test_records():
    records = [
        BenchRecord("assoc", "uniform:10:10:0", 10, 10, 3, 1500, 1, True),
        BenchRecord("radix_lsd", "uniform:10:10:0", 10, 10, 3, 900, 0, True),
    ]
    stream = io.StringIO()
    write_records(stream, records)
    lines = stream.getvalue().split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "assoc,uniform:10:10:0,10,10,3,1500,1,true"
    assert lines[-1] == ""

    stream.seek(0)
    assert read_records(stream) == records

    with pytest.raises(ValueError):
        read_records(io.StringIO("algorithm,n\n"))


def test_read_signed_text():
    assert read_text(io.StringIO("-5\n0\n3\n"), min_value=-10) == [-5, 0, 3]
    with pytest.raises(ValueError, match="below the minimum"):
        read_text(io.StringIO("-11\n"), min_value=-10)
    for token in ("-", "--1", "+1", "-+1"):
        with pytest.raises(ValueError, match="invalid integer"):
            read_text(io.StringIO(f"{token}\n"), min_value=-10)
