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

"""Word files and benchmark CSV.

Text files hold one decimal integer per LF-terminated line. Binary files hold
little-endian fixed-width words. Benchmark results are CSV with a fixed column order.
"""
import csv
import enum
import struct
from typing import IO, Iterable, List, TextIO

from .bench import BenchRecord
from .words import WORD_BITS, WORD_MASK, WordArray

CSV_COLUMNS = (
    "algorithm",
    "workload",
    "n",
    "m",
    "runs",
    "median_ns",
    "k_passes",
    "verified",
)
_STRUCT_CODES = {1: "B", 2: "H", 4: "I", 8: "Q"}


class Format(enum.Enum):
    TEXT = "text"
    BINARY = "binary"


def read_text(
    stream: TextIO, *, min_value: int = 0, max_value: int = WORD_MASK
) -> List[int]:
    """Parse one integer per line.

    Tokens are plain ASCII decimal digits, with a leading minus sign allowed only when
    `min_value` is negative. Blank lines are skipped.

    Raises:
        ValueError: Naming the line of the first token that is not an integer or lies
            outside [min_value, max_value].
    """
    values = []
    for lineno, line in enumerate(stream, 1):
        token = line.strip()
        if not token:
            continue
        digits = token[1:] if min_value < 0 and token.startswith("-") else token
        if not (digits.isascii() and digits.isdigit()):
            raise ValueError(f"line {lineno}: invalid integer {token!r}")
        value = int(token)
        if value > max_value:
            raise ValueError(
                f"line {lineno}: {value} exceeds the maximum of {max_value}"
            )
        if value < min_value:
            raise ValueError(
                f"line {lineno}: {value} is below the minimum of {min_value}"
            )
        values.append(value)
    return values


def write_text(stream: TextIO, values: Iterable[int]) -> None:
    stream.write("".join(f"{value}\n" for value in values))


def _struct_format(count: int, word_bytes: int) -> str:
    if word_bytes not in _STRUCT_CODES:
        raise ValueError(f"word size must be one of {sorted(_STRUCT_CODES)} bytes")
    return f"<{count}{_STRUCT_CODES[word_bytes]}"


def read_binary(data: bytes, word_bytes: int = WORD_BITS // 8) -> WordArray:
    if len(data) % word_bytes:
        raise ValueError(
            f"file size {len(data)} is not a multiple of {word_bytes} bytes"
        )
    count = len(data) // word_bytes
    return WordArray(struct.unpack(_struct_format(count, word_bytes), data))


def write_binary(
    stream: IO[bytes], words: WordArray, word_bytes: int = WORD_BITS // 8
) -> None:
    values = words.tolist()
    try:
        stream.write(struct.pack(_struct_format(len(values), word_bytes), *values))
    except struct.error:
        raise ValueError(f"a value does not fit in {word_bytes} bytes") from None


def write_records(stream: TextIO, records: Iterable[BenchRecord]) -> None:
    """Write a CSV header and one row per record, with LF line endings."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(
            [
                record.algorithm,
                record.workload,
                record.n,
                record.m,
                record.runs,
                record.median_ns,
                record.k_passes,
                "true" if record.verified else "false",
            ]
        )


def read_records(stream: TextIO) -> List[BenchRecord]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_COLUMNS:
        raise ValueError("invalid benchmark CSV header")
    return [
        BenchRecord(
            algorithm=row[0],
            workload=row[1],
            n=int(row[2]),
            m=int(row[3]),
            runs=int(row[4]),
            median_ns=int(row[5]),
            k_passes=int(row[6]),
            verified=row[7] == "true",
        )
        for row in reader
    ]
