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

"""Reference sorts.

These are the correctness oracles and benchmark competitors of the associative sort.
All of them sort a `WordArray` in place and, except for the comparison sort, use
auxiliary memory that grows with the input: Theta(m) counters for counting sort and
Theta(n) scratch for radix and bucket sort.

Attributes:
    COUNTING_TABLE_CAP: The largest key range counting sort accepts.
"""
import enum
from typing import Callable, Dict, Iterable, List

from ._assoc import lib
from .words import WordArray

COUNTING_TABLE_CAP = 2 ** 28


class BaselineKind(enum.Enum):
    COMPARISON = "comparison"
    COUNTING = "counting"
    RADIX_LSD = "radix_lsd"
    BUCKET = "bucket"


def _check(status: int) -> None:
    if status == -2:
        raise MemoryError("cannot allocate scratch memory")


def oracle_sort(values: Iterable[int]) -> List[int]:
    """Return the values in ascending order using Python's own sort."""
    return sorted(values)


def comparison_sort(words: WordArray) -> None:
    """Sort with the C library's qsort."""
    lib.assoc_comparison_sort(words.data, len(words))


def counting_sort(words: WordArray, cap: int = COUNTING_TABLE_CAP) -> None:
    """Distribution counting sort with one counter per value of the key range.

    Raises:
        ValueError: If max - min + 1 exceeds `cap`.
    """
    status = lib.assoc_counting_sort(words.data, len(words), cap)
    if status == -1:
        raise ValueError(f"key range exceeds the counting table cap of {cap}")
    _check(status)


def radix_sort_lsd(words: WordArray) -> None:
    """Least significant digit radix sort on 8-bit digits.

    Digits that are the same for every word are skipped.
    """
    _check(lib.assoc_radix_sort_lsd(words.data, len(words)))


def bucket_sort(words: WordArray) -> None:
    """Bucket sort with n buckets over [min, max] and insertion sort per bucket."""
    _check(lib.assoc_bucket_sort(words.data, len(words)))


BASELINES: Dict[BaselineKind, Callable[[WordArray], None]] = {
    BaselineKind.COMPARISON: comparison_sort,
    BaselineKind.COUNTING: counting_sort,
    BaselineKind.RADIX_LSD: radix_sort_lsd,
    BaselineKind.BUCKET: bucket_sort,
}
