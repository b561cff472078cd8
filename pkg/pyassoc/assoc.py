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

"""In-place associative integer sorting.

A pass sorts every integer of the interval [delta, delta + n - 1] of an n-word list
to the front of that list, where delta is the list's minimum. It runs in four
phases over the same buffer:

1. practice: each in-interval integer is mapped to position value - delta of the
   list (the imaginary subspace). The first occurrence turns that word into a node;
   later occurrences are idle and only bump the node's record.
2. store: the records are moved to the front of the list (the short-term memory) by
   swapping payloads only, so every tag bit stays where it was set.
3. partition: the idle integers are clustered right after the records; the
   integers outside the interval go to the end.
4. retrieve: nodes are scanned right to left; each one recalls its value from its
   position and expands it record + 1 times, right to left, over the front of the
   list. Each processed tag is cleared.

The out-of-interval integers left at the end form the next pass's list, with its
minimum delta' already found while practicing. The driver repeats until at most one
integer is left.
"""
from __future__ import annotations

import dataclasses
import logging
from typing import Any, List, Optional, Tuple

from ._assoc import ffi, lib
from .words import MAX_LENGTH, MAX_PAYLOAD, WordArray

logger = logging.getLogger(__name__)


class InvariantViolation(RuntimeError):
    """A pass left the buffer in a state its phases cannot produce."""


@dataclasses.dataclass(frozen=True)
class PassStats:
    """Counters of one pass.

    Every integer of the pass's list is exactly one of: the integer that created a
    node (`n_d`), an idle integer (`n_c`), or an out-of-interval integer
    (`n_d_prime`).

    Attributes:
        n: Length of the pass's list.
        delta: Minimum of the list.
        n_d: Number of nodes, i.e. distinct practiced integers.
        n_c: Number of idle integers.
        n_d_prime: Number of integers outside [delta, delta + n - 1].
        delta_prime: Minimum of the out-of-interval integers, or None if there are
            none.
        start: Offset of the pass's list within the buffer given to the driver.
    """

    n: int
    delta: int
    n_d: int
    n_c: int
    n_d_prime: int
    delta_prime: Optional[int]
    start: int = 0

    @classmethod
    def from_c(cls, stats: Any, start: int = 0) -> PassStats:
        return cls(
            n=stats.n,
            delta=stats.delta,
            n_d=stats.n_d,
            n_c=stats.n_c,
            n_d_prime=stats.n_d_prime,
            delta_prime=stats.delta_prime if stats.n_d_prime else None,
            start=start,
        )

    @property
    def emitted(self) -> int:
        """The number of integers this pass placed in sorted order."""
        return self.n_d + self.n_c


@dataclasses.dataclass
class SortReport:
    """Summary of a sort.

    Attributes:
        passes: The statistics of each pass, in order.
        n: Length of the input.
        m: Range max - min + 1 of the input (0 for an empty input).
        total_writes: Word writes performed, if the sort was instrumented.
        remainder: Integers the driver left in place without a pass: 1 if the last
            pass deferred a single integer, else 0 (summed over both halves for
            full-universe sorts).
    """

    passes: List[PassStats] = dataclasses.field(default_factory=list)
    n: int = 0
    m: int = 0
    total_writes: int = 0
    remainder: int = 0

    @property
    def k(self) -> int:
        return len(self.passes)

    @property
    def beta(self) -> float:
        return self.m / self.n if self.n else 0.0

    @property
    def work(self) -> int:
        """Total number of words visited over all passes."""
        return sum(p.n for p in self.passes)

    @property
    def distinct(self) -> int:
        """Number of distinct values in the input."""
        return sum(p.n_d for p in self.passes) + self.remainder


def _counter(writes: Optional[Any]) -> Any:
    return ffi.NULL if writes is None else writes


def hash_index(value: int, delta: int, n: int) -> Optional[int]:
    """Map a value to its position in the imaginary subspace.

    Returns:
        value - delta if it is smaller than n, otherwise None (out of interval).
    """
    j = value - delta
    return j if j < n else None


def inverse_hash(position: int, delta: int) -> int:
    return position + delta


def _range(words: WordArray) -> Tuple[int, int]:
    lo = ffi.new("uint64_t *")
    hi = ffi.new("uint64_t *")
    if lib.assoc_find_range(words.data, len(words), lo, hi) != 0:
        raise ValueError("cannot take the range of an empty list")
    return int(lo[0]), int(hi[0])


def find_min(words: WordArray) -> int:
    return _range(words)[0]


def practice(words: WordArray, delta: int, *, writes: Optional[Any] = None) -> PassStats:
    """Practice all the integers of [delta, delta + n - 1] into the list.

    Args:
        words: An untagged list whose minimum is `delta`.
        delta: The minimum of `words`.
        writes: An optional FFI `uint64_t *` that accumulates word writes.

    Returns:
        The pass counters. Afterwards position j is a node iff delta + j occurs in
        the list, and its record is the number of further occurrences.
    """
    stats = ffi.new("assoc_pass_stats *")
    lib.assoc_practice(words.data, len(words), delta, stats, _counter(writes))
    return PassStats.from_c(stats)


def store_records(words: WordArray, n_d: int, *, writes: Optional[Any] = None) -> None:
    """Move the records of the `n_d` nodes, in node order, to the front of the list."""
    lib.assoc_store_records(words.data, len(words), n_d, _counter(writes))


def partition_idle(
    words: WordArray, stats: PassStats, *, writes: Optional[Any] = None
) -> None:
    """Cluster the idle integers right after the stored records."""
    lib.assoc_partition_idle(
        words.data, len(words), stats.n_d, stats.n_c, stats.delta, _counter(writes)
    )


def retrieve(words: WordArray, stats: PassStats, *, writes: Optional[Any] = None) -> None:
    """Expand the practiced integers, sorted, over the first n_d + n_c words.

    Clears every tag bit in the list.

    Raises:
        ValueError: If `stats` does not describe the list, i.e. n_d + n_c exceeds its
            length or the stored records ask for more than n_d + n_c words. The list
            may be partly overwritten in the second case.
    """
    if stats.n_d + stats.n_c > len(words):
        raise ValueError(
            f"{stats.n_d} nodes and {stats.n_c} idle integers do not fit in "
            f"{len(words)} words"
        )
    status = lib.assoc_retrieve(
        words.data, len(words), stats.n_d, stats.n_c, stats.delta, _counter(writes)
    )
    if status != 0:
        raise ValueError("records expand past the emitted prefix")


def sort_pass(words: WordArray, delta: int, *, writes: Optional[Any] = None) -> PassStats:
    """Run practice, store, partition and retrieve over the list."""
    stats = ffi.new("assoc_pass_stats *")
    lib.assoc_sort_pass(words.data, len(words), delta, stats, _counter(writes))
    return PassStats.from_c(stats)


def _checked_pass(words: WordArray, delta: int, writes: Optional[Any]) -> PassStats:
    stats = practice(words, delta, writes=writes)
    if stats.n_d + stats.n_c + stats.n_d_prime != stats.n:
        raise InvariantViolation(f"practice lost integers: {stats}")
    if stats.n and not stats.n_d:
        raise InvariantViolation(f"practice created no node: {stats}")
    if stats.n_d_prime and stats.delta_prime < stats.delta + stats.n:
        raise InvariantViolation(f"delta' lies inside the interval: {stats}")
    if words.count_tagged() != stats.n_d:
        raise InvariantViolation(
            f"expected {stats.n_d} nodes, found {words.count_tagged()}"
        )

    store_records(words, stats.n_d, writes=writes)
    if words.count_tagged() != stats.n_d:
        raise InvariantViolation("storing moved a tag bit")
    records = lib.assoc_payload_sum(words.data, stats.n_d)
    if records != stats.n_c:
        raise InvariantViolation(f"records sum to {records}, expected {stats.n_c}")

    partition_idle(words, stats, writes=writes)
    try:
        retrieve(words, stats, writes=writes)
    except ValueError as e:
        raise InvariantViolation(f"retrieval failed: {e}") from None
    if words.count_tagged():
        raise InvariantViolation("tags left after retrieval")
    return stats


def assoc_sort(
    words: WordArray, *, instrument: bool = False, checked: bool = False
) -> SortReport:
    """Sort a list of integers in place.

    Args:
        words: The list to sort. Every value must be at most 2^(w - 1) - 1.
        instrument: Count word writes into `SortReport.total_writes`.
        checked: Run the phases one by one and verify the invariants between them.

    Returns:
        A report with the statistics of every pass.

    Raises:
        ValueError: If the list is too long or a value has its tag bit set.
        InvariantViolation: If `checked` is set and a pass misbehaves.
    """
    n = len(words)
    if n == 0:
        return SortReport()
    if n > MAX_LENGTH:
        raise ValueError(f"cannot sort more than {MAX_LENGTH} integers")
    if words.count_tagged():
        raise ValueError(
            f"values must not exceed {MAX_PAYLOAD}; use sort_full_universe instead"
        )
    lo, hi = _range(words)
    report = SortReport(n=n, m=hi - lo + 1)
    writes = ffi.new("uint64_t *") if instrument or checked else None

    start, length, delta = 0, n, lo
    while length > 1:
        span = words[start : start + length]
        if checked:
            stats = _checked_pass(span, delta, writes)
        else:
            stats = sort_pass(span, delta, writes=writes)
        stats = dataclasses.replace(stats, start=start)
        logger.debug("pass %d: %s", report.k, stats)
        report.passes.append(stats)
        start += stats.emitted
        length = stats.n_d_prime
        delta = stats.delta_prime
    report.remainder = length
    if writes is not None:
        report.total_writes = writes[0]
    return report


def sort_full_universe(
    words: WordArray, *, instrument: bool = False, checked: bool = False
) -> SortReport:
    """Sort a list of arbitrary w-bit integers in place.

    The list is partitioned around 2^(w - 1); the upper part is shifted down by
    2^(w - 1), both parts are sorted associatively, and the shift is undone. The
    passes of the upper part are reported with their offsets in the whole list and
    with deltas in shifted coordinates.
    """
    n = len(words)
    if n == 0:
        return SortReport()
    if n > MAX_LENGTH:
        raise ValueError(f"cannot sort more than {MAX_LENGTH} integers")
    lo, hi = _range(words)

    low = lib.assoc_partition_universe(words.data, n)
    upper = words[low:]
    lib.assoc_toggle_tags(upper.data, len(upper))
    first = assoc_sort(words[:low], instrument=instrument, checked=checked)
    second = assoc_sort(upper, instrument=instrument, checked=checked)
    lib.assoc_toggle_tags(upper.data, len(upper))

    return SortReport(
        passes=first.passes
        + [dataclasses.replace(p, start=p.start + low) for p in second.passes],
        n=n,
        m=hi - lo + 1,
        total_writes=first.total_writes + second.total_writes,
        remainder=first.remainder + second.remainder,
    )
