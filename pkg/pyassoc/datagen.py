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

"""Seeded workload generators.

Every random stream is SplitMix64 seeded with the workload's seed (the recurrence is
written out in `bindings/datagen.c`), so a workload is the same list of words on every
run and platform. A workload is described by a `WorkloadSpec`, which also has a
compact token form `kind:n:m:seed[:rate]` used on the command line and in CSV files.
"""
from __future__ import annotations

import dataclasses
import enum
import logging
from typing import Optional, Sequence, TypeVar

from ._assoc import ffi, lib
from .baselines import comparison_sort
from .words import MAX_PAYLOAD, WORD_MASK, WordArray

logger = logging.getLogger(__name__)

T = TypeVar("T")


class WorkloadKind(enum.Enum):
    UNIFORM = "uniform"
    GEOMETRIC = "geometric"
    WORST_CASE = "worst_case"
    BEST_CASE = "best_case"
    CONSTANT = "constant"
    SORTED = "sorted"
    REVERSED = "reversed"


_RANGED_KINDS = {
    WorkloadKind.UNIFORM,
    WorkloadKind.CONSTANT,
    WorkloadKind.SORTED,
    WorkloadKind.REVERSED,
}


@dataclasses.dataclass(frozen=True)
class WorkloadSpec:
    """A generated input.

    Attributes:
        kind: The distribution.
        n: Number of integers.
        m: Range width; uniform, sorted and reversed draw from [0, m - 1], constant
            repeats m - 1 and geometric uses m as its scale unless `rate` is given.
            Ignored by worst_case and best_case.
        seed: Seed of the random stream.
        rate: Rate of the exponential distribution behind geometric workloads.
    """

    kind: WorkloadKind
    n: int
    m: int = 1
    seed: int = 0
    rate: Optional[float] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.seed <= WORD_MASK:
            raise ValueError(f"seed must be in [0, {WORD_MASK}]")
        if self.m < 0 or self.m > MAX_PAYLOAD + 1:
            raise ValueError(f"m must be in [0, {MAX_PAYLOAD + 1}]")
        if self.kind in _RANGED_KINDS and self.m < 1:
            raise ValueError(f"{self.kind.value} workloads need m >= 1")
        if self.kind is WorkloadKind.GEOMETRIC:
            if self.rate is None and self.m < 1:
                raise ValueError("geometric workloads need m >= 1 or a rate")
            if self.rate is not None and not self.rate > 0:
                raise ValueError("rate must be positive")

    @property
    def token(self) -> str:
        token = f"{self.kind.value}:{self.n}:{self.m}:{self.seed}"
        if self.rate is not None:
            token += f":{self.rate!r}"
        return token

    @classmethod
    def from_token(cls, token: str) -> WorkloadSpec:
        """Parse a `kind:n:m:seed[:rate]` token; trailing fields may be omitted."""
        fields = token.strip().split(":")
        if not 2 <= len(fields) <= 5:
            raise ValueError(f"invalid workload token {token!r}")
        try:
            kind = WorkloadKind(fields[0])
        except ValueError:
            raise ValueError(f"unknown workload kind {fields[0]!r}") from None
        try:
            n = int(fields[1])
            m = int(fields[2]) if len(fields) > 2 else 1
            seed = int(fields[3]) if len(fields) > 3 else 0
            rate = float(fields[4]) if len(fields) > 4 else None
        except ValueError:
            raise ValueError(f"invalid workload token {token!r}") from None
        return cls(kind, n, m, seed, rate)

    def __str__(self) -> str:
        return self.token


class SplitMix64:
    """The SplitMix64 stream used by the generators, one value at a time."""

    __slots__ = ["state"]

    def __init__(self, seed: int) -> None:
        self.state = ffi.new("uint64_t *", seed)

    def next(self) -> int:
        return int(lib.assoc_splitmix_next(self.state))

    def below(self, bound: int) -> int:
        """A value in [0, bound - 1]."""
        return self.next() % bound

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]


def random_words(n: int, seed: int) -> WordArray:
    """n raw w-bit words, covering the whole universe."""
    words = WordArray(n)
    lib.assoc_gen_uniform(words.data, n, 0, seed)
    return words


def generate(spec: WorkloadSpec) -> WordArray:
    """Generate the list described by `spec`.

    Worst-case chains whose values would not fit in a payload are cut short; the
    length of the returned array is the actual n.
    """
    n, kind = spec.n, spec.kind
    words = WordArray(n)
    if kind in (WorkloadKind.UNIFORM, WorkloadKind.SORTED, WorkloadKind.REVERSED):
        lib.assoc_gen_uniform(words.data, n, spec.m, spec.seed)
        if kind is not WorkloadKind.UNIFORM:
            comparison_sort(words)
        if kind is WorkloadKind.REVERSED:
            lib.assoc_reverse(words.data, n)
    elif kind is WorkloadKind.BEST_CASE:
        lib.assoc_gen_uniform(words.data, n, max(n, 1), spec.seed)
    elif kind is WorkloadKind.GEOMETRIC:
        scale = 1 / spec.rate if spec.rate is not None else float(spec.m)
        lib.assoc_gen_geometric(words.data, n, scale, spec.seed)
    elif kind is WorkloadKind.CONSTANT:
        words = WordArray([spec.m - 1] * n)
    elif kind is WorkloadKind.WORST_CASE:
        count = lib.assoc_gen_chain(words.data, n)
        if count < n:
            logger.warning("worst-case chain truncated from %d to %d integers", n, count)
            words = words[:count].copy()
        lib.assoc_shuffle(words.data, len(words), spec.seed)
    return words
