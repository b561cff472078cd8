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

"""Verification campaigns, timing benchmarks and pass traces.

Every timing is preceded by a check of the same algorithm on the same workload against
the oracle sort, so no unverified number is ever reported.

Attributes:
    ALGORITHMS: The benchmarkable sorts by name.
    DEFAULT_RUNS: Timed repetitions per benchmark cell.
    VERIFY_RATIOS: The m / n ratios drawn by verification campaigns.
    WORST_CASE_VERIFY_CAP: Longest adversarial chain a campaign generates; these
        chains make the sort quadratic by construction.
"""
from __future__ import annotations

import concurrent.futures
import dataclasses
import functools
import logging
import statistics
import time
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import assoc
from .baselines import BASELINES, BaselineKind, oracle_sort
from .complexity import (
    expected_passes,
    pass_bound,
    stated_worst_case_passes,
    work_bound,
)
from .datagen import SplitMix64, WorkloadKind, WorkloadSpec, generate
from .words import WordArray

logger = logging.getLogger(__name__)

Sorter = Callable[[WordArray], Optional[assoc.SortReport]]

ASSOC = "assoc"
ALGORITHMS: Dict[str, Sorter] = {ASSOC: assoc.assoc_sort}
ALGORITHMS.update({kind.value: sort for kind, sort in BASELINES.items()})

DEFAULT_RUNS = 9
VERIFY_RATIOS = (0.01, 0.1, 1, 2, 10, 100)
WORST_CASE_VERIFY_CAP = 2048


class VerificationError(RuntimeError):
    """An algorithm produced a wrong result on a workload."""

    def __init__(self, algorithm: str, spec: WorkloadSpec, reason: str) -> None:
        super().__init__(f"{algorithm} failed on {spec.token}: {reason}")
        self.algorithm = algorithm
        self.spec = spec
        self.reason = reason


@dataclasses.dataclass(frozen=True)
class BenchRecord:
    """One benchmark result; k_passes is 0 for anything but the associative sort."""

    algorithm: str
    workload: str
    n: int
    m: int
    runs: int
    median_ns: int
    k_passes: int
    verified: bool


@dataclasses.dataclass
class VerifyResult:
    checks: int = 0
    failures: List[Tuple[WorkloadSpec, str]] = dataclasses.field(default_factory=list)
    minimal: Optional[Tuple[WorkloadSpec, str]] = None

    @property
    def ok(self) -> bool:
        return not self.failures


def mask_words(words: WordArray, bits: int) -> WordArray:
    """Keep only the low `bits` bits of every word."""
    mask = (1 << bits) - 1
    return WordArray([word & mask for word in words.tolist()])


def check_report(report: assoc.SortReport, expected: Sequence[int]) -> Optional[str]:
    """Check the pass statistics of a sort of `expected` (already sorted).

    Returns:
        A description of the first violated property, or None.
    """
    n = len(expected)
    if report.n != n:
        return f"report covers {report.n} integers, expected {n}"
    if not n:
        return None
    m = expected[-1] - expected[0] + 1
    for t, stats in enumerate(report.passes):
        if stats.n_d + stats.n_c + stats.n_d_prime != stats.n:
            return f"pass {t} does not conserve its integers: {stats}"
        if not stats.n_d:
            return f"pass {t} created no node: {stats}"
    for before, after in zip(report.passes, report.passes[1:]):
        if after.n != before.n_d_prime or after.start != before.start + before.emitted:
            return f"pass at offset {after.start} does not continue the previous one"
    if sum(p.emitted for p in report.passes) + report.remainder != n:
        return "passes do not account for every integer"
    if report.k > pass_bound(n, m):
        return f"{report.k} passes exceed the bound of {pass_bound(n, m)}"
    if report.work > work_bound(n, m) or report.work > (report.beta + 2) * n:
        return f"total pass length {report.work} exceeds the work bound"
    if m <= n and n > 1 and report.k != 1:
        return f"range {m} <= n took {report.k} passes"
    if report.distinct != len(set(expected)):
        return f"counted {report.distinct} distinct values"
    return None


def check_trial(spec: WorkloadSpec, sorter: Optional[Sorter] = None) -> Optional[str]:
    """Sort one workload and compare it with the oracle.

    Args:
        spec: The workload.
        sorter: The sort under test; defaults to the checked associative sort.

    Returns:
        A description of the failure, or None if the trial passed.
    """
    if sorter is None:
        sorter = functools.partial(assoc.assoc_sort, checked=True)
    words = generate(spec)
    expected = oracle_sort(words.tolist())
    try:
        report = sorter(words)
    except assoc.InvariantViolation as e:
        return str(e)
    if words != expected:
        return "output differs from the oracle"
    if isinstance(report, assoc.SortReport):
        return check_report(report, expected)
    return None


def random_spec(rng: SplitMix64, max_n: int) -> WorkloadSpec:
    kind = rng.choice(list(WorkloadKind))
    n = rng.below(max_n + 1)
    if kind is WorkloadKind.WORST_CASE:
        n = min(n, WORST_CASE_VERIFY_CAP)
    ratio = rng.choice(VERIFY_RATIOS)
    return WorkloadSpec(kind, n, max(1, round(ratio * n)), rng.next())


def shrink(
    spec: WorkloadSpec, sorter: Optional[Sorter] = None
) -> Tuple[WorkloadSpec, str]:
    """Halve a failing workload for as long as it keeps failing."""
    reason = check_trial(spec, sorter)
    assert reason is not None
    while spec.n > 1:
        n = spec.n // 2
        smaller = dataclasses.replace(spec, n=n, m=max(1, spec.m * n // spec.n))
        smaller_reason = check_trial(smaller, sorter)
        if smaller_reason is None:
            break
        spec, reason = smaller, smaller_reason
    return spec, reason


def run_verify(
    trials: int,
    max_n: int,
    seed: int,
    *,
    workers: int = 1,
    sorter: Optional[Sorter] = None,
) -> VerifyResult:
    """Check random workloads of every kind against the oracle.

    Workloads are drawn up front from one SplitMix64 stream, so a campaign is
    reproducible from (trials, max_n, seed) whatever the number of workers.
    """
    rng = SplitMix64(seed)
    specs = [random_spec(rng, max_n) for _ in range(trials)]
    result = VerifyResult()
    check = functools.partial(check_trial, sorter=sorter)
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for spec, reason in zip(specs, pool.map(check, specs)):
            result.checks += 1
            if reason is not None:
                logger.info("trial %s failed: %s", spec.token, reason)
                result.failures.append((spec, reason))
    if result.failures:
        result.minimal = shrink(result.failures[0][0], sorter)
    return result


def run_algorithm(algorithm: str, words: WordArray) -> Optional[assoc.SortReport]:
    try:
        sort = ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    return sort(words)


def time_algorithm(algorithm: str, words: WordArray, runs: int) -> int:
    """Median wall time in nanoseconds of sorting fresh copies of `words`.

    One untimed warmup run precedes the `runs` timed ones.
    """
    timings = []
    for run in range(runs + 1):
        trial = words.copy()
        start = time.perf_counter_ns()
        run_algorithm(algorithm, trial)
        elapsed = time.perf_counter_ns() - start
        if run:
            timings.append(elapsed)
    return max(1, int(statistics.median(timings)))


def bench_cell(
    algorithm: str, spec: WorkloadSpec, runs: int, value_bits: Optional[int] = None
) -> BenchRecord:
    """Verify and then time one algorithm on one workload.

    Raises:
        ValueError: If the workload is empty or `runs` is not positive.
        VerificationError: If the algorithm's output differs from the oracle.
    """
    if runs < 1:
        raise ValueError("runs must be positive")
    words = generate(spec)
    if value_bits is not None:
        words = mask_words(words, value_bits)
    if not len(words):
        raise ValueError(f"cannot benchmark the empty workload {spec.token}")

    expected = oracle_sort(words.tolist())
    trial = words.copy()
    report = run_algorithm(algorithm, trial)
    if trial != expected:
        raise VerificationError(algorithm, spec, "output differs from the oracle")

    median_ns = time_algorithm(algorithm, words, runs)
    logger.debug("%s on %s: %d ns", algorithm, spec.token, median_ns)
    return BenchRecord(
        algorithm=algorithm,
        workload=spec.token,
        n=len(words),
        m=expected[-1] - expected[0] + 1,
        runs=runs,
        median_ns=median_ns,
        k_passes=report.k if isinstance(report, assoc.SortReport) else 0,
        verified=True,
    )


def bench_grid(
    algorithms: Sequence[str],
    specs: Sequence[WorkloadSpec],
    runs: int,
    value_bits: Optional[int] = None,
) -> Iterator[BenchRecord]:
    for spec in specs:
        for algorithm in algorithms:
            yield bench_cell(algorithm, spec, runs, value_bits)


def preset_grid(
    name: str, seed: int, n: Optional[int] = None
) -> Tuple[List[str], List[WorkloadSpec], Optional[int]]:
    """Named benchmark grids.

    `uniform32` compares all algorithms on uniform 32-bit integers at m / n in
    {0.01, 0.1, 1, 10}; `exponential` compares the associative, comparison and radix
    sorts on geometric workloads up to m / n = 50.

    Returns:
        The algorithms, the workloads and the value width in bits (or None).
    """
    if name == "uniform32":
        n = n or 10 ** 6
        specs = [
            WorkloadSpec(WorkloadKind.UNIFORM, n, max(1, round(ratio * n)), seed)
            for ratio in (0.01, 0.1, 1, 10)
        ]
        algorithms = [ASSOC] + [kind.value for kind in BaselineKind]
        return algorithms, specs, 32
    elif name == "exponential":
        n = n or 10 ** 6
        specs = [
            WorkloadSpec(WorkloadKind.GEOMETRIC, n, ratio * n, seed)
            for ratio in (1, 5, 10, 25, 50)
        ]
        algorithms = [
            ASSOC,
            BaselineKind.COMPARISON.value,
            BaselineKind.RADIX_LSD.value,
        ]
        return algorithms, specs, None
    else:
        raise ValueError(f"unknown grid {name!r}")


def format_trace(spec: WorkloadSpec, report: assoc.SortReport) -> str:
    """A per-pass table of a sort followed by its totals."""
    header = ("pass", "start", "n", "delta", "n_d", "n_c", "n_d'", "delta'")
    rows = [header]
    for t, p in enumerate(report.passes):
        delta_prime = "-" if p.delta_prime is None else str(p.delta_prime)
        rows.append(
            (str(t), str(p.start), str(p.n), str(p.delta), str(p.n_d), str(p.n_c),
             str(p.n_d_prime), delta_prime)
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in rows
    ]

    n, m = report.n, report.m
    lines += [
        "",
        f"workload     {spec.token}",
        f"n            {n}",
        f"m            {m}",
        f"beta         {report.beta:.6g}",
        f"passes       {report.k}",
        f"remainder    {report.remainder}",
        f"distinct     {report.distinct}",
        f"work         {report.work}",
        f"writes       {report.total_writes}",
        f"expected k   {expected_passes(n, report.beta):.3f}",
        f"stated bound {stated_worst_case_passes(n, m):.3f}",
        f"pass bound   {pass_bound(n, m)}",
        f"work bound   {work_bound(n, m)}",
    ]
    return "\n".join(lines) + "\n"
