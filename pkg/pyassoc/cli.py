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

"""Command line interface.

Subcommands:
    sort    Sort a text or binary word file.
    verify  Differentially check the associative sort on random workloads.
    bench   Time algorithms over a workload grid and write CSV.
    trace   Print the per-pass statistics of sorting one workload.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or I/O
errors.
"""
import argparse
import contextlib
import logging
import os
import sys
from typing import IO, Iterator, List, Optional

from . import assoc
from .bench import (
    ALGORITHMS,
    DEFAULT_RUNS,
    VerificationError,
    bench_grid,
    format_trace,
    preset_grid,
    run_verify,
)
from .datagen import WorkloadSpec, generate
from .serialize import (
    Format,
    read_binary,
    read_text,
    write_binary,
    write_records,
    write_text,
)
from .words import MAX_PAYLOAD, TAG, WORD_BITS, WORD_MASK, WordArray

logger = logging.getLogger(__name__)

PROG = "assoc-sort"
SEED_ENV = "ASSOC_SORT_SEED"
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def default_seed() -> int:
    value = os.environ.get(SEED_ENV)
    if value is None:
        return 0
    try:
        seed = int(value, 0)
    except ValueError:
        raise ValueError(f"{SEED_ENV} is not an integer: {value!r}") from None
    if not 0 <= seed <= WORD_MASK:
        raise ValueError(f"{SEED_ENV} must be in [0, {WORD_MASK}]")
    return seed


@contextlib.contextmanager
def _open(path: str, mode: str) -> Iterator[IO]:
    if path == "-":
        stream = sys.stdin if "r" in mode else sys.stdout
        yield stream.buffer if "b" in mode else stream
    else:
        with open(path, mode, **({} if "b" in mode else {"newline": ""})) as f:
            yield f


def cmd_sort(args: argparse.Namespace) -> int:
    fmt = Format(args.format)
    if args.signed and fmt is not Format.TEXT:
        raise ValueError("--signed is only supported for text files")
    full_universe = args.full_universe or args.signed

    if fmt is Format.TEXT:
        if args.signed:
            min_value, max_value = -TAG, TAG - 1
        else:
            min_value, max_value = 0, WORD_MASK if full_universe else MAX_PAYLOAD
        with _open(args.input, "r") as f:
            try:
                values = read_text(f, min_value=min_value, max_value=max_value)
            except ValueError as e:
                if not full_universe and "exceeds" in str(e):
                    raise ValueError(
                        f"{e}; pass --full-universe to sort {WORD_BITS}-bit values"
                    ) from None
                raise
        if args.signed:
            values = [value + TAG for value in values]
        words = WordArray(values)
    else:
        with _open(args.input, "rb") as f:
            words = read_binary(f.read(), args.word_bytes)
        if not full_universe and words.count_tagged():
            raise ValueError(
                f"a value exceeds the maximum of {MAX_PAYLOAD}; "
                f"pass --full-universe to sort {WORD_BITS}-bit values"
            )

    if full_universe:
        report = assoc.sort_full_universe(words)
    else:
        report = assoc.assoc_sort(words)
    logger.info("sorted %d integers in %d passes", report.n, report.k)

    if fmt is Format.TEXT:
        values = words.tolist()
        if args.signed:
            values = [value - TAG for value in values]
        with _open(args.output, "w") as f:
            write_text(f, values)
    else:
        with _open(args.output, "wb") as f:
            write_binary(f, words, args.word_bytes)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    seed = default_seed() if args.seed is None else args.seed
    result = run_verify(args.trials, args.max_n, seed, workers=args.workers)
    for spec, reason in result.failures:
        print(f"FAIL {spec.token}: {reason}")
    if result.minimal is not None:
        spec, reason = result.minimal
        print(f"minimal failing workload: {spec.token}: {reason}")
    print(f"{result.checks} checks, {len(result.failures)} failures")
    return EXIT_OK if result.ok else EXIT_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    seed = default_seed() if args.seed is None else args.seed
    value_bits = args.value_bits
    if args.grid is not None:
        algorithms, specs, preset_bits = preset_grid(args.grid, seed, args.n)
        if value_bits is None:
            value_bits = preset_bits
    else:
        algorithms, specs = list(ALGORITHMS), []
    if args.algorithms is not None:
        names = args.algorithms.split(",")
        algorithms = [name.strip() for name in names if name.strip()]
    for name in algorithms:
        if name not in ALGORITHMS:
            choices = ", ".join(ALGORITHMS)
            raise ValueError(f"unknown algorithm {name!r}; choose from {choices}")
    specs += [WorkloadSpec.from_token(token) for token in args.workload]
    if not specs:
        raise ValueError("no workloads given; use --workload or --grid")
    for spec in specs:
        if spec.n == 0:
            raise ValueError(f"cannot benchmark the empty workload {spec.token}")

    # Every cell must verify before the CSV is created.
    records = list(bench_grid(algorithms, specs, args.runs, value_bits))
    with _open(args.out, "w") as f:
        write_records(f, records)
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    spec = WorkloadSpec.from_token(args.workload)
    words = generate(spec)
    report = assoc.assoc_sort(words, instrument=True)
    sys.stdout.write(format_trace(spec, report))
    return EXIT_OK


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return number


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return number


def _seed(value: str) -> int:
    seed = int(value, 0)
    if not 0 <= seed <= WORD_MASK:
        raise argparse.ArgumentTypeError(f"seed must be in [0, {WORD_MASK}]")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG, description="In-place associative integer sorting."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sort = subparsers.add_parser("sort", help="sort a word file")
    sort.add_argument("input", help="input file, or - for stdin")
    sort.add_argument("output", help="output file, or - for stdout")
    sort.add_argument(
        "--format", choices=[f.value for f in Format], default=Format.TEXT.value
    )
    sort.add_argument(
        "--word-bytes", type=int, choices=[1, 2, 4, 8], default=WORD_BITS // 8,
        help="width of binary words",
    )
    sort.add_argument(
        "--full-universe", action="store_true",
        help=f"accept values up to 2^{WORD_BITS} - 1",
    )
    sort.add_argument(
        "--signed", action="store_true", help="read signed decimal integers"
    )
    sort.set_defaults(func=cmd_sort)

    verify = subparsers.add_parser("verify", help="check the sort against the oracle")
    verify.add_argument("--trials", type=_non_negative, default=1000)
    verify.add_argument("--max-n", type=_positive, default=10 ** 4)
    verify.add_argument("--seed", type=_seed, help=f"defaults to ${SEED_ENV} or 0")
    verify.add_argument("--workers", type=_positive, default=1)
    verify.set_defaults(func=cmd_verify)

    bench = subparsers.add_parser("bench", help="time algorithms and write CSV")
    bench.add_argument(
        "--grid", choices=["uniform32", "exponential"], help="a preset grid"
    )
    bench.add_argument(
        "--workload", action="append", default=[],
        help="workload token kind:n:m:seed[:rate]; may be repeated",
    )
    bench.add_argument(
        "--algorithms", help=f"comma-separated subset of {','.join(ALGORITHMS)}"
    )
    bench.add_argument("--n", type=_positive, help="list length of a preset grid")
    bench.add_argument(
        "--value-bits", type=_positive, help="mask values to this many bits"
    )
    bench.add_argument("--runs", type=_positive, default=DEFAULT_RUNS)
    bench.add_argument("--seed", type=_seed, help=f"defaults to ${SEED_ENV} or 0")
    bench.add_argument("--out", default="-", help="CSV output file, or - for stdout")
    bench.set_defaults(func=cmd_bench)

    trace = subparsers.add_parser("trace", help="print the passes of one sort")
    trace.add_argument("workload", help="workload token kind:n:m:seed[:rate]")
    trace.set_defaults(func=cmd_trace)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return int(args.func(args))
    except VerificationError as e:
        print(f"{PROG}: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (OSError, ValueError) as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
