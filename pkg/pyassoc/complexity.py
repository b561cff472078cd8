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

"""Pass-count and work predictions for the associative sort.

With n integers spread over a range of m = beta * n values, each pass sorts the
integers within n of the current minimum and defers the rest.
"""
import math


def expected_passes(n: int, beta: float) -> float:
    """Predicted number of passes for uniformly distributed integers.

    A pass over uniform integers sorts a fraction 1 / beta of them and leaves the rest
    with the same ratio, so the driver stops after k passes where
    1 / n = (beta - 1)^(k - 1) / beta^k. For beta = 2 this is log2(n).
    """
    if n <= 1:
        return 0.0
    if beta <= 1:
        return 1.0
    return (math.log(n) - math.log(beta - 1)) / (math.log(beta) - math.log(beta - 1))


def stated_worst_case_passes(n: int, m: int) -> float:
    """(m - 1) / (n - 1) + 1, assuming every pass runs over all n integers."""
    if n <= 1:
        return 0.0
    return (m - 1) / (n - 1) + 1


def pass_bound(n: int, m: int) -> int:
    """The most passes any list of n integers with range m can take.

    Every pass runs over at least two integers and sorts at least one, so the t-th of
    k passes runs over at least k - t + 2 integers. The next minimum lies at least a
    pass length above the current one, hence (k - 1)(k + 4) / 2 <= m - 1. A range of
    at most n is always sorted in one pass.
    """
    if n <= 1:
        return 0
    if m <= n:
        return 1
    # Largest root of k^2 + 3k - 4 - 2(m - 1) = 0, then fix up rounding.
    k = int((-3 + math.isqrt(9 + 4 * (4 + 2 * (m - 1)))) // 2)
    while (k - 1) * (k + 4) > 2 * (m - 1):
        k -= 1
    while k * (k + 5) <= 2 * (m - 1):
        k += 1
    return max(1, min(n - 1, k))


def work_bound(n: int, m: int) -> int:
    """Upper bound on the total length of all pass lists, (m - 1) + n."""
    if n <= 1:
        return 0
    return (m - 1) + n
