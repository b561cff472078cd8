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

import math

from pyassoc.complexity import (
    expected_passes,
    pass_bound,
    stated_worst_case_passes,
    work_bound,
)


def test_expected_passes():
    for n in (2 ** 10, 2 ** 14, 2 ** 20):
        assert math.isclose(expected_passes(n, 2.0), math.log2(n))
    assert expected_passes(1000, 1.0) == 1.0
    assert expected_passes(1000, 0.01) == 1.0
    assert expected_passes(1, 10.0) == 0.0
    # More range per integer means more passes
    assert expected_passes(10 ** 5, 10.0) > expected_passes(10 ** 5, 2.0)


def test_stated_worst_case_passes():
    assert stated_worst_case_passes(4, 10) == 4.0
    assert stated_worst_case_passes(1, 10) == 0.0


def test_pass_bound():
    assert pass_bound(0, 1) == 0
    assert pass_bound(1, 1) == 0
    assert pass_bound(4, 10) == 3
    assert pass_bound(4, 7) == 2
    assert pass_bound(2, 1) == 1
    assert pass_bound(10 ** 6, 10 ** 6) == 1
    # The chain a_1 = 0, a_(j+1) = a_j + (n - j + 1) reaches the bound
    for n in range(2, 200):
        m = n * (n + 1) // 2
        assert pass_bound(n, m) == n - 1
    n = 40
    for m in range(n + 1, 2000):
        k = pass_bound(n, m)
        assert (k - 1) * (k + 4) <= 2 * (m - 1)
        assert k == n - 1 or 2 * (m - 1) < k * (k + 5)


def test_work_bound():
    assert work_bound(1, 5) == 0
    assert work_bound(4, 10) == 13
    n, beta = 1000, 3
    assert work_bound(n, beta * n) <= (beta + 2) * n
