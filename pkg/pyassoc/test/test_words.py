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

import pytest
from hypothesis import given, strategies as st

from pyassoc.words import (
    MAX_LENGTH,
    MAX_PAYLOAD,
    PAYLOAD_MASK,
    TAG,
    WORD_BITS,
    WordArray,
    is_tagged,
    make_node,
    payload,
    set_payload,
    swap_payloads,
)

words = st.integers(min_value=0, max_value=2 ** WORD_BITS - 1)
payloads = st.integers(min_value=0, max_value=MAX_PAYLOAD)


def test_constants():
    assert WORD_BITS == 64
    assert TAG == 2 ** 63
    assert MAX_PAYLOAD == PAYLOAD_MASK == 2 ** 63 - 1
    assert MAX_LENGTH == 2 ** 63


def test_is_tagged():
    assert not is_tagged(0)
    assert is_tagged(TAG)
    assert is_tagged(TAG + 5)
    assert not is_tagged(MAX_PAYLOAD)


def test_make_node():
    assert make_node(0) == TAG
    assert make_node(1) == TAG + 1
    assert payload(make_node(MAX_PAYLOAD)) == MAX_PAYLOAD
    # Clearing the tag reads the record back as a plain integer
    assert make_node(42) & ~TAG == 42

    with pytest.raises(ValueError):
        make_node(-1)
    with pytest.raises(ValueError):
        make_node(MAX_PAYLOAD + 1)


def test_payload():
    assert payload(TAG + 7) == 7
    assert payload(7) == 7


def test_set_payload():
    assert set_payload(TAG, 3) == TAG + 3
    assert set_payload(9, 3) == 3
    with pytest.raises(ValueError):
        set_payload(0, TAG)


def test_swap_payloads():
    assert swap_payloads(TAG + 4, 9) == (TAG + 9, 4)
    assert swap_payloads(TAG + 4, TAG + 4) == (TAG + 4, TAG + 4)


@given(word=words, value=payloads)
def test_set_payload_keeps_tag(word, value):
    out = set_payload(word, value)
    assert payload(out) == value
    assert is_tagged(out) == is_tagged(word)


@given(a=words, b=words)
def test_swap_payloads_involution(a, b):
    x, y = swap_payloads(a, b)
    assert is_tagged(x) == is_tagged(a)
    assert is_tagged(y) == is_tagged(b)
    assert swap_payloads(x, y) == (a, b)


def test_word_array():
    array = WordArray([5, 9, 5, 5])
    assert len(array) == 4
    assert array[0] == 5
    assert array[-1] == 5
    assert array == [5, 9, 5, 5]
    assert array != [5, 9, 5]
    assert array != object()

    array[1] = TAG + 2
    assert array.count_tagged() == 1
    assert array.tag_bitmap() == [False, True, False, False]

    with pytest.raises(IndexError):
        array[4]
    with pytest.raises(IndexError):
        array[-5]
    with pytest.raises(OverflowError):
        array[0] = -1
    with pytest.raises(OverflowError):
        WordArray([2 ** 64])
    with pytest.raises(ValueError):
        WordArray(-1)

    assert WordArray(3) == [0, 0, 0]
    assert WordArray() == []


def test_word_array_views():
    array = WordArray(range(10))
    view = array[4:8]
    assert view == [4, 5, 6, 7]
    view[0] = 40
    assert array[4] == 40

    nested = view[1:]
    nested[0] = 50
    assert array[5] == 50
    assert array[8:2] == []
    assert array[7:][1:] == [8, 9]

    with pytest.raises(ValueError):
        array[::2]

    copy = view.copy()
    copy[0] = 0
    assert array[4] == 40


def test_word_array_views_outlive_names():
    view = WordArray(range(1000))[990:]
    assert view == list(range(990, 1000))


def test_repr():
    array = WordArray([3, 1, 2])
    assert eval(repr(array)) == array
