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

"""Tagged machine words.

A word holds either a plain integer (tag bit clear) or a node (tag bit set). The tag
is the most significant bit; the remaining low bits are the payload, which for a node
is its record: the number of idle integers practiced at that node.

Attributes:
    WORD_BITS: The word width w the C kernels were compiled for.
    TAG: The tag bit, 2^(w - 1).
    PAYLOAD_MASK: Mask selecting the low w - 1 bits of a word.
    MAX_PAYLOAD: The largest integer a payload can hold, 2^(w - 1) - 1.
    MAX_LENGTH: The longest list the associative sort accepts, 2^(w - 1).

"""
from __future__ import annotations

from typing import Any, Iterator, List, Tuple, Union, cast

from ._assoc import ffi, lib
from .utils import as_array, WordsLike

WORD_BITS = lib.ASSOC_WORD_BITS
TAG = 1 << (WORD_BITS - 1)
PAYLOAD_MASK = TAG - 1
MAX_PAYLOAD = PAYLOAD_MASK
MAX_LENGTH = TAG
WORD_MASK = (1 << WORD_BITS) - 1
_WORD_BYTES = WORD_BITS // 8


def is_tagged(word: int) -> bool:
    return bool(word & TAG)


def make_node(count: int) -> int:
    """Create a node whose record is `count`."""
    if not 0 <= count <= MAX_PAYLOAD:
        raise ValueError(f"record must be in [0, {MAX_PAYLOAD}]")
    return TAG | count


def payload(word: int) -> int:
    return word & PAYLOAD_MASK


def set_payload(word: int, value: int) -> int:
    """Replace the payload of a word, keeping its tag bit."""
    if not 0 <= value <= MAX_PAYLOAD:
        raise ValueError(f"payload must be in [0, {MAX_PAYLOAD}]")
    return (word & TAG) | value


def swap_payloads(a: int, b: int) -> Tuple[int, int]:
    """Exchange the payloads of two words; both tag bits stay where they are."""
    return (a & TAG) | (b & PAYLOAD_MASK), (b & TAG) | (a & PAYLOAD_MASK)


class WordArray:
    """A contiguous span of unsigned machine words.

    Sorting routines mutate a `WordArray` in place. Slicing with step 1 returns a view
    that shares memory with the array it was taken from, which is how the sort driver
    hands the unsorted suffix of a list to the next pass.

    Attributes:
        data: The FFI pointer to the first word of the span.
        size: The number of words in the span.
    """

    __slots__ = ["data", "size", "_owner"]

    def __init__(self, values: Union[WordsLike, int] = ()) -> None:
        """Construct a word array.

        Args:
            values: The words to store, or an integer to allocate that many zeroed
                words.
        """
        if isinstance(values, int):
            if values < 0:
                raise ValueError("size must be non-negative")
            self.data = ffi.new("uint64_t[]", values)
            self.size = values
        else:
            self.data = as_array(values)
            self.size = len(self.data)
        self._owner = None

    @classmethod
    def _view(cls, owner: WordArray, data: Any, size: int) -> WordArray:
        out = cls.__new__(cls)
        out.data = data
        out.size = size
        out._owner = owner
        return out

    def __len__(self) -> int:
        return self.size

    def _index(self, index: int) -> int:
        if index < 0:
            index += self.size
        if not 0 <= index < self.size:
            raise IndexError("word index out of range")
        return index

    def __getitem__(self, index: Union[int, slice]) -> Any:
        if isinstance(index, slice):
            start, stop, step = index.indices(self.size)
            if step != 1:
                raise ValueError("word views must be contiguous")
            owner = self if self._owner is None else self._owner
            return WordArray._view(owner, self.data + start, max(stop - start, 0))
        return cast(int, self.data[self._index(index)])

    def __setitem__(self, index: int, value: int) -> None:
        if not 0 <= value <= WORD_MASK:
            raise OverflowError(f"word must be in [0, {WORD_MASK}]")
        self.data[self._index(index)] = value

    def __iter__(self) -> Iterator[int]:
        return iter(self.tolist())

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.tolist()})"

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, WordArray):
            return self.tolist() == other.tolist()
        elif isinstance(other, (list, tuple)):
            return self.tolist() == list(other)
        else:
            return False

    __hash__ = None  # type: ignore

    def tolist(self) -> List[int]:
        return cast(List[int], ffi.unpack(self.data, self.size))

    def copy(self) -> WordArray:
        """Copy the span into freshly allocated memory."""
        out = WordArray(self.size)
        ffi.memmove(out.data, self.data, self.size * _WORD_BYTES)
        return out

    def count_tagged(self) -> int:
        return cast(int, lib.assoc_count_tagged(self.data, self.size))

    def tag_bitmap(self) -> List[bool]:
        return [is_tagged(word) for word in self.tolist()]
