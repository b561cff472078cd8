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

from typing import Iterable, Union

from ._assoc import ffi


WordsLike = Union[ffi.CData, Iterable[int]]


def as_array(data: WordsLike) -> ffi.CData:
    """Convert an iterable of integers into an FFI word array.

    Args:
        data: An object that can convert to a list of unsigned 64-bit integers.
            If an FFI array is passed, it will be returned as is.

    Returns:
        An FFI `uint64_t[]` array with the given values.

    Raises:
        OverflowError: If a value does not fit in an unsigned 64-bit word.
    """
    if isinstance(data, ffi.CData):
        return data
    if not isinstance(data, (list, tuple)):
        data = list(data)
    return ffi.new("uint64_t[]", data)
