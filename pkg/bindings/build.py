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

import glob
import os
import sys

from cffi import FFI

BINDINGS_DIR = os.path.abspath(os.path.dirname(__file__))
HEADERS = sorted(glob.glob(os.path.join(BINDINGS_DIR, "*.h")))
SOURCES = sorted(glob.glob(os.path.join(BINDINGS_DIR, "*.c")))


ffi = FFI()
for header in HEADERS:
    with open(header, "r") as hfile:
        ffi.cdef(hfile.read())
source = """
#include <stdint.h>
#include "assoc.h"
"""
ffi.set_source(
    "_assoc",
    source,
    sources=SOURCES,
    include_dirs=[BINDINGS_DIR],
    libraries=[] if sys.platform == "win32" else ["m"],
    extra_compile_args=[] if sys.platform == "win32" else ["-O2", "-std=c99"],
)

if __name__ == "__main__":
    ffi.compile(verbose=True)
