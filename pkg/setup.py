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

import setuptools


with open("README.md", "r") as fh:
    long_description = fh.read()


setuptools.setup(
    name="pyassoc",
    version="0.1.0",
    author="Bart van Merriënboer",
    author_email="bart.vanmerrienboer@gmail.com",
    description="In-place associative integer sorting",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: C",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering",
    ],
    python_requires=">=3.8",
    cffi_modules=["bindings/build.py:ffi"],
    ext_package="pyassoc",
    setup_requires=["cffi"],
    zip_safe=False,
    install_requires=["cffi"],
    extras_require={"test": ["pytest", "hypothesis"]},
    scripts=glob.glob("bin/*"),
)
