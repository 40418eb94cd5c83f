#
# Copyright The pylawvere Authors.
#
# This file is part of pylawvere.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Fingerprints of structure and suite files for the verbose parser messages."""

import hashlib

DEFAULT_CHECKSUM_ALGORITHM = "sha256"
CHUNK_SIZE = 4096


def file_fingerprint(file_path: str, algorithm: str = DEFAULT_CHECKSUM_ALGORITHM) -> str:
    """Hex digest of the raw bytes of file_path, e.g. sha256:3f0a..."""
    digest = hashlib.new(algorithm)
    with open(file_path, "rb") as stream:
        for block in iter(lambda: stream.read(CHUNK_SIZE), b""):
            digest.update(block)
    return f"{algorithm}:{digest.hexdigest()}"
