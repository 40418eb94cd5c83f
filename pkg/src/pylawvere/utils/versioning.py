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
"""Program name and version stamped into reports."""

from importlib.metadata import PackageNotFoundError, version

PYLAWVERE_EXEC_NAME = "pylawvere"


def get_pylawvere_exec_version() -> str:
    try:
        return version(PYLAWVERE_EXEC_NAME)
    except PackageNotFoundError:
        return "UNKNOWN VERSION"


PYLAWVERE_EXEC_VERSION = get_pylawvere_exec_version()
