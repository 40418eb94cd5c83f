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
"""Interpret different human-readable forms of a boolean statement to boolean."""

from typing import Any

HUMAN_BOOLEAN_STATEMENT = {
    "0": False,
    "1": True,
    "n": False,
    "y": True,
    "no": False,
    "yes": True,
    "false": False,
    "true": True,
}


def try_interpret_as_boolean(arg: Any) -> bool:
    """Interpret a flag from a structure or suite file, strictly."""
    if isinstance(arg, bool):
        return arg
    if isinstance(arg, int) and arg in (0, 1):
        return bool(arg)
    if isinstance(arg, str):
        if arg.lower() in HUMAN_BOOLEAN_STATEMENT:
            return HUMAN_BOOLEAN_STATEMENT[arg.lower()]
        raise KeyError(f"flag {arg} is neither a yes nor a no statement !")
    raise ValueError(f"flag {arg} cannot be converted to bool !")


def format_flag(value: bool) -> str:
    return "yes" if value else "no"
