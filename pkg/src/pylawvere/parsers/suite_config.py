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
"""Parser for property-suite configurations serialized as *.suite.yaml."""

import pathlib

import flatdict as fd
import yaml

from pylawvere.configurations.suite_cfg import SUITE_DEFAULTS
from pylawvere.utils.get_file_checksum import file_fingerprint
from pylawvere.utils.interpret_boolean import try_interpret_as_boolean

SUITE_CONFIG_SUFFIXES = (".suite.yaml", ".suite.yml")


class SuiteConfigParser:
    """Read the suite: mapping of a configuration file as a flat dict."""

    def __init__(self, file_path: str = "", verbose: bool = False):
        self.file_path = ""
        if pathlib.Path(file_path).name.endswith(SUITE_CONFIG_SUFFIXES):
            self.file_path = file_path
        self.verbose = verbose
        self.flat_metadata = fd.FlatDict({}, "/")
        self.supported = False
        self.check_if_supported()

    def check_if_supported(self):
        self.supported = False
        if not self.file_path:
            return
        try:
            with open(self.file_path, "r", encoding="utf-8") as stream:
                self.flat_metadata = fd.FlatDict(yaml.safe_load(stream) or {}, "/")
            if self.verbose:
                for key, val in self.flat_metadata.items():
                    print(f"key: {key}, val: {val}")
            self.supported = True
        except (FileNotFoundError, IOError):
            print(f"{self.file_path} either FileNotFound or IOError !")

    def parse(self, template: dict) -> dict:
        """Overlay the suite/ keys of the file on the template."""
        if self.supported:
            if self.verbose:
                print(f"Parsing {self.file_path} suite configuration {file_fingerprint(self.file_path)} ...")
            for key in SUITE_DEFAULTS:
                src = f"suite/{key}"
                if src not in self.flat_metadata:
                    continue
                value = self.flat_metadata[src]
                if key == "inject_mutant":
                    value = try_interpret_as_boolean(value)
                elif key in ("value_pool", "laws"):
                    if not isinstance(value, list):
                        raise ValueError(f"{src} must be a list !")
                    value = [str(entry) for entry in value]
                template[key] = value
            for key in self.flat_metadata:
                if not key.startswith("suite/") or key[len("suite/") :] not in SUITE_DEFAULTS:
                    print(f"WARNING::{key} is not a suite configuration key, ignored !")
        return template
