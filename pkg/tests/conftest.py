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
"""Shared exemplar spaces."""

import pytest

from pylawvere.concepts.approach import alexandroff
from pylawvere.concepts.space import validate


@pytest.fixture
def sier():
    return validate(("a", "b"), [[0, 0], ["inf", 0]], "SIER")


@pytest.fixture
def zc2():
    return validate(("a", "b"), [[0, 0], [0, 0]], "ZC2")


@pytest.fixture
def sym2():
    return validate(("a", "b"), [[0, 1], [1, 0]], "SYM2")


@pytest.fixture
def point():
    return validate(("p",), [[0]], "ONE")


@pytest.fixture
def a_zc2(zc2):
    return alexandroff(zc2)


@pytest.fixture
def a_sym2(sym2):
    return alexandroff(sym2)


@pytest.fixture
def a_sier(sier):
    return alexandroff(sier)
