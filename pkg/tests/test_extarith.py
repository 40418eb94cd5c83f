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
"""Exact arithmetic on [0, inf]."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pylawvere.concepts.extarith import (
    INF,
    ZERO,
    ExtVal,
    add,
    compare,
    dist_l,
    dist_r,
    ext_max,
    ext_min,
    parse_extval,
    truncated_minus,
)

finite = st.fractions(min_value=0, max_value=1000, max_denominator=60).map(ExtVal)
extvals = st.one_of(finite, st.just(INF))


@pytest.mark.parametrize(
    "text,expected",
    [
        pytest.param("inf", INF, id="infinity"),
        pytest.param("0", ZERO, id="zero"),
        pytest.param("3/2", ExtVal(Fraction(3, 2)), id="fraction"),
        pytest.param("4/2", ExtVal(2), id="lowest-terms"),
        pytest.param(" 7 ", ExtVal(7), id="whitespace"),
    ],
)
def test_parse_extval(text, expected):
    assert parse_extval(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("-1", id="negative"),
        pytest.param("1/0", id="zero-denominator"),
        pytest.param("0.5", id="decimal"),
        pytest.param("1/2/3", id="two-slashes"),
        pytest.param("infinity", id="long-name"),
        pytest.param("", id="empty"),
    ],
)
def test_parse_extval_rejects(text):
    with pytest.raises(ValueError):
        parse_extval(text)


def test_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        ExtVal(0.5)
    with pytest.raises(TypeError):
        ExtVal(True)


@pytest.mark.parametrize(
    "a,b,expected",
    [
        pytest.param(3, 1, 2, id="positive"),
        pytest.param(1, 3, 0, id="truncated"),
        pytest.param("inf", 5, "inf", id="inf-minus-finite"),
        pytest.param(5, "inf", 0, id="finite-minus-inf"),
        pytest.param("inf", "inf", 0, id="inf-minus-inf"),
    ],
)
def test_truncated_minus(a, b, expected):
    assert ExtVal(a) - ExtVal(b) == ExtVal(expected)
    assert truncated_minus(b, a) == ExtVal(expected)
    assert dist_r(a, b) == ExtVal(expected)
    assert dist_l(b, a) == ExtVal(expected)


def test_addition_absorbs_infinity():
    assert add(2, "inf") == INF
    assert add("1/2", "1/3") == ExtVal(Fraction(5, 6))


def test_empty_min_and_max():
    assert ext_min([]) == INF
    assert ext_max([]) == ZERO
    assert ext_min(["3", "1/2", "inf"]) == ExtVal(Fraction(1, 2))
    assert ext_max(["3", "1/2", "inf"]) == INF


@pytest.mark.parametrize(
    "value,text",
    [
        pytest.param(INF, "inf", id="inf"),
        pytest.param(ExtVal(Fraction(6, 4)), "3/2", id="reduced"),
        pytest.param(ExtVal(5), "5", id="integer"),
    ],
)
def test_str_is_parseable(value, text):
    assert str(value) == text
    assert parse_extval(str(value)) == value


def test_order():
    assert compare(1, "inf") == -1
    assert compare("inf", "inf") == 0
    assert ExtVal(2) > ExtVal(1)
    assert ZERO <= INF


@given(extvals, extvals, extvals)
def test_residuation(a, b, c):
    assert (a - b <= c) == (a <= b + c)


@given(extvals, extvals, extvals)
def test_addition_is_monoid(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + ZERO == a


@given(extvals, extvals, extvals)
def test_halfline_metrics_triangle(a, b, c):
    assert dist_l(a, c) <= dist_l(a, b) + dist_l(b, c)
    assert dist_r(a, c) <= dist_r(a, b) + dist_r(b, c)
    assert dist_l(a, a) == ZERO


@given(extvals, extvals)
def test_lattice(a, b):
    assert ext_min([a, b]) <= ext_max([a, b])
    assert ext_min([a, b]) in (a, b)
