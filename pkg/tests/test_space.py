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
"""Finite quasi-metric spaces and maps."""

import pytest

from pylawvere.concepts.errors import (
    ConsistencyError,
    InvalidStructureError,
    ReflexivityViolation,
    TriangleViolation,
)
from pylawvere.concepts.extarith import INF, ZERO, ExtVal
from pylawvere.concepts.space import (
    SpaceMap,
    check_isometric,
    check_nonexpansive,
    classify,
    find_violations,
    identity_map,
    min_plus_closure,
    opposite,
    separated_quotient,
    symmetrization,
    unchecked_space,
    validate,
    zero_cliques,
)


@pytest.mark.parametrize(
    "matrix",
    [
        pytest.param([[0, 0], ["inf", 0]], id="sierpinski"),
        pytest.param([[0, 0], [0, 0]], id="zero-clique"),
        pytest.param([[0, 1], [1, 0]], id="symmetric"),
        pytest.param([["0", "inf"], ["inf", "0"]], id="discrete"),
    ],
)
def test_validate_accepts(matrix):
    space = validate(("a", "b"), matrix)
    assert space.size == 2
    assert space.d("a", "a") == ZERO


def test_validate_reports_reflexivity():
    with pytest.raises(InvalidStructureError) as err:
        validate(("a", "b"), [[1, 0], [0, 0]], "BAD")
    assert err.value.violations == [ReflexivityViolation("a", "1")]


def test_validate_reports_triangle():
    violations = find_violations(("a", "b", "c"), [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert TriangleViolation("a", "b", "c", "1", "1", "5") in violations
    assert TriangleViolation("c", "b", "a", "1", "1", "5") in violations
    assert len(violations) == 2


@pytest.mark.parametrize(
    "points,matrix",
    [
        pytest.param(("a", "a"), [[0, 0], [0, 0]], id="repeated-points"),
        pytest.param(("a", "b"), [[0, 0]], id="short-matrix"),
    ],
)
def test_validate_rejects_shapes(points, matrix):
    with pytest.raises(ValueError):
        validate(points, matrix)


@pytest.mark.parametrize(
    "fixture,expected",
    [
        pytest.param("sier", (False, True, False), id="SIER"),
        pytest.param("zc2", (True, False, True), id="ZC2"),
        pytest.param("sym2", (True, True, True), id="SYM2"),
    ],
)
def test_classify(fixture, expected, request):
    flags = classify(request.getfixturevalue(fixture))
    assert (flags.symmetric, flags.separated, flags.finitary) == expected


def test_opposite_and_symmetrization(sier, sym2):
    assert opposite(sier).d("a", "b") == INF
    assert opposite(sier).d("b", "a") == ZERO
    sym = symmetrization(sier)
    assert sym.d("a", "b") == INF and sym.d("b", "a") == INF
    assert symmetrization(sym2).dist == sym2.dist


def test_separated_quotient(zc2, sier):
    quotient, projection = separated_quotient(zc2)
    assert quotient.size == 1
    assert projection.assignment == (0, 0)
    quotient, projection = separated_quotient(sier)
    assert quotient.dist == sier.dist
    assert projection.assignment == (0, 1)


def test_zero_cliques_require_transitivity():
    # a ~ b and b ~ c but d(a,c) = 1 cannot pass validate; build it unchecked
    broken = unchecked_space(("a", "b", "c"), [[0, 0, 1], [0, 0, 0], [1, 0, 0]])
    with pytest.raises(ConsistencyError):
        zero_cliques(broken)


def test_maps(zc2, sier, sym2):
    assert check_nonexpansive(identity_map(sym2))
    assert check_isometric(identity_map(sym2))
    collapse = SpaceMap.from_names(zc2, sier, {"a": "a", "b": "a"})
    assert check_nonexpansive(collapse)
    assert not check_isometric(collapse)
    inclusion = SpaceMap.from_names(sier, sym2, {"a": "a", "b": "b"})
    assert not check_nonexpansive(inclusion)


def test_map_must_be_total(zc2, sier):
    with pytest.raises(ValueError):
        SpaceMap.from_names(zc2, sier, {"a": "a"})
    with pytest.raises(ValueError):
        SpaceMap(zc2, sier, (0, 2))


def test_min_plus_closure_repairs_triangles():
    closed = min_plus_closure([[0, 1, "inf"], ["inf", 0, 1], [5, "inf", 3]])
    assert closed[0][2] == ExtVal(2)
    assert closed[2][2] == ZERO
    assert closed[2][1] == ExtVal(6)
    assert not find_violations(("a", "b", "c"), closed)
