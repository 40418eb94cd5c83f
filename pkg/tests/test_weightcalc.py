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
"""Weights, coweights and their calculus."""

import pytest

from pylawvere.concepts.errors import NotNonexpansive, WeightLawViolation
from pylawvere.concepts.extarith import INF, ZERO, ExtVal
from pylawvere.concepts.space import SpaceMap, validate
from pylawvere.methods.weightcalc import (
    WeightVec,
    check_coweight,
    check_weight,
    colimits,
    corepresentable,
    coweight_coreflection,
    enumerate_flat_weights,
    flat_by_distributivity,
    is_cauchy,
    is_flat,
    left_adjoint_candidate,
    pushforward,
    representable,
    shift_down,
    shift_up,
    sup_metric,
    tensor,
    vec_max,
    vec_min,
    weight_coreflection,
)


def values(*items):
    return tuple(ExtVal(item) for item in items)


def test_check_weight(sym2, zc2):
    assert check_weight(sym2, [0, 1]).values == values(0, 1)
    assert check_weight(zc2, [0, 0]).values == values(0, 0)
    with pytest.raises(WeightLawViolation) as err:
        check_weight(sym2, [0, 5])
    assert err.value.pairs == [("b", "a")]


def test_check_coweight(sym2):
    assert check_coweight(sym2, [0, 1]).values == values(0, 1)
    with pytest.raises(WeightLawViolation):
        check_coweight(sym2, [5, 0])


@pytest.mark.parametrize(
    "fixture,point,expected",
    [
        pytest.param("sym2", "a", (0, 1), id="SYM2-a"),
        pytest.param("sier", "b", (0, 0), id="SIER-b"),
        pytest.param("sier", "a", (0, "inf"), id="SIER-a"),
        pytest.param("zc2", "a", (0, 0), id="ZC2-a"),
    ],
)
def test_representable(fixture, point, expected, request):
    assert representable(request.getfixturevalue(fixture), point).values == values(*expected)


def test_corepresentable(sier):
    assert corepresentable(sier, "a").values == values(0, 0)
    assert corepresentable(sier, "b").values == values("inf", 0)


def test_yoneda_identity(sym2, sier):
    for space in (sym2, sier):
        for x in space.points:
            for y in space.points:
                phi, psi = representable(space, x), representable(space, y)
                assert sup_metric(phi, psi) == space.d(x, y)


def test_tensor(sym2):
    phi = WeightVec(sym2, values(0, 1))
    psi = corepresentable(sym2, "b")
    assert tensor(phi, psi) == ExtVal(1)


def test_left_adjoint_candidate(sym2, zc2):
    assert left_adjoint_candidate(representable(sym2, "a")).values == values(0, 1)
    assert left_adjoint_candidate(WeightVec(zc2, values(0, 0))).values == values(0, 0)


@pytest.mark.parametrize(
    "fixture,raw,cauchy,flat",
    [
        pytest.param("sym2", (0, 1), True, True, id="SYM2-representable"),
        pytest.param("sym2", (0, 0), False, False, id="SYM2-zero"),
        pytest.param("zc2", (0, 0), True, True, id="ZC2-zero"),
        pytest.param("sier", (0, "inf"), True, True, id="SIER-representable"),
        pytest.param("sier", ("inf", "inf"), False, False, id="SIER-infinite"),
        pytest.param("sym2", (1, 1), False, False, id="SYM2-no-zero"),
    ],
)
def test_cauchy_and_flat(fixture, raw, cauchy, flat, request):
    phi = WeightVec(request.getfixturevalue(fixture), values(*raw))
    assert is_cauchy(phi).cauchy is cauchy
    assert is_flat(phi) is flat
    assert flat_by_distributivity(phi) is flat


def test_cauchy_report_names_violation(sym2):
    report = is_cauchy(WeightVec(sym2, values(0, 0)))
    assert report.violation is not None


def test_coreflections(sym2):
    assert weight_coreflection(sym2, [0, 5]).values == values(0, 1)
    assert coweight_coreflection(sym2, [5, 0]).values == values(1, 0)
    # already a weight, so unchanged
    assert weight_coreflection(sym2, [1, 2]).values == values(1, 2)


def test_pushforward_of_representable(zc2, sier):
    collapse = SpaceMap(zc2, sier, (0, 0))
    image = pushforward(collapse, representable(zc2, "b"))
    assert image == representable(sier, "a")


def test_pushforward_needs_nonexpansive(sier, sym2):
    with pytest.raises(NotNonexpansive):
        pushforward(SpaceMap(sier, sym2, (0, 1)), representable(sier, "a"))


def test_pointwise_operations(sym2):
    phi, psi = representable(sym2, "a"), representable(sym2, "b")
    assert vec_min((phi, psi)).values == values(0, 0)
    assert vec_max((phi, psi)).values == values(1, 1)
    assert shift_up(phi, 2).values == values(2, 3)
    assert shift_down(phi, 2).values == values(0, 0)
    assert shift_up(phi, "inf").values == (INF, INF)


def test_enumerate_flat_weights(zc2, sym2):
    flats = enumerate_flat_weights(zc2)
    assert [phi.values for phi, _ in flats] == [values(0, 0)]
    assert flats[0][1] == (0, 1)
    assert [phi.values for phi, _ in enumerate_flat_weights(sym2)] == [values(0, 1), values(1, 0)]


def test_colimits(zc2, sym2):
    assert colimits(WeightVec(zc2, (ZERO, ZERO))) == ["a", "b"]
    assert colimits(representable(sym2, "a")) == ["a"]
    assert colimits(WeightVec(sym2, values(0, 0))) == []


def test_flat_on_chain():
    chain = validate(("x", "y", "z"), [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    flat = [phi for phi, _ in enumerate_flat_weights(chain)]
    assert len(flat) == 3
    assert all(is_flat(phi) and is_cauchy(phi).cauchy for phi in flat)
