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
"""Nets, Yoneda completion and Smyth completeness."""

import pytest

from pylawvere.concepts.errors import ConsistencyError, NotForwardCauchy
from pylawvere.concepts.extarith import INF, ZERO, ExtVal
from pylawvere.concepts.space import validate
from pylawvere.methods import completion
from pylawvere.methods.completion import (
    NetSpec,
    cauchy_completion,
    classify_net,
    make_net,
    net_coweight,
    net_weight,
    periodic_nets,
    smyth_classify,
    tail_limits,
    weight_net_is_forward_cauchy,
    weight_net_limit,
    yoneda_complete_check,
    yoneda_completion,
    yoneda_limits,
)
from pylawvere.methods.weightcalc import WeightVec, representable


@pytest.mark.parametrize(
    "fixture,pre,cycle,expected",
    [
        pytest.param("zc2", [], ["a", "b"], (True, True), id="ZC2-cycle"),
        pytest.param("sym2", [], ["a", "b"], (False, False), id="SYM2-cycle"),
        pytest.param("sym2", ["a", "b"], ["a"], (True, True), id="SYM2-eventually-constant"),
        pytest.param("sier", [], ["a", "b"], (False, False), id="SIER-cycle"),
    ],
)
def test_classify_net(fixture, pre, cycle, expected, request):
    net = make_net(request.getfixturevalue(fixture), pre, cycle)
    cls = classify_net(net)
    assert (cls.forward_cauchy, cls.bicauchy) == expected


def test_net_rejects_bad_indices(sym2):
    with pytest.raises(ValueError):
        NetSpec(sym2, (), ())
    with pytest.raises(ValueError):
        NetSpec(sym2, (5,), (0,))


def test_net_weight(zc2, sym2):
    assert net_weight(make_net(zc2, [], ["a", "b"])).values == (ZERO, ZERO)
    assert net_weight(make_net(sym2, ["b"], ["a"])) == representable(sym2, "a")
    with pytest.raises(NotForwardCauchy):
        net_weight(make_net(sym2, [], ["a", "b"]))


def test_tail_limits(sym2):
    net = make_net(sym2, [], ["a", "b"])
    # d(a, x_n) alternates 0, 1
    assert tail_limits(net, 0) == (ExtVal(1), ZERO)


def test_net_coweight_and_limits(zc2, sym2, sier):
    net = make_net(zc2, [], ["a", "b"])
    assert net_coweight(net).values == (ZERO, ZERO)
    assert yoneda_limits(net) == ["a", "b"]
    assert yoneda_limits(make_net(sym2, [], ["a", "b"])) == []
    assert yoneda_limits(make_net(sier, ["a"], ["b"])) == ["b"]


def test_yoneda_complete_check(zc2, sym2, sier):
    assert all(yoneda_complete_check(space) for space in (zc2, sym2, sier))


def test_yoneda_completion_of_zc2(zc2):
    result = yoneda_completion(zc2)
    assert result.completed.size == 1
    assert result.embedding == (0, 0)
    assert not result.iso_flag


def test_yoneda_completion_fixes_separated(sier, sym2):
    for space in (sier, sym2):
        result = yoneda_completion(space)
        assert result.iso_flag
        assert result.completed.dist == space.dist


def test_cauchy_completion_agrees(zc2, sier):
    for space in (zc2, sier):
        assert cauchy_completion(space).completed.dist == yoneda_completion(space).completed.dist


@pytest.mark.parametrize(
    "fixture,complete",
    [
        pytest.param("sier", True, id="SIER"),
        pytest.param("sym2", True, id="SYM2"),
        pytest.param("zc2", False, id="ZC2"),
    ],
)
def test_smyth_classify(fixture, complete, request):
    flags = smyth_classify(request.getfixturevalue(fixture))
    assert flags.complete is complete
    assert flags.completable


def test_smyth_on_three_points():
    space = validate(("a", "b", "c"), [[0, 0, 1], [0, 0, 1], ["inf", "inf", 0]])
    assert not smyth_classify(space).complete


def test_smyth_nets_count_yoneda_limits(zc2, sier):
    (clique_net,) = [net for net in periodic_nets(zc2) if net.cycle == (0, 1)]
    assert yoneda_limits(clique_net) == ["a", "b"]
    for net in periodic_nets(sier):
        if classify_net(net).forward_cauchy:
            assert len(yoneda_limits(net)) == 1


def test_smyth_nets_must_agree(zc2, monkeypatch):
    # one limit per net contradicts the zero-clique of ZC2
    monkeypatch.setattr(completion, "yoneda_limits", lambda net: [net.space.points[net.cycle[0]]])
    with pytest.raises(ConsistencyError):
        smyth_classify(zc2)


def test_periodic_nets(sym2):
    cycles = sorted(net.cycle for net in periodic_nets(sym2))
    assert cycles == [(0,), (0, 1), (1,)]
    assert len(periodic_nets(sym2, max_cycle=1)) == 2


def test_weight_nets(sym2, zc2):
    phi = WeightVec(zc2, (ZERO, ZERO))
    assert weight_net_is_forward_cauchy([phi])
    a, b = representable(sym2, "a"), representable(sym2, "b")
    assert not weight_net_is_forward_cauchy([a, b])
    assert weight_net_limit([a, b]).values == (ExtVal(1), ExtVal(1))
    assert weight_net_limit([a]).values == a.values
    assert INF not in weight_net_limit([a, b]).values
