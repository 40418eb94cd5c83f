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
"""Finite preorders, topologies and the change-of-base functors."""

import numpy as np
import pytest

from pylawvere.concepts.errors import InvalidStructureError
from pylawvere.concepts.extarith import INF, ZERO
from pylawvere.concepts.ordtop import (
    alexandroff_top,
    iota_app,
    iota_met,
    is_directed_complete,
    is_sober_top,
    omega_ord,
    omega_top,
    preorder_from_pairs,
    specialization_order,
    square_checks,
    topology_from_singletons,
    validate_preorder,
    validate_topology,
)
from pylawvere.conformance.generators import generate_approach, generate_preorder
from pylawvere.methods.sobriety import is_sober

AB = ("a", "b")


@pytest.fixture
def chain():
    return preorder_from_pairs(AB, [("a", "b")], "CHAIN")


@pytest.fixture
def sierpinski():
    return topology_from_singletons(AB, [0b01, 0b11], "SIERPINSKI")


def test_validate_preorder_rejects():
    with pytest.raises(InvalidStructureError) as err:
        validate_preorder(AB, np.array([[True, True], [False, False]]))
    assert err.value.violations[0].axiom == "P1"
    three = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool)
    with pytest.raises(InvalidStructureError) as err:
        validate_preorder(("a", "b", "c"), three)
    assert [v.axiom for v in err.value.violations] == ["P2"]


def test_validate_topology_rejects():
    # cl{} = {a}
    with pytest.raises(InvalidStructureError):
        validate_topology(AB, [0b01, 0b01, 0b10, 0b11])
    # cl{a} does not contain a
    with pytest.raises(InvalidStructureError):
        validate_topology(AB, [0, 0b10, 0b10, 0b10])


def test_alexandroff_topology_of_chain(chain):
    t = alexandroff_top(chain)
    assert t.closures == (0b01, 0b11)
    assert specialization_order(t) == chain


@pytest.mark.parametrize(
    "closures,sober",
    [
        pytest.param([0b01, 0b11], True, id="sierpinski"),
        pytest.param([0b11, 0b11], False, id="indiscrete"),
        pytest.param([0b01, 0b10], True, id="discrete"),
    ],
)
def test_is_sober_top(closures, sober):
    t = topology_from_singletons(AB, closures)
    assert is_sober_top(t).sober is sober
    assert is_sober(omega_top(t)).sober is sober


def test_indiscrete_witness():
    report = is_sober_top(topology_from_singletons(AB, [0b11, 0b11]))
    assert report.witness == "irreducible closed set {a b} has 2 generic points"


def test_omega_of_chain_is_sierpinski(chain):
    space = omega_ord(chain)
    assert space.d("a", "b") == ZERO
    assert space.d("b", "a") == INF
    assert iota_met(space) == chain


def test_omega_of_discrete_order():
    space = omega_ord(preorder_from_pairs(AB, []))
    assert space.d("a", "b") == INF and space.d("b", "a") == INF


def test_iota_of_omega_topology(sierpinski):
    assert iota_app(omega_top(sierpinski)) == sierpinski


def test_squares_on_exemplars(chain, a_sym2, a_zc2):
    for instance in (chain, a_sym2, a_zc2):
        assert square_checks(instance).ok


def test_squares_on_generated():
    rng = np.random.default_rng(7)
    pool = [ZERO, INF]
    for _ in range(25):
        assert square_checks(generate_preorder(rng, 4)).ok
        assert square_checks(generate_approach(rng, 3, pool)).ok


def test_squares_reject_other_types(sym2):
    with pytest.raises(TypeError):
        square_checks(sym2)


def test_directed_complete(chain):
    assert is_directed_complete(chain)
    indiscrete = preorder_from_pairs(AB, [("a", "b"), ("b", "a")])
    assert is_directed_complete(indiscrete)
