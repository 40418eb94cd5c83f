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
"""Closed-form half-line exemplars."""

from fractions import Fraction

import pytest

from pylawvere.concepts.errors import EmptySubset, NotForwardCauchy, UnclassifiableDescription
from pylawvere.concepts.extarith import INF, ZERO, ExtVal
from pylawvere.methods.halfline import (
    AbstractSubset,
    classify_seq,
    completion_point_of,
    converges_in_symmetrization,
    delta_P,
    flat_weight_dR,
    format_sequence,
    gamma_dR,
    net_weight_seq,
    p_sobriety_cases,
    parse_sequence,
    probe_grid,
    tail_limits_seq,
    yoneda_limit_seq,
)

NATURALS = "affine:0,1"
ONE_MINUS_HARMONIC = "harmonic:1,-1"


def subset(sup, contains_inf=False):
    return AbstractSubset(ExtVal(sup), contains_inf, True)


@pytest.mark.parametrize(
    "x,sub,expected",
    [
        pytest.param(5, subset(3), 2, id="finite"),
        pytest.param(5, AbstractSubset.empty(), "inf", id="empty"),
        pytest.param("inf", subset("inf"), 0, id="inf-inf"),
        pytest.param(2, subset(5), 0, id="below-sup"),
    ],
)
def test_delta_P(x, sub, expected):
    assert delta_P(ExtVal(x), sub) == ExtVal(expected)


@pytest.mark.parametrize(
    "x,sub,expected",
    [
        pytest.param("inf", subset("inf"), "inf", id="inf-sup-without-inf"),
        pytest.param("inf", subset("inf", True), 0, id="inf-in-subset"),
        pytest.param(2, subset(5), 0, id="below-sup"),
        pytest.param("inf", subset(3), "inf", id="inf-above-finite"),
        pytest.param(1, AbstractSubset.empty(), "inf", id="empty"),
    ],
)
def test_gamma_dR(x, sub, expected):
    assert gamma_dR(ExtVal(x), sub) == ExtVal(expected)


def test_delta_and_gamma_differ_exactly_once():
    differ = [
        (x, sub)
        for x, sub in probe_grid(["0", "1", "5/2", "inf"])
        if delta_P(x, sub) != gamma_dR(x, sub)
    ]
    assert differ == [(INF, AbstractSubset(INF, False, True))]


def test_abstract_subset_invariants():
    with pytest.raises(ValueError):
        AbstractSubset(ExtVal(3), True, True)
    with pytest.raises(ValueError):
        AbstractSubset(ExtVal(3), False, False)
    assert AbstractSubset.of([1, "inf"]) == AbstractSubset(INF, True, True)
    assert AbstractSubset.of([]) == AbstractSubset.empty()


@pytest.mark.parametrize(
    "b,sup,expected",
    [
        pytest.param(4, "inf", 0, id="unbounded-subset"),
        pytest.param("inf", 3, "inf", id="infinite-point"),
        pytest.param(5, 3, 2, id="both-finite"),
    ],
)
def test_p_sobriety_cases(b, sup, expected):
    assert p_sobriety_cases(ExtVal(b), subset(sup)) == ExtVal(expected)


def test_p_sobriety_cases_on_grid():
    for x, sub in probe_grid(["0", "1/2", "3", "inf"]):
        if sub.nonempty:
            assert p_sobriety_cases(x, sub) == delta_P(x, sub)
    with pytest.raises(EmptySubset):
        p_sobriety_cases(ZERO, AbstractSubset.empty())


@pytest.mark.parametrize(
    "desc,metric,forward,bicauchy,kind",
    [
        pytest.param(NATURALS, "dR", True, False, "almost-increasing-divergent", id="n-dR"),
        pytest.param(NATURALS, "dL", False, False, "none", id="n-dL"),
        pytest.param(ONE_MINUS_HARMONIC, "dL", True, True, "real-cauchy", id="harmonic-dL"),
        pytest.param(ONE_MINUS_HARMONIC, "dR", True, True, "real-cauchy", id="harmonic-dR"),
        pytest.param("3,1;const:inf", "dL", True, True, "eventually-constant-infinity", id="const-inf-dL"),
        pytest.param("0,2,5;divergent", "dR", True, False, "almost-increasing-divergent", id="divergent-dR"),
        pytest.param("alternating:0,2", "dL", False, False, "none", id="alternating-dL"),
        pytest.param("alternating:0,2", "dR", False, False, "none", id="alternating-dR"),
        pytest.param("5;alternating:2,2", "dL", True, True, "real-cauchy", id="alternating-equal"),
    ],
)
def test_classify_seq(desc, metric, forward, bicauchy, kind):
    cls = classify_seq(parse_sequence(desc), metric)
    assert (cls.forward_cauchy, cls.bicauchy, cls.kind) == (forward, bicauchy, kind)


@pytest.mark.parametrize(
    "desc",
    [
        pytest.param("affine:0", id="one-parameter"),
        pytest.param("affine:3,-1", id="goes-negative"),
        pytest.param("5,2;divergent", id="decreasing-prefix"),
        pytest.param("divergent", id="no-prefix"),
        pytest.param("geometric:1,2", id="unknown-kind"),
        pytest.param("harmonic:x,1", id="bad-parameter"),
        pytest.param("alternating:1,-1", id="alternating-negative"),
    ],
)
def test_parse_sequence_rejects(desc):
    with pytest.raises(UnclassifiableDescription):
        parse_sequence(desc)


def test_sequence_terms():
    seq = parse_sequence("7;harmonic:1,-1")
    assert seq.term(1) == ExtVal(7)
    assert seq.term(2) == ExtVal(Fraction(1, 2))
    assert format_sequence(seq) == "7;harmonic:1,-1"
    assert format_sequence(parse_sequence("const:inf")) == "const:inf"


def test_yoneda_limits():
    assert yoneda_limit_seq(parse_sequence(NATURALS), "dR") == INF
    assert yoneda_limit_seq(parse_sequence(ONE_MINUS_HARMONIC), "dL") == ExtVal(1)
    assert yoneda_limit_seq(parse_sequence("const:3/2"), "dL") == ExtVal(Fraction(3, 2))
    with pytest.raises(NotForwardCauchy):
        yoneda_limit_seq(parse_sequence(NATURALS), "dL")


def test_forward_cauchy_sequences_converge():
    for desc in (NATURALS, ONE_MINUS_HARMONIC, "harmonic:2,3", "1;const:inf", "0,1;divergent"):
        seq = parse_sequence(desc)
        for metric in ("dL", "dR"):
            if not classify_seq(seq, metric).forward_cauchy:
                continue
            for x in ("0", "1", "7/2", "inf"):
                low, high = tail_limits_seq(seq, metric, ExtVal(x))
                assert low == high


@pytest.mark.parametrize(
    "metric,x,inf_sup,sup_inf",
    [
        pytest.param("dL", 1, 1, 0, id="dL-between"),
        pytest.param("dR", 1, 1, 0, id="dR-between"),
        pytest.param("dL", 0, 2, 0, id="dL-at-low-value"),
        pytest.param("dR", 3, 3, 1, id="dR-above"),
        pytest.param("dL", 3, 0, 0, id="dL-above"),
    ],
)
def test_oscillating_tail_limits(metric, x, inf_sup, sup_inf):
    seq = parse_sequence("4;alternating:0,2")
    assert seq.term(2) == ZERO and seq.term(3) == ExtVal(2)
    assert tail_limits_seq(seq, metric, ExtVal(x)) == (ExtVal(inf_sup), ExtVal(sup_inf))


def test_monotone_tail_limits_use_the_limit():
    # distances climb to the limit without reaching it
    assert tail_limits_seq(parse_sequence(ONE_MINUS_HARMONIC), "dL", ZERO) == (ExtVal(1), ExtVal(1))
    assert tail_limits_seq(parse_sequence(NATURALS), "dL", ExtVal(3)) == (INF, INF)
    assert tail_limits_seq(parse_sequence(NATURALS), "dR", ExtVal(3)) == (ZERO, ZERO)


def test_oscillating_sequence_has_no_limit():
    seq = parse_sequence("alternating:1,3")
    assert not converges_in_symmetrization(seq)
    assert format_sequence(seq) == "alternating:1,3"
    with pytest.raises(NotForwardCauchy):
        seq.limit


def test_symmetrization():
    assert not converges_in_symmetrization(parse_sequence(NATURALS))
    assert converges_in_symmetrization(parse_sequence(ONE_MINUS_HARMONIC))


def test_flat_weights_of_dR():
    phi = flat_weight_dR(3)
    assert phi(5) == ExtVal(2) and phi(1) == ZERO
    assert phi.representable
    identity = flat_weight_dR(0)
    assert identity(ExtVal(Fraction(9, 4))) == ExtVal(Fraction(9, 4))
    missing = flat_weight_dR("inf")
    assert not missing.representable
    seq = missing.generating_sequence()
    for x in (0, 4, 100):
        assert missing(x) == ZERO
        assert net_weight_seq(seq, x) == ZERO
    assert completion_point_of(seq) == INF
    with pytest.raises(ValueError):
        missing(INF)
