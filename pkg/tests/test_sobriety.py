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
"""Approach primes, sobriety and sobrification."""

import pytest

from pylawvere.concepts.approach import ApproachMap, alexandroff, specialization
from pylawvere.concepts.errors import (
    InfimumNotZero,
    NotContraction,
    NotForwardCauchy,
    NotRegular,
    TargetNotSober,
)
from pylawvere.concepts.extarith import INF, ZERO, ExtVal
from pylawvere.concepts.space import validate
from pylawvere.methods.completion import make_net
from pylawvere.methods.sobriety import (
    direct_counterexample,
    enumerate_primes,
    extension_majorant_gap,
    hat,
    hat_transform,
    is_sober,
    net_prime,
    prime_oracle,
    sobrify,
    universal_extension,
)
from pylawvere.methods.weightcalc import WeightVec, representable


def test_prime_oracle_on_zc2(a_zc2):
    assert prime_oracle(a_zc2, [0, 0]).prime


def test_prime_oracle_on_sym2(a_sym2, sym2):
    witness = prime_oracle(a_sym2, [0, 0])
    assert not witness.prime
    xi, psi = witness.counterexample
    assert not xi.leq(witness.phi) and not psi.leq(witness.phi)
    candidates = [representable(sym2, "a"), representable(sym2, "b")]
    assert direct_counterexample(WeightVec(sym2, (ZERO, ZERO)), candidates) is not None


def test_prime_oracle_rejects(a_sym2):
    with pytest.raises(NotRegular):
        prime_oracle(a_sym2, [0, 5])
    with pytest.raises(InfimumNotZero):
        prime_oracle(a_sym2, [1, 1])


@pytest.mark.parametrize(
    "fixture,expected",
    [
        pytest.param("a_sym2", [(0, 1), (1, 0)], id="SYM2"),
        pytest.param("a_zc2", [(0, 0)], id="ZC2"),
        pytest.param("a_sier", [(0, "inf"), (0, 0)], id="SIER"),
    ],
)
def test_enumerate_primes(fixture, expected, request):
    primes = enumerate_primes(request.getfixturevalue(fixture))
    assert [prime.values for prime in primes] == [tuple(ExtVal(v) for v in row) for row in expected]


@pytest.mark.parametrize(
    "fixture,sober,counts",
    [
        pytest.param("a_sym2", True, (1, 1), id="SYM2"),
        pytest.param("a_sier", True, (1, 1), id="SIER"),
        pytest.param("a_zc2", False, (2,), id="ZC2"),
    ],
)
def test_is_sober(fixture, sober, counts, request):
    report = is_sober(request.getfixturevalue(fixture))
    assert report.sober is sober
    assert report.preimages == counts


def test_sobrify_zc2(a_zc2):
    sob = sobrify(a_zc2)
    assert sob.dist.size == 1
    assert sob.eta == (0, 0)
    assert sob.dist.points == ("a~b",)
    assert is_sober(sob.approach).sober


def test_sobrify_sober_space_is_congruent(a_sym2, sym2):
    sob = sobrify(a_sym2)
    assert sob.eta == (0, 1)
    assert sob.dist.dist == sym2.dist


def test_hat_of_representables(a_sym2, sym2):
    primes = enumerate_primes(a_sym2)
    # xi-hat at the prime of y is xi(y) for representable primes
    xi = (ExtVal(2), ExtVal(1))
    assert hat_transform(xi, primes) == xi
    assert hat(representable(sym2, "a"), primes[1]) == ExtVal(1)


def test_universal_extension_into_point(a_zc2):
    point = alexandroff(validate(("p",), [[0]], "ONE"))
    extension = universal_extension(ApproachMap(a_zc2, point, (0, 0)))
    assert extension.assignment == (0,)


def test_universal_extension_into_sier(a_zc2, a_sier):
    fmap = ApproachMap(a_zc2, a_sier, (0, 0))
    extension = universal_extension(fmap)
    assert extension.assignment == (0,)
    prime = enumerate_primes(a_zc2)[0]
    assert extension_majorant_gap(fmap, prime, [(0, 0), (0, "inf"), (INF, INF)]) is None


def test_universal_extension_errors(a_sym2, a_zc2, a_sier):
    with pytest.raises(TargetNotSober):
        universal_extension(ApproachMap(a_sym2, a_zc2, (0, 1)))
    with pytest.raises(NotContraction):
        universal_extension(ApproachMap(a_sier, a_sym2, (0, 1)))


def test_net_prime(a_zc2, a_sym2):
    net = make_net(specialization(a_zc2), ["a"], ["a", "b"])
    assert net_prime(a_zc2, net).values == (ZERO, ZERO)
    constant = make_net(specialization(a_sym2), [], ["b"])
    assert net_prime(a_sym2, constant).values == (ExtVal(1), ZERO)
    with pytest.raises(NotForwardCauchy):
        net_prime(a_sym2, make_net(specialization(a_sym2), [], ["a", "b"]))
