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
"""Eventually periodic nets, Yoneda limits, the Yoneda completion and Smyth completeness.

Nets are sequences indexed by the naturals: a finite preperiod followed by a
nonempty cycle repeated forever. On a finite carrier every flat weight is
generated by such a net (take a constant net at a point of its zero-clique),
so nothing the finite constructions need is lost.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import List, Sequence, Tuple

from pylawvere.concepts.errors import ConsistencyError, NotForwardCauchy
from pylawvere.concepts.extarith import INF, ZERO, ExtVal, ext_max, ext_min
from pylawvere.concepts.space import (
    FiniteSpace,
    classify,
    clique_name,
    validate,
)
from pylawvere.methods.weightcalc import (
    CoweightVec,
    WeightVec,
    colimits,
    enumerate_flat_weights,
    is_cauchy,
    is_flat,
    representable,
    sup_metric,
)


@dataclass(frozen=True)
class NetSpec:
    space: FiniteSpace
    preperiod: Tuple[int, ...]
    cycle: Tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.cycle:
            raise ValueError(f"net {self.name} has an empty cycle !")
        for idx in self.preperiod + self.cycle:
            if not 0 <= idx < self.space.size:
                raise ValueError(f"net {self.name} leaves the carrier at index {idx} !")

    @property
    def period_length(self) -> int:
        return len(self.preperiod) + len(self.cycle)

    def prefix(self, length: int) -> List[int]:
        out = list(self.preperiod[:length])
        while len(out) < length:
            out.append(self.cycle[(len(out) - len(self.preperiod)) % len(self.cycle)])
        return out


def make_net(
    space: FiniteSpace, preperiod: Sequence[str], cycle: Sequence[str], name: str = ""
) -> NetSpec:
    return NetSpec(
        space,
        tuple(space.index(p) for p in preperiod),
        tuple(space.index(c) for c in cycle),
        name,
    )


@dataclass(frozen=True)
class NetClass:
    forward_cauchy: bool
    bicauchy: bool


@dataclass(frozen=True)
class CompletionResult:
    base: FiniteSpace
    completed: FiniteSpace
    flats: Tuple[WeightVec, ...]
    embedding: Tuple[int, ...]
    iso_flag: bool


@dataclass(frozen=True)
class SmythFlags:
    complete: bool
    completable: bool


def _window(net: NetSpec) -> Tuple[List[int], int]:
    """A prefix long enough that every tail starting before `starts` shows the whole cycle twice."""
    starts = net.period_length
    return net.prefix(3 * starts), starts


def _suffix_sups(values_from: List[List[ExtVal]]) -> List[ExtVal]:
    """sups[lam] = max over rows mu >= lam of max(values_from[mu])."""
    sups = [ZERO] * (len(values_from) + 1)
    for lam in range(len(values_from) - 1, -1, -1):
        sups[lam] = ext_max((sups[lam + 1], ext_max(values_from[lam])))
    return sups


def classify_net(net: NetSpec) -> NetClass:
    """Forward Cauchy and biCauchy both reduce to the cycle points forming a zero-clique.

    The reduction is checked against the inf-sup over a finite window of
    tails, which is exact for eventually periodic nets.
    """
    d = net.space.dist
    points = set(net.cycle)
    reduced = all(d[a][b] == ZERO for a in points for b in points)

    seq, starts = _window(net)
    length = len(seq)
    forward_rows = [
        [d[seq[mu]][seq[nu]] for nu in range(mu, length)] for mu in range(length)
    ]
    both_rows = [
        [ext_max((d[seq[mu]][seq[nu]], d[seq[nu]][seq[mu]])) for nu in range(mu, length)]
        for mu in range(length)
    ]
    forward_cauchy = ext_min(_suffix_sups(forward_rows)[:starts]) == ZERO
    bicauchy = ext_min(_suffix_sups(both_rows)[:starts]) == ZERO
    if forward_cauchy != reduced or bicauchy != reduced:
        raise ConsistencyError(
            f"periodic reduction ({reduced}) disagrees with direct evaluation "
            f"({forward_cauchy}, {bicauchy}) for net {net.name} !"
        )
    return NetClass(forward_cauchy, bicauchy)


def tail_limits(net: NetSpec, x: int) -> Tuple[ExtVal, ExtVal]:
    """(inf-sup, sup-inf) over tails of d(x, x_sigma)."""
    seq, starts = _window(net)
    d = net.space.dist
    sups = [ZERO] * (len(seq) + 1)
    infs = [INF] * (len(seq) + 1)
    for s in range(len(seq) - 1, -1, -1):
        sups[s] = ext_max((sups[s + 1], d[x][seq[s]]))
        infs[s] = ext_min((infs[s + 1], d[x][seq[s]]))
    return ext_min(sups[:starts]), ext_max(infs[:starts])


def net_weight(net: NetSpec) -> WeightVec:
    """x -> inf over tails of sup d(x, x_sigma)."""
    if not classify_net(net).forward_cauchy:
        raise NotForwardCauchy(f"net {net.name} is not forward Cauchy !")
    space = net.space
    phi = WeightVec(space, tuple(tail_limits(net, x)[0] for x in range(space.size)))
    if not is_flat(phi):
        raise ConsistencyError(f"weight of forward Cauchy net {net.name} is not flat !")
    return phi


def _coweight_profile(net: NetSpec) -> Tuple[ExtVal, ...]:
    seq, starts = _window(net)
    d = net.space.dist
    profile = []
    for y in range(net.space.size):
        sups = _suffix_sups([[d[point][y]] for point in seq])
        profile.append(ext_min(sups[:starts]))
    return tuple(profile)


def net_coweight(net: NetSpec) -> CoweightVec:
    """y -> inf over tails of sup d(x_sigma, y)."""
    return CoweightVec(net.space, _coweight_profile(net))


def yoneda_limits(net: NetSpec) -> List[str]:
    """All points a with d(a, y) equal to the inf-sup of d(x_sigma, y) for every y."""
    profile = _coweight_profile(net)
    space = net.space
    return [space.points[a] for a in range(space.size) if space.row(a) == profile]


def yoneda_complete_check(space: FiniteSpace) -> bool:
    return all(colimits(phi) for phi, _ in enumerate_flat_weights(space))


def _flat_carrier(space: FiniteSpace, flats, suffix: str) -> FiniteSpace:
    return validate(
        [clique_name(space.points, clique) for _, clique in flats],
        [[sup_metric(phi, xi) for xi, _ in flats] for phi, _ in flats],
        f"{space.name}.{suffix}" if space.name else "",
    )


def _embedding(space: FiniteSpace, flats) -> Tuple[int, ...]:
    out = []
    for point in space.points:
        column = representable(space, point).values
        hits = [k for k, (phi, _) in enumerate(flats) if phi.values == column]
        if len(hits) != 1:
            raise ConsistencyError(f"representable weight at {point} is not a unique flat weight !")
        out.append(hits[0])
    return tuple(out)


def yoneda_completion(space: FiniteSpace) -> CompletionResult:
    flats = enumerate_flat_weights(space)
    completed = _flat_carrier(space, flats, "yon")
    embedding = _embedding(space, flats)
    n = space.size
    if not all(
        completed.dist[embedding[x]][embedding[y]] == space.dist[x][y]
        for x in range(n)
        for y in range(n)
    ):
        raise ConsistencyError("Yoneda embedding is not isometric !")
    if not classify(completed).separated:
        raise ConsistencyError("Yoneda completion is not separated !")
    bijective = len(set(embedding)) == n and completed.size == n
    return CompletionResult(
        space, completed, tuple(phi for phi, _ in flats), embedding, bijective
    )


def cauchy_completion(space: FiniteSpace) -> CompletionResult:
    """The subspace of the Yoneda completion on the Cauchy weights."""
    flats = [(phi, clique) for phi, clique in enumerate_flat_weights(space) if is_cauchy(phi).cauchy]
    completed = _flat_carrier(space, flats, "cau")
    embedding = _embedding(space, flats)
    bijective = len(set(embedding)) == space.size and completed.size == space.size
    return CompletionResult(
        space, completed, tuple(phi for phi, _ in flats), embedding, bijective
    )


def periodic_nets(space: FiniteSpace, max_cycle: int = 0) -> List[NetSpec]:
    """One net per nonempty set of recurring points; only that set matters for the tails."""
    limit = max_cycle if max_cycle > 0 else space.size
    nets = []
    for bits in product((False, True), repeat=space.size):
        cycle = tuple(idx for idx, bit in enumerate(bits) if bit)
        if cycle and len(cycle) <= limit:
            nets.append(NetSpec(space, (), cycle))
    return nets


def smyth_classify(space: FiniteSpace) -> SmythFlags:
    flats = enumerate_flat_weights(space)
    complete = all(
        sum(1 for x in range(space.size) if space.column(x) == phi.values) == 1
        for phi, _ in flats
    )
    separated = classify(space).separated
    if complete != separated:
        raise ConsistencyError(
            f"unique representability ({complete}) differs from separation ({separated}) !"
        )
    completable = all(is_cauchy(phi).cauchy for phi, _ in flats)

    nets_converge = True
    nets_bicauchy = True
    for net in periodic_nets(space):
        cls = classify_net(net)
        if not cls.forward_cauchy:
            continue
        nets_bicauchy = nets_bicauchy and cls.bicauchy
        # converging in the symmetrization means a single Yoneda limit
        nets_converge = nets_converge and len(yoneda_limits(net)) == 1
    if nets_converge != complete or nets_bicauchy != completable:
        raise ConsistencyError("net-based Smyth classification disagrees with the weight-based one !")
    return SmythFlags(complete, completable)


def weight_net_limit(cycle: Sequence[WeightVec]) -> WeightVec:
    """inf over tails of the pointwise sup of an eventually periodic net of weights."""
    space = cycle[0].space
    return WeightVec(
        space, tuple(ext_max(column) for column in zip(*(phi.values for phi in cycle)))
    )


def weight_net_is_forward_cauchy(cycle: Sequence[WeightVec]) -> bool:
    return all(sup_metric(phi, xi) == ZERO for phi in cycle for xi in cycle)
