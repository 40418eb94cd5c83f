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
"""Approach primes, sobriety and the sobrification of a finite approach space."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from pylawvere.concepts.approach import (
    ApproachMap,
    FiniteApproach,
    alexandroff,
    is_contraction,
    is_regular,
    specialization,
)
from pylawvere.concepts.errors import (
    ConsistencyError,
    InfimumNotZero,
    NotContraction,
    NotForwardCauchy,
    NotRegular,
    TargetNotSober,
)
from pylawvere.concepts.extarith import INF, ZERO, ExtLike, ExtVal, as_extval, ext_max, ext_min
from pylawvere.concepts.space import FiniteSpace, validate
from pylawvere.methods.completion import NetSpec, classify_net
from pylawvere.methods.weightcalc import (
    WeightVec,
    enumerate_flat_weights,
    sup_metric,
    vec_min,
    weight_coreflection,
)
from pylawvere.utils.subsets import all_masks, full_mask, members

RegularLike = Union[WeightVec, Sequence[ExtLike]]


@dataclass(frozen=True)
class PrimeWitness:
    """Verdict of the prime oracle; a non-prime carries a pair (xi, psi) with min{xi, psi} <= phi."""

    phi: WeightVec
    prime: bool
    counterexample: Optional[Tuple[WeightVec, WeightVec]] = None


@dataclass(frozen=True)
class SoberReport:
    sober: bool
    witness: Optional[WeightVec] = None
    preimages: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Sobrification:
    base: FiniteApproach
    primes: Tuple[WeightVec, ...]
    dist: FiniteSpace
    eta: Tuple[int, ...]

    @property
    def approach(self) -> FiniteApproach:
        # legitimate because finite approach structures collapse to their singletons
        return alexandroff(self.dist)


def as_regular(space: FiniteApproach, phi: RegularLike) -> WeightVec:
    """A regular function as a weight of the specialization metric."""
    raw = phi.values if isinstance(phi, WeightVec) else phi
    if not is_regular(space, raw):
        raise NotRegular(f"{[str(v) for v in raw]} is not a regular function !")
    return WeightVec(specialization(space), tuple(as_extval(v) for v in raw))


def _raised(phi: WeightVec, mask: int) -> List[ExtVal]:
    return [INF if mask >> x & 1 else value for x, value in enumerate(phi.values)]


def prime_oracle(space: FiniteApproach, phi: RegularLike) -> PrimeWitness:
    """Decide primality through the two-block partitions of the carrier.

    For a nonempty proper U let xi_U be the largest regular function below phi
    raised to inf on U. phi is prime iff for every U one of xi_U, xi_{X-U}
    lies below phi. Any counterexample pair (xi, psi) is dominated by the pair
    built from U = {x : xi(x) > phi(x)}, whose complement contains the points
    where psi exceeds phi.
    """
    vec = as_regular(space, phi)
    if ext_min(vec.values) != ZERO:
        raise InfimumNotZero(f"{[str(v) for v in vec.values]} has a nonzero infimum !")
    metric = vec.space
    n = metric.size
    everything = full_mask(n)
    last = 1 << (n - 1)
    for umask in range(1, everything):
        if umask & last:
            # U and its complement describe the same partition
            continue
        xi_u = weight_coreflection(metric, _raised(vec, umask))
        xi_c = weight_coreflection(metric, _raised(vec, everything ^ umask))
        if not xi_u.leq(vec) and not xi_c.leq(vec):
            return PrimeWitness(vec, False, (xi_u, xi_c))
    return PrimeWitness(vec, True)


def direct_counterexample(
    phi: WeightVec, candidates: Sequence[WeightVec]
) -> Optional[Tuple[WeightVec, WeightVec]]:
    """Search the candidates for a pair refuting primality of phi."""
    for i, xi in enumerate(candidates):
        if xi.leq(phi):
            continue
        for psi in candidates[i + 1 :]:
            if psi.leq(phi):
                continue
            if vec_min((xi, psi)).leq(phi):
                return xi, psi
    return None


def _prime_name(space: FiniteApproach, prime: WeightVec, fallback: int) -> str:
    metric = prime.space
    reps = [space.carrier[x] for x in range(space.size) if metric.column(x) == prime.values]
    return "~".join(reps) if reps else f"prime{fallback}"


def enumerate_primes(space: FiniteApproach) -> List[WeightVec]:
    """Approach primes as the flat weights of the specialization metric, each confirmed by the oracle."""
    primes = [phi for phi, _ in enumerate_flat_weights(specialization(space))]
    for phi in primes:
        if not prime_oracle(space, phi).prime:
            raise ConsistencyError(
                f"flat weight {[str(v) for v in phi.values]} is rejected by the prime oracle !"
            )
    return primes


def is_sober(space: FiniteApproach) -> SoberReport:
    primes = enumerate_primes(space)
    metric = specialization(space)
    columns = [metric.column(x) for x in range(space.size)]
    counts = []
    for prime in primes:
        count = sum(1 for column in columns if column == prime.values)
        counts.append(count)
        if count != 1:
            return SoberReport(False, prime, tuple(counts))
    for x, column in enumerate(columns):
        if all(column != prime.values for prime in primes):
            raise ConsistencyError(
                f"delta(-, {{{space.carrier[x]}}}) is missing from the primes !"
            )
    return SoberReport(True, None, tuple(counts))


def hat(xi: RegularLike, phi: WeightVec) -> ExtVal:
    """xi-hat(phi) = sup_x d_L(phi(x), xi(x))."""
    raw = xi.values if isinstance(xi, WeightVec) else tuple(as_extval(v) for v in xi)
    return sup_metric(phi, WeightVec(phi.space, raw))


def hat_transform(xi: RegularLike, primes: Sequence[WeightVec]) -> Tuple[ExtVal, ...]:
    return tuple(hat(xi, phi) for phi in primes)


def sobrify(space: FiniteApproach) -> Sobrification:
    primes = enumerate_primes(space)
    names = [_prime_name(space, prime, k) for k, prime in enumerate(primes)]
    dist = validate(
        names,
        [[sup_metric(phi, xi) for xi in primes] for phi in primes],
        f"{space.name}.sob" if space.name else "",
    )
    metric = specialization(space)
    eta = []
    for x in range(space.size):
        column = metric.column(x)
        hits = [k for k, prime in enumerate(primes) if prime.values == column]
        if len(hits) != 1:
            raise ConsistencyError(f"eta({space.carrier[x]}) is not a unique prime !")
        eta.append(hits[0])
    result = Sobrification(space, tuple(primes), dist, tuple(eta))
    approach = result.approach
    if specialization(approach) != dist:
        raise ConsistencyError("sobrification does not collapse to its specialization metric !")
    if not is_sober(approach).sober:
        raise ConsistencyError("sobrification is not sober !")
    for mask in all_masks(space.size):
        image = 0
        for a in members(mask):
            image |= 1 << eta[a]
        for x in range(space.size):
            if approach.delta(eta[x], image) != space.delta(x, mask):
                raise ConsistencyError(f"eta is not isometric at {space.carrier[x]} !")
    return result


def extension_transform(fmap: ApproachMap, phi: WeightVec) -> WeightVec:
    """f-dagger(phi)(y) = min_x phi(x) + rho(y, {f(x)})."""
    target = specialization(fmap.target)
    return WeightVec(
        target,
        tuple(
            ext_min(
                phi.values[x] + target.dist[y][fx]
                for x, fx in enumerate(fmap.assignment)
            )
            for y in range(target.size)
        ),
    )


def extension_majorant_gap(
    fmap: ApproachMap, phi: WeightVec, candidates: Sequence[Sequence[ExtLike]]
) -> Optional[str]:
    """Compare the closed form of f-dagger(phi) with sup{psi regular | psi o f <= phi}."""
    closed = extension_transform(fmap, phi)
    if not is_regular(fmap.target, closed.values):
        return "closed form is not regular"
    if any(phi.values[x] < closed.values[fx] for x, fx in enumerate(fmap.assignment)):
        return "closed form composed with f exceeds phi"
    for raw in candidates:
        psi = [as_extval(v) for v in raw]
        if not is_regular(fmap.target, psi):
            continue
        below = all(psi[fx] <= phi.values[x] for x, fx in enumerate(fmap.assignment))
        if below and any(a > b for a, b in zip(psi, closed.values)):
            return f"regular {[str(v) for v in psi]} lies under phi along f but not under the closed form"
    return None


def universal_extension(fmap: ApproachMap) -> ApproachMap:
    """The unique contraction g from the sobrification of the source with g o eta = f."""
    if not is_sober(fmap.target).sober:
        raise TargetNotSober(f"target {fmap.target.name} is not sober !")
    report = is_contraction(fmap)
    if not report.contraction:
        raise NotContraction(f"map is not a contraction at {report.witness} !")
    sob = sobrify(fmap.source)
    target_metric = specialization(fmap.target)
    columns = [target_metric.column(y) for y in range(fmap.target.size)]
    assignment = []
    for prime in sob.primes:
        image = extension_transform(fmap, prime)
        hits = [y for y, column in enumerate(columns) if column == image.values]
        if len(hits) != 1:
            raise ConsistencyError("f-dagger of a prime is not a unique point of the target !")
        assignment.append(hits[0])
    extension = ApproachMap(sob.approach, fmap.target, tuple(assignment))
    if tuple(assignment[k] for k in sob.eta) != fmap.assignment:
        raise ConsistencyError("extension composed with eta differs from f !")
    if not is_contraction(extension).contraction:
        raise ConsistencyError("extension is not a contraction !")
    return extension


def net_prime(space: FiniteApproach, net: NetSpec) -> WeightVec:
    """x -> sup over tails of delta(x, tail set), for a forward Cauchy net of the specialization metric."""
    if net.space != specialization(space):
        raise ValueError("net does not live on the specialization metric !")
    if not classify_net(net).forward_cauchy:
        raise NotForwardCauchy(f"net {net.name} is not forward Cauchy !")
    cycle_mask = 0
    for c in net.cycle:
        cycle_mask |= 1 << c
    tails = []
    for start in range(len(net.preperiod) + 1):
        mask = cycle_mask
        for p in net.preperiod[start:]:
            mask |= 1 << p
        tails.append(mask)
    return as_regular(
        space,
        [ext_max(space.delta(x, mask) for mask in tails) for x in range(space.size)],
    )
