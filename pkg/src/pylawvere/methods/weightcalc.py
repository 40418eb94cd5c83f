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
"""Weight and coweight calculus on finite spaces.

Weights play the role of lower sets, coweights of upper sets. Everything here
is evaluated exactly over the finite carrier, so every infimum and supremum
is attained and computed as a min or max over the points.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from pylawvere.concepts.errors import (
    ConsistencyError,
    NotNonexpansive,
    WeightLawViolation,
)
from pylawvere.concepts.extarith import (
    ZERO,
    ExtLike,
    ExtVal,
    as_extval,
    dist_l,
    ext_max,
    ext_min,
)
from pylawvere.concepts.space import (
    FiniteSpace,
    SpaceMap,
    nonexpansive_violations,
    zero_cliques,
)


@dataclass(frozen=True)
class WeightVec:
    """A weight: values(x) <= values(y) + d(x,y)."""

    space: FiniteSpace
    values: Tuple[ExtVal, ...]

    def __call__(self, point: str) -> ExtVal:
        return self.values[self.space.index(point)]

    def leq(self, other: "WeightVec") -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))


@dataclass(frozen=True)
class CoweightVec:
    """A coweight: values(y) <= values(x) + d(x,y)."""

    space: FiniteSpace
    values: Tuple[ExtVal, ...]

    def __call__(self, point: str) -> ExtVal:
        return self.values[self.space.index(point)]

    def leq(self, other: "CoweightVec") -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))


def _coerce(space: FiniteSpace, raw: Sequence[ExtLike]) -> Tuple[ExtVal, ...]:
    if len(raw) != space.size:
        raise ValueError(
            f"vector of length {len(raw)} does not match {space.size} points !"
        )
    return tuple(as_extval(value) for value in raw)


def weight_law_violations(
    space: FiniteSpace, raw: Sequence[ExtLike]
) -> List[Tuple[str, str]]:
    values = _coerce(space, raw)
    d = space.dist
    return [
        (space.points[x], space.points[y])
        for x in range(space.size)
        for y in range(space.size)
        if values[y] + d[x][y] < values[x]
    ]


def coweight_law_violations(
    space: FiniteSpace, raw: Sequence[ExtLike]
) -> List[Tuple[str, str]]:
    values = _coerce(space, raw)
    d = space.dist
    return [
        (space.points[x], space.points[y])
        for x in range(space.size)
        for y in range(space.size)
        if values[x] + d[x][y] < values[y]
    ]


def check_weight(space: FiniteSpace, raw: Sequence[ExtLike]) -> WeightVec:
    pairs = weight_law_violations(space, raw)
    if pairs:
        raise WeightLawViolation("weight", pairs)
    return WeightVec(space, _coerce(space, raw))


def check_coweight(space: FiniteSpace, raw: Sequence[ExtLike]) -> CoweightVec:
    pairs = coweight_law_violations(space, raw)
    if pairs:
        raise WeightLawViolation("coweight", pairs)
    return CoweightVec(space, _coerce(space, raw))


def representable(space: FiniteSpace, point: str) -> WeightVec:
    """The weight d(-, point)."""
    return WeightVec(space, space.column(space.index(point)))


def corepresentable(space: FiniteSpace, point: str) -> CoweightVec:
    """The coweight d(point, -)."""
    return CoweightVec(space, space.row(space.index(point)))


def _same_space(a, b) -> None:
    if a.space != b.space:
        raise ValueError("vectors live on different spaces !")


def sup_metric(phi: WeightVec, psi: WeightVec) -> ExtVal:
    """d-bar(phi, psi) = sup_x d_L(phi(x), psi(x))."""
    _same_space(phi, psi)
    return ext_max(dist_l(a, b) for a, b in zip(phi.values, psi.values))


def tensor(phi: WeightVec, psi: CoweightVec) -> ExtVal:
    """phi (x) psi = inf_x phi(x) + psi(x)."""
    _same_space(phi, psi)
    return ext_min(a + b for a, b in zip(phi.values, psi.values))


def left_adjoint_candidate(phi: WeightVec) -> CoweightVec:
    """x -> d-bar(phi, d(-,x)), the only possible left adjoint of phi."""
    space = phi.space
    return CoweightVec(
        space,
        tuple(
            ext_max(dist_l(phi.values[z], space.dist[z][x]) for z in range(space.size))
            for x in range(space.size)
        ),
    )


@dataclass(frozen=True)
class CauchyReport:
    cauchy: bool
    witness: CoweightVec
    violation: Optional[str] = None


def is_adjoint_pair(phi: WeightVec, psi: CoweightVec) -> Optional[str]:
    """None when phi (x) psi = 0 and phi(x) + psi(y) >= d(x,y), else the failing condition."""
    _same_space(phi, psi)
    product = tensor(phi, psi)
    if product != ZERO:
        return f"tensor with the candidate is {product}"
    space = phi.space
    for x in range(space.size):
        for y in range(space.size):
            if phi.values[x] + psi.values[y] < space.dist[x][y]:
                return (
                    f"phi({space.points[x]}) + psi({space.points[y]}) < "
                    f"d({space.points[x]},{space.points[y]})"
                )
    return None


def is_cauchy(phi: WeightVec) -> CauchyReport:
    # adjoints are unique, so testing the canonical candidate decides the question
    candidate = left_adjoint_candidate(phi)
    violation = is_adjoint_pair(phi, candidate)
    return CauchyReport(violation is None, candidate, violation)


def is_flat(phi: WeightVec) -> bool:
    """Flatness on a finite carrier.

    Condition (b) of the flat-weight characterization asks, for x1, x2 with
    phi(x_i) < eps_i, for a y and eps > phi(y) with d(x_i,y) + eps < eps_i.
    Finite infima are attained, so the strict inequalities collapse to
    d(x_i,y) + phi(y) <= phi(x_i). A point with phi(x_i) = inf imposes
    nothing since inf <= inf.
    """
    space = phi.space
    values = phi.values
    if ext_min(values) != ZERO:
        return False
    d = space.dist
    n = space.size
    for x1 in range(n):
        for x2 in range(x1 + 1, n):
            if not any(
                d[x1][y] + values[y] <= values[x1] and d[x2][y] + values[y] <= values[x2]
                for y in range(n)
            ):
                return False
    return True


def flat_by_distributivity(phi: WeightVec) -> bool:
    """Flatness through phi (x) max{psi1, psi2} = max{phi (x) psi1, phi (x) psi2}.

    The coweights tested are the shifted representables d(x,-) + c with c
    ranging over the gaps max{phi(x1),phi(x2)} - phi(x_i). This family is
    exhaustive on finite carriers: a pair x1, x2 without a common witness y
    makes the shifted pair fail distributivity.
    """
    space = phi.space
    values = phi.values
    if ext_min(values) != ZERO:
        return False
    n = space.size
    for x1 in range(n):
        for x2 in range(x1 + 1, n):
            top = ext_max((values[x1], values[x2]))
            if top.is_infinite:
                # phi(x_i) = inf imposes nothing, unshifted representables cover the rest
                shifts = (ZERO, ZERO)
            else:
                shifts = (top - values[x1], top - values[x2])
            psi1 = shift_up(corepresentable(space, space.points[x1]), shifts[0])
            psi2 = shift_up(corepresentable(space, space.points[x2]), shifts[1])
            if not distributes(phi, psi1, psi2):
                return False
    return True


def distributes(phi: WeightVec, psi1: CoweightVec, psi2: CoweightVec) -> bool:
    return tensor(phi, vec_max((psi1, psi2))) == ext_max(
        (tensor(phi, psi1), tensor(phi, psi2))
    )


def pushforward(fmap: SpaceMap, phi: WeightVec) -> WeightVec:
    """f(phi)(y) = inf_x phi(x) + p(y, f(x))."""
    _require_nonexpansive(fmap)
    if phi.space != fmap.source:
        raise ValueError("weight does not live on the source of the map !")
    trg = fmap.target
    return WeightVec(
        trg,
        tuple(
            ext_min(
                phi.values[x] + trg.dist[y][fx] for x, fx in enumerate(fmap.assignment)
            )
            for y in range(trg.size)
        ),
    )


def pullback(fmap: SpaceMap, vec):
    """vec o f, a weight (coweight) on the source for a weight (coweight) on the target."""
    _require_nonexpansive(fmap)
    if vec.space != fmap.target:
        raise ValueError("vector does not live on the target of the map !")
    return type(vec)(fmap.source, tuple(vec.values[fx] for fx in fmap.assignment))


def _require_nonexpansive(fmap: SpaceMap) -> None:
    pairs = nonexpansive_violations(fmap)
    if pairs:
        raise NotNonexpansive(f"map expands distances at {pairs} !")


def weight_coreflection(space: FiniteSpace, raw: Sequence[ExtLike]) -> WeightVec:
    """Largest weight below g: x -> min_y g(y) + d(x,y)."""
    g = _coerce(space, raw)
    d = space.dist
    return WeightVec(
        space,
        tuple(
            ext_min(g[y] + d[x][y] for y in range(space.size))
            for x in range(space.size)
        ),
    )


def coweight_coreflection(space: FiniteSpace, raw: Sequence[ExtLike]) -> CoweightVec:
    """Largest coweight below g: x -> min_y g(y) + d(y,x)."""
    g = _coerce(space, raw)
    d = space.dist
    return CoweightVec(
        space,
        tuple(
            ext_min(g[y] + d[y][x] for y in range(space.size))
            for x in range(space.size)
        ),
    )


def vec_min(vecs: Iterable):
    vecs = list(vecs)
    return type(vecs[0])(
        vecs[0].space, tuple(ext_min(column) for column in zip(*(v.values for v in vecs)))
    )


def vec_max(vecs: Iterable):
    vecs = list(vecs)
    return type(vecs[0])(
        vecs[0].space, tuple(ext_max(column) for column in zip(*(v.values for v in vecs)))
    )


def shift_up(vec, alpha: ExtLike):
    alpha = as_extval(alpha)
    return type(vec)(vec.space, tuple(value + alpha for value in vec.values))


def shift_down(vec, alpha: ExtLike):
    alpha = as_extval(alpha)
    return type(vec)(vec.space, tuple(value - alpha for value in vec.values))


def constant(space: FiniteSpace, value: ExtLike) -> WeightVec:
    return WeightVec(space, tuple(as_extval(value) for _ in range(space.size)))


def enumerate_flat_weights(space: FiniteSpace) -> List[Tuple[WeightVec, Tuple[int, ...]]]:
    """Flat weights with the zero-clique representing each, re-verified by is_flat."""
    flats: List[Tuple[WeightVec, Tuple[int, ...]]] = []
    for clique in zero_cliques(space):
        phi = representable(space, space.points[clique[0]])
        if not is_flat(phi):
            raise ConsistencyError(
                f"representable weight at {space.points[clique[0]]} is not flat !"
            )
        flats.append((phi, clique))
    return flats


def colimits(phi: WeightVec) -> List[str]:
    """All a with d-bar(phi, d(-,y)) = d(a,y) for every y."""
    space = phi.space
    profile = [
        sup_metric(phi, representable(space, point)) for point in space.points
    ]
    return [
        space.points[a]
        for a in range(space.size)
        if list(space.row(a)) == profile
    ]
