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
"""Seeded random structures for the property laws.

Every generator takes a numpy Generator and draws from a value pool of ExtVal;
structures are repaired into validity rather than rejection sampled.
"""

from string import ascii_lowercase
from typing import List, Sequence, Tuple

import numpy as np

from pylawvere.concepts.approach import FiniteApproach, alexandroff, collapse_table
from pylawvere.concepts.extarith import INF, ZERO, ExtVal
from pylawvere.concepts.ordtop import (
    FinitePreorder,
    FiniteTopology,
    alexandroff_top,
    preorder_from_pairs,
)
from pylawvere.concepts.space import (
    FiniteSpace,
    SpaceMap,
    check_nonexpansive,
    min_plus_closure,
    unchecked_space,
    validate,
)
from pylawvere.methods.completion import NetSpec
from pylawvere.methods.weightcalc import (
    CoweightVec,
    WeightVec,
    coweight_coreflection,
    weight_coreflection,
)

MAP_ATTEMPTS = 8


def point_names(n: int) -> List[str]:
    return list(ascii_lowercase[:n])


def draw_value(rng: np.random.Generator, pool: Sequence[ExtVal]) -> ExtVal:
    return pool[int(rng.integers(len(pool)))]


def draw_size(rng: np.random.Generator, max_points: int, min_points: int = 1) -> int:
    return int(rng.integers(min_points, max(min_points, max_points) + 1))


def draw_vector(rng: np.random.Generator, n: int, pool: Sequence[ExtVal]) -> List[ExtVal]:
    return [draw_value(rng, pool) for _ in range(n)]


def generate_space(
    rng: np.random.Generator, max_points: int, pool: Sequence[ExtVal], name: str = "X"
) -> FiniteSpace:
    """Random matrix from the pool closed under min-plus relaxation."""
    n = draw_size(rng, max_points)
    matrix = [draw_vector(rng, n, pool) for _ in range(n)]
    return validate(point_names(n), min_plus_closure(matrix), name)


def generate_weight(rng: np.random.Generator, space: FiniteSpace, pool: Sequence[ExtVal]) -> WeightVec:
    return weight_coreflection(space, draw_vector(rng, space.size, pool))


def generate_zero_weight(rng: np.random.Generator, space: FiniteSpace, pool: Sequence[ExtVal]) -> WeightVec:
    """A weight with zero infimum: the coreflection keeps the forced zero."""
    raw = draw_vector(rng, space.size, pool)
    raw[int(rng.integers(space.size))] = ZERO
    return weight_coreflection(space, raw)


def generate_coweight(rng: np.random.Generator, space: FiniteSpace, pool: Sequence[ExtVal]) -> CoweightVec:
    return coweight_coreflection(space, draw_vector(rng, space.size, pool))


def generate_approach(
    rng: np.random.Generator, max_points: int, pool: Sequence[ExtVal], name: str = "A"
) -> FiniteApproach:
    # every finite approach space is the Alexandroff space of its specialization metric
    return alexandroff(generate_space(rng, max_points, pool, name))


def perturb_table(
    rng: np.random.Generator, space: FiniteApproach, pool: Sequence[ExtVal]
) -> List[List[ExtVal]]:
    """Change one entry; half of the time re-collapse the row so that only (A4) can break."""
    table = space.table()
    x = int(rng.integers(space.size))
    if rng.random() < 0.5:
        singles = [list(row) for row in space.singletons]
        y = int(rng.integers(space.size))
        if x != y:
            singles[x][y] = draw_value(rng, pool)
        table[x] = collapse_table(space.carrier, singles)[x]
    else:
        mask = int(rng.integers(1 << space.size))
        table[x][mask] = draw_value(rng, pool)
    return table


def generate_preorder(rng: np.random.Generator, max_points: int, name: str = "P") -> FinitePreorder:
    n = draw_size(rng, max_points)
    points = point_names(n)
    density = rng.random()
    pairs = [
        (points[x], points[y])
        for x in range(n)
        for y in range(n)
        if x != y and rng.random() < density
    ]
    return preorder_from_pairs(points, pairs, name)


def generate_topology(rng: np.random.Generator, max_points: int, name: str = "T") -> FiniteTopology:
    # finite topologies are exactly the Alexandroff topologies of their specialization orders
    return alexandroff_top(generate_preorder(rng, max_points, name))


def generate_map(rng: np.random.Generator, source: FiniteSpace, target: FiniteSpace) -> SpaceMap:
    """A nonexpansive map, falling back to a constant map."""
    for _ in range(MAP_ATTEMPTS):
        fmap = SpaceMap(
            source, target, tuple(int(v) for v in rng.integers(target.size, size=source.size))
        )
        if check_nonexpansive(fmap):
            return fmap
    return SpaceMap(source, target, (int(rng.integers(target.size)),) * source.size)


def generate_net(
    rng: np.random.Generator, space: FiniteSpace, max_cycle: int = 4, max_preperiod: int = 2
) -> NetSpec:
    pre = int(rng.integers(max_preperiod + 1))
    cyc = int(rng.integers(1, max_cycle + 1))
    return NetSpec(
        space,
        tuple(int(v) for v in rng.integers(space.size, size=pre)),
        tuple(int(v) for v in rng.integers(space.size, size=cyc)),
        "N",
    )


def generate_clique_net(rng: np.random.Generator, space: FiniteSpace, clique: Sequence[int]) -> NetSpec:
    """A forward Cauchy net recurring on the given zero-clique."""
    pre = int(rng.integers(3))
    cyc = int(rng.integers(1, 4))
    return NetSpec(
        space,
        tuple(int(v) for v in rng.integers(space.size, size=pre)),
        tuple(int(clique[int(k)]) for k in rng.integers(len(clique), size=cyc)),
        "N",
    )


def mutate_space(rng: np.random.Generator, space: FiniteSpace) -> FiniteSpace:
    """Break a validated space by one entry: a triangle where possible, reflexivity otherwise."""
    n = space.size
    d = [list(row) for row in space.dist]
    candidates: List[Tuple[int, int]] = [
        (x, z)
        for x in range(n)
        for z in range(n)
        if x != z
        and any(y not in (x, z) and not (d[x][y] + d[y][z]).is_infinite for y in range(n))
    ]
    if candidates:
        x, z = candidates[int(rng.integers(len(candidates)))]
        d[x][z] = INF
    else:
        x = int(rng.integers(n))
        d[x][x] = ExtVal(1)
    return unchecked_space(space.points, d, space.name)
