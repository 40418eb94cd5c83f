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
"""Finite quasi-metric (Lawvere metric) spaces, derived spaces and maps between them."""

from dataclasses import dataclass, field
from typing import List, Mapping, Sequence, Tuple

from pylawvere.concepts.errors import (
    ConsistencyError,
    InvalidStructureError,
    ReflexivityViolation,
    TriangleViolation,
)
from pylawvere.concepts.extarith import ZERO, ExtLike, ExtVal, as_extval, ext_max

Matrix = Tuple[Tuple[ExtVal, ...], ...]


@dataclass(frozen=True)
class FiniteSpace:
    """A finite carrier with an exact distance matrix, indexed in declaration order."""

    points: Tuple[str, ...]
    dist: Matrix
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def index(self, point: str) -> int:
        try:
            return self.points.index(point)
        except ValueError as exc:
            raise KeyError(f"{point} is not a point of space {self.name} !") from exc

    def d(self, x: str, y: str) -> ExtVal:
        return self.dist[self.index(x)][self.index(y)]

    def row(self, i: int) -> Tuple[ExtVal, ...]:
        return self.dist[i]

    def column(self, j: int) -> Tuple[ExtVal, ...]:
        return tuple(row[j] for row in self.dist)


@dataclass(frozen=True)
class SpaceFlags:
    symmetric: bool
    separated: bool
    finitary: bool


@dataclass(frozen=True)
class SpaceMap:
    """A total map between finite spaces, stored as target indices per source point."""

    source: FiniteSpace
    target: FiniteSpace
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.size:
            raise ValueError(
                f"map assigns {len(self.assignment)} images for {self.source.size} points !"
            )
        for idx in self.assignment:
            if not 0 <= idx < self.target.size:
                raise ValueError(f"map image index {idx} is outside the target !")

    @classmethod
    def from_names(
        cls, source: FiniteSpace, target: FiniteSpace, mapping: Mapping[str, str]
    ) -> "SpaceMap":
        missing = [point for point in source.points if point not in mapping]
        if missing:
            raise ValueError(f"map is not total, no image for {missing} !")
        return cls(
            source, target, tuple(target.index(mapping[p]) for p in source.points)
        )

    def image(self, point: str) -> str:
        return self.target.points[self.assignment[self.source.index(point)]]


def _as_matrix(points: Sequence[str], matrix: Sequence[Sequence[ExtLike]]) -> Matrix:
    n = len(points)
    if len(set(points)) != n:
        raise ValueError(f"point identifiers {list(points)} are not distinct !")
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"distance matrix does not match {n} points !")
    return tuple(tuple(as_extval(value) for value in row) for row in matrix)


def find_violations(points: Sequence[str], matrix: Sequence[Sequence[ExtLike]]) -> list:
    """Every diagonal entry and triple that breaks reflexivity or the triangle inequality."""
    dist = _as_matrix(points, matrix)
    n = len(points)
    violations: list = []
    for x in range(n):
        if dist[x][x] != ZERO:
            violations.append(ReflexivityViolation(points[x], str(dist[x][x])))
    for x in range(n):
        for y in range(n):
            if y == x:
                continue
            for z in range(n):
                if z == y:
                    continue
                if dist[x][y] + dist[y][z] < dist[x][z]:
                    violations.append(
                        TriangleViolation(
                            points[x],
                            points[y],
                            points[z],
                            str(dist[x][y]),
                            str(dist[y][z]),
                            str(dist[x][z]),
                        )
                    )
    return violations


def validate(
    points: Sequence[str], matrix: Sequence[Sequence[ExtLike]], name: str = ""
) -> FiniteSpace:
    violations = find_violations(points, matrix)
    if violations:
        raise InvalidStructureError(f"space {name}".strip(), violations)
    return FiniteSpace(tuple(points), _as_matrix(points, matrix), name)


def unchecked_space(
    points: Sequence[str], matrix: Sequence[Sequence[ExtLike]], name: str = ""
) -> FiniteSpace:
    """Build a space without checking the axioms, used for mutants."""
    return FiniteSpace(tuple(points), _as_matrix(points, matrix), name)


def classify(space: FiniteSpace) -> SpaceFlags:
    n = space.size
    d = space.dist
    symmetric = all(d[x][y] == d[y][x] for x in range(n) for y in range(x + 1, n))
    separated = not any(
        d[x][y] == ZERO and d[y][x] == ZERO for x in range(n) for y in range(x + 1, n)
    )
    finitary = not any(d[x][y].is_infinite for x in range(n) for y in range(n))
    return SpaceFlags(symmetric, separated, finitary)


def opposite(space: FiniteSpace) -> FiniteSpace:
    n = space.size
    return validate(
        space.points,
        [[space.dist[y][x] for y in range(n)] for x in range(n)],
        f"{space.name}.op" if space.name else "",
    )


def symmetrization(space: FiniteSpace) -> FiniteSpace:
    n = space.size
    return validate(
        space.points,
        [[ext_max((space.dist[x][y], space.dist[y][x])) for y in range(n)] for x in range(n)],
        f"{space.name}.sym" if space.name else "",
    )


def zero_cliques(space: FiniteSpace) -> List[Tuple[int, ...]]:
    """Classes of the relation d(x,y) = d(y,x) = 0, ordered by their first member."""
    n = space.size
    d = space.dist

    def related(x: int, y: int) -> bool:
        return d[x][y] == ZERO and d[y][x] == ZERO

    owner = [-1] * n
    classes: List[Tuple[int, ...]] = []
    for x in range(n):
        if owner[x] >= 0:
            continue
        members = tuple(y for y in range(n) if related(x, y))
        for y in members:
            if owner[y] >= 0:
                raise ConsistencyError(
                    f"zero relation is not transitive at {space.points[x]}, {space.points[y]} !"
                )
            owner[y] = len(classes)
        for y in members:
            for z in members:
                if not related(y, z):
                    raise ConsistencyError(
                        f"zero relation is not transitive at {space.points[y]}, {space.points[z]} !"
                    )
        classes.append(members)
    return classes


def clique_name(points: Sequence[str], members: Sequence[int]) -> str:
    return "~".join(points[idx] for idx in members)


def separated_quotient(space: FiniteSpace) -> Tuple[FiniteSpace, SpaceMap]:
    classes = zero_cliques(space)
    d = space.dist
    for cls_x in classes:
        for cls_y in classes:
            values = {d[x][y] for x in cls_x for y in cls_y}
            if len(values) != 1:
                raise ConsistencyError(
                    f"quotient distance between {clique_name(space.points, cls_x)} and "
                    f"{clique_name(space.points, cls_y)} is not well defined !"
                )
    quotient = validate(
        [clique_name(space.points, cls) for cls in classes],
        [[d[cx[0]][cy[0]] for cy in classes] for cx in classes],
        f"{space.name}.sep" if space.name else "",
    )
    owner = [0] * space.size
    for k, cls in enumerate(classes):
        for x in cls:
            owner[x] = k
    return quotient, SpaceMap(space, quotient, tuple(owner))


def identity_map(space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.size)))


def nonexpansive_violations(fmap: SpaceMap) -> List[Tuple[str, str]]:
    src, trg, f = fmap.source, fmap.target, fmap.assignment
    return [
        (src.points[x], src.points[y])
        for x in range(src.size)
        for y in range(src.size)
        if src.dist[x][y] < trg.dist[f[x]][f[y]]
    ]


def check_nonexpansive(fmap: SpaceMap) -> bool:
    return not nonexpansive_violations(fmap)


def check_isometric(fmap: SpaceMap) -> bool:
    src, trg, f = fmap.source, fmap.target, fmap.assignment
    return all(
        src.dist[x][y] == trg.dist[f[x]][f[y]]
        for x in range(src.size)
        for y in range(src.size)
    )


def min_plus_closure(matrix: Sequence[Sequence[ExtLike]]) -> List[List[ExtVal]]:
    """Floyd-Warshall relaxation over ExtVal with the diagonal forced to 0."""
    n = len(matrix)
    closed = [[as_extval(value) for value in row] for row in matrix]
    for x in range(n):
        closed[x][x] = ZERO
    for k in range(n):
        for x in range(n):
            dxk = closed[x][k]
            if dxk.is_infinite:
                continue
            for y in range(n):
                via = dxk + closed[k][y]
                if via < closed[x][y]:
                    closed[x][y] = via
    return closed
