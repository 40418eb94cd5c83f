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
"""Finite preorders and topologies, the change-of-base functors and their commutative squares."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from pylawvere.concepts.approach import (
    ApproachMap,
    FiniteApproach,
    alexandroff,
    is_contraction,
    specialization,
    validate_approach,
)
from pylawvere.concepts.errors import AxiomViolation, InvalidStructureError
from pylawvere.concepts.extarith import INF, ZERO
from pylawvere.concepts.space import FiniteSpace, validate
from pylawvere.utils.subsets import all_masks, format_subset, is_subset, mask_of, members


class FinitePreorder:
    """Points with a reflexive and transitive relation held as a boolean matrix."""

    def __init__(self, points: Sequence[str], leq: np.ndarray, name: str = ""):
        self.points: Tuple[str, ...] = tuple(points)
        self.leq: np.ndarray = np.array(leq, dtype=bool)
        self.leq.setflags(write=False)
        self.name = name

    @property
    def size(self) -> int:
        return len(self.points)

    def related(self, x: str, y: str) -> bool:
        return bool(self.leq[self.points.index(x), self.points.index(y)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePreorder):
            return NotImplemented
        return self.points == other.points and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.points, self.leq.tobytes()))

    def __repr__(self) -> str:
        pairs = [
            f"{self.points[x]}<={self.points[y]}"
            for x in range(self.size)
            for y in range(self.size)
            if x != y and self.leq[x, y]
        ]
        return f"FinitePreorder({list(self.points)}, {pairs})"


@dataclass(frozen=True)
class FiniteTopology:
    """Closures of singletons; the closure of any set is the union over its points."""

    points: Tuple[str, ...]
    closures: Tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def closure(self, mask: int) -> int:
        out = 0
        for a in members(mask):
            out |= self.closures[a]
        return out

    def closed_sets(self) -> List[int]:
        return [mask for mask in all_masks(self.size) if self.closure(mask) == mask]


@dataclass(frozen=True)
class TopSoberReport:
    sober: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class SquareReport:
    ok: bool
    failures: Tuple[str, ...] = ()


def preorder_violations(points: Sequence[str], leq: np.ndarray) -> List[AxiomViolation]:
    rel = np.asarray(leq, dtype=bool)
    n = len(points)
    if rel.shape != (n, n):
        raise ValueError(f"relation matrix of shape {rel.shape} does not match {n} points !")
    violations = [AxiomViolation("P1", (points[x],)) for x in range(n) if not rel[x, x]]
    composed = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    for x, z in zip(*np.nonzero(composed & ~rel)):
        y = int(np.nonzero(rel[x, :] & rel[:, z])[0][0])
        violations.append(AxiomViolation("P2", (points[x], points[y], points[z])))
    return violations


def validate_preorder(points: Sequence[str], leq: np.ndarray, name: str = "") -> FinitePreorder:
    violations = preorder_violations(points, leq)
    if violations:
        raise InvalidStructureError(f"order {name}".strip(), violations)
    return FinitePreorder(points, leq, name)


def preorder_from_pairs(
    points: Sequence[str], pairs: Sequence[Tuple[str, str]], name: str = ""
) -> FinitePreorder:
    """Reflexive transitive closure of the listed pairs."""
    n = len(points)
    index = {point: idx for idx, point in enumerate(points)}
    rel = np.eye(n, dtype=bool)
    for x, y in pairs:
        rel[index[x], index[y]] = True
    for k in range(n):
        rel |= rel[:, k : k + 1] & rel[k : k + 1, :]
    return validate_preorder(points, rel, name)


def topology_violations(points: Sequence[str], table: Sequence[int]) -> List[AxiomViolation]:
    n = len(points)
    if len(table) != 1 << n:
        raise ValueError(f"closure table must list {1 << n} subsets !")
    violations: List[AxiomViolation] = []
    if table[0] != 0:
        violations.append(AxiomViolation("C2", ("{}",)))
    for mask in all_masks(n):
        if not is_subset(mask, table[mask]):
            violations.append(AxiomViolation("C1", (format_subset(points, mask),)))
        union = 0
        for a in members(mask):
            union |= table[1 << a]
        if mask and table[mask] != union:
            violations.append(AxiomViolation("C3", (format_subset(points, mask),)))
        if table[table[mask]] != table[mask]:
            violations.append(AxiomViolation("C4", (format_subset(points, mask),)))
    return violations


def validate_topology(points: Sequence[str], table: Sequence[int], name: str = "") -> FiniteTopology:
    violations = topology_violations(points, table)
    if violations:
        raise InvalidStructureError(f"topology {name}".strip(), violations)
    return FiniteTopology(tuple(points), tuple(table[1 << x] for x in range(len(points))), name)


def closure_table(points: Sequence[str], closures: Sequence[int]) -> List[int]:
    table = []
    for mask in all_masks(len(points)):
        union = 0
        for a in members(mask):
            union |= closures[a]
        table.append(union)
    return table


def topology_from_singletons(
    points: Sequence[str], closures: Sequence[int], name: str = ""
) -> FiniteTopology:
    return validate_topology(points, closure_table(points, closures), name)


def alexandroff_top(p: FinitePreorder) -> FiniteTopology:
    """Closed sets are the lower sets: cl{x} = {y : y <= x}."""
    closures = [mask_of(np.nonzero(p.leq[:, x])[0].tolist()) for x in range(p.size)]
    return topology_from_singletons(p.points, closures, p.name)


def specialization_order(t: FiniteTopology) -> FinitePreorder:
    """x <= y iff x is in cl{y}."""
    rel = np.array(
        [[bool(t.closures[y] >> x & 1) for y in range(t.size)] for x in range(t.size)],
        dtype=bool,
    ).reshape(t.size, t.size)
    return validate_preorder(t.points, rel, t.name)


def is_sober_top(t: FiniteTopology) -> TopSoberReport:
    closed = t.closed_sets()
    for amask in closed:
        if amask == 0:
            continue
        irreducible = all(
            is_subset(amask, bmask) or is_subset(amask, cmask)
            for bmask in closed
            for cmask in closed
            if is_subset(amask, bmask | cmask)
        )
        if not irreducible:
            continue
        generic = [x for x in range(t.size) if t.closures[x] == amask]
        if len(generic) != 1:
            return TopSoberReport(
                False,
                f"irreducible closed set {format_subset(t.points, amask)} has "
                f"{len(generic)} generic points",
            )
    return TopSoberReport(True)


def omega_ord(p: FinitePreorder) -> FiniteSpace:
    return validate(
        p.points,
        [[ZERO if p.leq[x, y] else INF for y in range(p.size)] for x in range(p.size)],
        p.name,
    )


def omega_top(t: FiniteTopology) -> FiniteApproach:
    return validate_approach(
        t.points,
        [
            [ZERO if t.closure(mask) >> x & 1 else INF for mask in all_masks(t.size)]
            for x in range(t.size)
        ],
        t.name,
    )


def iota_met(s: FiniteSpace) -> FinitePreorder:
    rel = np.array([[value == ZERO for value in row] for row in s.dist], dtype=bool)
    return validate_preorder(s.points, rel.reshape(s.size, s.size), s.name)


def iota_app(a: FiniteApproach) -> FiniteTopology:
    """cl A = {x : delta(x, A) = 0}."""
    table = [
        mask_of([x for x in range(a.size) if a.delta(x, mask) == ZERO])
        for mask in all_masks(a.size)
    ]
    return validate_topology(a.carrier, table, a.name)


def is_directed_complete(p: FinitePreorder) -> bool:
    """Every directed subset has a join (a least upper bound up to equivalence)."""
    n = p.size
    rel = p.leq
    for dmask in range(1, 1 << n):
        chosen = members(dmask)
        directed = all(
            any(rel[x, z] and rel[y, z] for z in chosen) for x in chosen for y in chosen
        )
        if not directed:
            continue
        uppers = [u for u in range(n) if all(rel[x, u] for x in chosen)]
        if not any(all(rel[u, v] for v in uppers) for u in uppers):
            return False
    return True


def square_checks(instance) -> SquareReport:
    """Both change-of-base squares plus the unit and counit of omega -| iota."""
    failures: List[str] = []
    if isinstance(instance, FinitePreorder):
        p = instance
        if omega_top(alexandroff_top(p)).singletons != alexandroff(omega_ord(p)).singletons:
            failures.append("omega(Gamma(p)) differs from Gamma(omega(p))")
        if omega_top(alexandroff_top(p)).table() != alexandroff(omega_ord(p)).table():
            failures.append("omega(Gamma(p)) and Gamma(omega(p)) tables differ")
        if iota_met(omega_ord(p)) != p:
            failures.append("iota(omega(p)) is not p")
        t = alexandroff_top(p)
        if iota_app(omega_top(t)) != t:
            failures.append("iota(omega(t)) is not t")
        if specialization_order(t) != p:
            failures.append("Omega(Gamma(p)) is not p")
    elif isinstance(instance, FiniteApproach):
        a = instance
        if iota_met(specialization(a)) != specialization_order(iota_app(a)):
            failures.append("iota(Omega(a)) differs from Omega(iota(a))")
        t = iota_app(a)
        if iota_app(omega_top(t)) != t:
            failures.append("iota(omega(iota(a))) is not iota(a)")
        counit = ApproachMap(omega_top(t), a, tuple(range(a.size)))
        if not is_contraction(counit).contraction:
            failures.append("identity omega(iota(a)) -> a is not a contraction")
        if alexandroff(specialization(a)) != a:
            failures.append("Gamma(Omega(a)) is not a")
    else:
        raise TypeError(f"square_checks expects a preorder or approach space, got {type(instance).__name__} !")
    return SquareReport(not failures, tuple(failures))
