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
"""Finite approach spaces: axioms, regular functions, reconstruction, contractions."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from pylawvere.concepts.errors import (
    AxiomViolation,
    ConsistencyError,
    InvalidStructureError,
    NotClosed,
)
from pylawvere.concepts.extarith import INF, ZERO, ExtLike, ExtVal, as_extval, ext_max, ext_min
from pylawvere.concepts.space import FiniteSpace, validate
from pylawvere.utils.subsets import all_masks, format_subset, members

Table = List[List[ExtVal]]


@dataclass(frozen=True)
class FiniteApproach:
    """An approach distance on a finite carrier.

    Only delta(x, {y}) is stored; delta(x, A) for a nonempty A is the minimum
    over its singletons and delta(x, {}) is inf. Instances are produced by
    validate_approach, which checks that a full table really collapses.
    """

    carrier: Tuple[str, ...]
    singletons: Tuple[Tuple[ExtVal, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index(self, point: str) -> int:
        return self.carrier.index(point)

    def delta(self, x: int, mask: int) -> ExtVal:
        return ext_min(self.singletons[x][a] for a in members(mask))

    def table(self) -> Table:
        return [[self.delta(x, mask) for mask in all_masks(self.size)] for x in range(self.size)]


@dataclass(frozen=True)
class ApproachTable:
    """A raw, possibly invalid, full approach table as read from a file."""

    carrier: Tuple[str, ...]
    table: Tuple[Tuple[ExtVal, ...], ...]
    name: str = ""


@dataclass(frozen=True)
class ApproachMap:
    source: FiniteApproach
    target: FiniteApproach
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.size or not all(
            0 <= idx < self.target.size for idx in self.assignment
        ):
            raise ValueError("approach map is not a total map between the carriers !")

    def image_mask(self, mask: int) -> int:
        out = 0
        for a in members(mask):
            out |= 1 << self.assignment[a]
        return out


@dataclass(frozen=True)
class ContractionReport:
    contraction: bool
    witness: Optional[str] = None


def _coerce_table(carrier: Sequence[str], table: Sequence[Sequence[ExtLike]]) -> Table:
    n = len(carrier)
    if len(set(carrier)) != n:
        raise ValueError(f"carrier {list(carrier)} has repeated points !")
    if len(table) != n or any(len(row) != 1 << n for row in table):
        raise ValueError(f"approach table must have {n} rows of {1 << n} subsets !")
    return [[as_extval(value) for value in row] for row in table]


def _subset_sups(n: int, column: Sequence[ExtVal]) -> List[ExtVal]:
    """sup over b in B of column[b] for every mask B (empty sup is 0)."""
    sups = [ZERO] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = sups[mask ^ low]
        value = column[low.bit_length() - 1]
        sups[mask] = value if rest < value else rest
    return sups


def a1_a3_violations(carrier: Sequence[str], table: Table) -> List[AxiomViolation]:
    n = len(carrier)
    violations: List[AxiomViolation] = []
    for x in range(n):
        if table[x][1 << x] != ZERO:
            violations.append(AxiomViolation("A1", (carrier[x],)))
        if table[x][0] != INF:
            violations.append(AxiomViolation("A2", (carrier[x],)))
        for mask in range(1, 1 << n):
            # on a finite carrier (A3) amounts to the singleton collapse
            expected = ext_min(table[x][1 << a] for a in members(mask))
            if table[x][mask] != expected:
                violations.append(
                    AxiomViolation("A3", (carrier[x], format_subset(carrier, mask)))
                )
    return violations


def a4_violations(carrier: Sequence[str], table: Table) -> List[AxiomViolation]:
    """delta(x,A) <= delta(x,B) + sup_{b in B} delta(b,A) over all x, A, B."""
    n = len(carrier)
    violations: List[AxiomViolation] = []
    for amask in all_masks(n):
        sups = _subset_sups(n, [table[b][amask] for b in range(n)])
        for x in range(n):
            lhs = table[x][amask]
            if lhs == ZERO:
                continue
            for bmask in all_masks(n):
                if table[x][bmask] + sups[bmask] < lhs:
                    violations.append(
                        AxiomViolation(
                            "A4",
                            (
                                carrier[x],
                                format_subset(carrier, amask),
                                format_subset(carrier, bmask),
                            ),
                        )
                    )
    return violations


def a4prime_violations(carrier: Sequence[str], table: Table) -> List[AxiomViolation]:
    """delta(x,A) <= delta(x,A^eps) + eps with A^eps = {y : delta(y,A) <= eps}.

    A^eps only changes when eps crosses a value of the table, and between
    two such values the right hand side grows with eps, so probing eps at the
    occurring values plus 0 and inf is exhaustive.
    """
    n = len(carrier)
    probes = sorted({value for row in table for value in row} | {ZERO, INF})
    violations: List[AxiomViolation] = []
    for amask in all_masks(n):
        for eps in probes:
            widened = 0
            for y in range(n):
                if table[y][amask] <= eps:
                    widened |= 1 << y
            for x in range(n):
                if table[x][widened] + eps < table[x][amask]:
                    violations.append(
                        AxiomViolation(
                            "A4'", (carrier[x], format_subset(carrier, amask), str(eps))
                        )
                    )
    return violations


def approach_violations(
    carrier: Sequence[str], table: Sequence[Sequence[ExtLike]]
) -> List[AxiomViolation]:
    full = _coerce_table(carrier, table)
    violations = a1_a3_violations(carrier, full)
    if violations:
        return violations + a4_violations(carrier, full)
    # under (A3) the table collapses and (A4) is the singleton triangle inequality
    n = len(carrier)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if full[x][1 << y] + full[y][1 << z] < full[x][1 << z]:
                    violations.append(
                        AxiomViolation(
                            "A4", (carrier[x], "{" + carrier[z] + "}", "{" + carrier[y] + "}")
                        )
                    )
    return violations


def validate_approach(
    carrier: Sequence[str], table: Sequence[Sequence[ExtLike]], name: str = ""
) -> FiniteApproach:
    violations = approach_violations(carrier, table)
    if violations:
        raise InvalidStructureError(f"approach {name}".strip(), violations)
    full = _coerce_table(carrier, table)
    n = len(carrier)
    return FiniteApproach(
        tuple(carrier),
        tuple(tuple(full[x][1 << y] for y in range(n)) for x in range(n)),
        name,
    )


def check_a4prime(space) -> bool:
    """(A4') on a FiniteApproach or an ApproachTable."""
    if isinstance(space, FiniteApproach):
        return not a4prime_violations(space.carrier, space.table())
    return not a4prime_violations(space.carrier, _coerce_table(space.carrier, space.table))


def collapse_table(carrier: Sequence[str], singletons: Sequence[Sequence[ExtLike]]) -> Table:
    n = len(carrier)
    single = [[as_extval(value) for value in row] for row in singletons]
    return [
        [ext_min(single[x][a] for a in members(mask)) for mask in all_masks(n)]
        for x in range(n)
    ]


def alexandroff(space: FiniteSpace) -> FiniteApproach:
    """delta(x, A) = min_{a in A} d(x, a), inf for the empty set."""
    return validate_approach(
        space.points, collapse_table(space.points, space.dist), space.name
    )


def specialization(space: FiniteApproach) -> FiniteSpace:
    """The metric (x, y) -> delta(x, {y})."""
    return validate(space.carrier, space.singletons, space.name)


def is_regular(space: FiniteApproach, raw: Sequence[ExtLike]) -> bool:
    """delta(x, A) >= phi(x) (-) sup phi(A) for every point and subset."""
    if len(raw) != space.size:
        raise ValueError(f"vector does not match the {space.size} points !")
    phi = [as_extval(value) for value in raw]
    sups = _subset_sups(space.size, phi)
    for mask in all_masks(space.size):
        for x in range(space.size):
            if space.delta(x, mask) < phi[x] - sups[mask]:
                return False
    return True


def regular_closure(
    carrier: Sequence[str], seed: Sequence[Sequence[ExtLike]]
) -> List[Tuple[ExtVal, ...]]:
    """Close a seed under pointwise max and min and add the constants 0 and inf."""
    n = len(carrier)
    known = {tuple(as_extval(value) for value in vec) for vec in seed}
    known.add(tuple(ZERO for _ in range(n)))
    known.add(tuple(INF for _ in range(n)))
    frontier = list(known)
    while frontier:
        fresh = []
        for phi in frontier:
            for psi in list(known):
                for combined in (
                    tuple(ext_max(pair) for pair in zip(phi, psi)),
                    tuple(ext_min(pair) for pair in zip(phi, psi)),
                ):
                    if combined not in known:
                        known.add(combined)
                        fresh.append(combined)
        frontier = fresh
    return sorted(known, key=list)


def _closure_gap(n: int, family: set) -> Optional[str]:
    zero = tuple(ZERO for _ in range(n))
    top = tuple(INF for _ in range(n))
    # phi + inf and phi (-) inf are the constants inf and 0
    if family and top not in family:
        return "missing the constant inf (phi + inf)"
    if family and zero not in family:
        return "missing the constant 0 (phi - inf)"
    for phi in family:
        for psi in family:
            if tuple(ext_max(pair) for pair in zip(phi, psi)) not in family:
                return f"max of {phi} and {psi} is missing"
            if tuple(ext_min(pair) for pair in zip(phi, psi)) not in family:
                return f"min of {phi} and {psi} is missing"
    return None


def reconstruct_delta(
    carrier: Sequence[str], regular_set: Sequence[Sequence[ExtLike]], name: str = ""
) -> FiniteApproach:
    """delta(x, A) = sup{phi(x) | phi in S, phi vanishes on A}.

    The empty family stands for its closure, the two constants, and gives the
    indiscrete distance: 0 on nonempty subsets, inf on the empty one.
    """
    n = len(carrier)
    family = {tuple(as_extval(value) for value in vec) for vec in regular_set}
    if any(len(vec) != n for vec in family):
        raise ValueError(f"regular functions must have {n} values !")
    if not family:
        family = {tuple(ZERO for _ in range(n)), tuple(INF for _ in range(n))}
    gap = _closure_gap(n, family)
    if gap is not None:
        raise NotClosed(f"regular family is not closed: {gap} !")
    table = [
        [
            ext_max(
                phi[x]
                for phi in family
                if all(phi[a] == ZERO for a in members(mask))
            )
            for mask in all_masks(n)
        ]
        for x in range(n)
    ]
    return validate_approach(carrier, table, name)


def contraction_witness_direct(fmap: ApproachMap) -> Optional[str]:
    src, trg = fmap.source, fmap.target
    for mask in all_masks(src.size):
        image = fmap.image_mask(mask)
        for x in range(src.size):
            if src.delta(x, mask) < trg.delta(fmap.assignment[x], image):
                return f"delta({src.carrier[x]}, {format_subset(src.carrier, mask)})"
    return None


def contraction_witness_regular(fmap: ApproachMap) -> Optional[str]:
    src, trg = fmap.source, fmap.target
    for bmask in all_masks(trg.size):
        composite = [trg.delta(fmap.assignment[x], bmask) for x in range(src.size)]
        if not is_regular(src, composite):
            return f"rho(-, {format_subset(trg.carrier, bmask)}) o f is not regular"
    return None


def is_contraction(fmap: ApproachMap) -> ContractionReport:
    direct = contraction_witness_direct(fmap)
    regular = contraction_witness_regular(fmap)
    if (direct is None) != (regular is None):
        raise ConsistencyError(
            f"contraction criteria disagree: direct {direct}, regular {regular} !"
        )
    return ContractionReport(direct is None, direct)


def regular_generators(space: FiniteApproach) -> List[Tuple[ExtVal, ...]]:
    """delta(-, A) for every subset A."""
    return [
        tuple(space.delta(x, mask) for x in range(space.size))
        for mask in all_masks(space.size)
    ]
