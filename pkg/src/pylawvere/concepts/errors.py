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
"""Errors and violation records raised by the structure validators and constructions."""

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple


@dataclass(frozen=True)
class ReflexivityViolation:
    x: str
    value: str

    def __str__(self) -> str:
        return f"d({self.x},{self.x}) = {self.value} instead of 0"


@dataclass(frozen=True)
class TriangleViolation:
    x: str
    y: str
    z: str
    dxy: str
    dyz: str
    dxz: str

    def __str__(self) -> str:
        return (
            f"d({self.x},{self.y}) + d({self.y},{self.z}) = {self.dxy} + {self.dyz}"
            f" < d({self.x},{self.z}) = {self.dxz}"
        )


@dataclass(frozen=True)
class AxiomViolation:
    """An axiom id such as A1 or C3 with the instance that breaks it."""

    axiom: str
    witness: Tuple[Any, ...]

    def __str__(self) -> str:
        return f"({self.axiom}) fails at {self.witness}"


class LawvereError(ValueError):
    pass


class InvalidStructureError(LawvereError):
    """A candidate space, approach table, preorder or topology violates its axioms."""

    def __init__(self, kind: str, violations: Sequence[Any]):
        self.kind = kind
        self.violations: List[Any] = list(violations)
        super().__init__(
            f"{kind} has {len(self.violations)} axiom violation(s), first: "
            f"{self.violations[0] if self.violations else 'none'} !"
        )


class WeightLawViolation(LawvereError):
    def __init__(self, kind: str, pairs: Sequence[Tuple[str, str]]):
        self.kind = kind
        self.pairs = list(pairs)
        super().__init__(f"{kind} law fails at pairs {self.pairs} !")


class NotNonexpansive(LawvereError):
    pass


class NotRegular(LawvereError):
    pass


class InfimumNotZero(LawvereError):
    pass


class NotForwardCauchy(LawvereError):
    pass


class TargetNotSober(LawvereError):
    pass


class NotContraction(LawvereError):
    pass


class NotClosed(LawvereError):
    pass


class EmptySubset(LawvereError):
    pass


class UnclassifiableDescription(LawvereError):
    pass


class StructureFileError(LawvereError):
    def __init__(self, message: str, line_no: int = 0):
        self.line_no = line_no
        where = f"line {line_no}: " if line_no > 0 else ""
        super().__init__(f"{where}{message}")


class ConsistencyError(LawvereError):
    """Two computations that must agree (a reduction and its cross-check) disagree."""
