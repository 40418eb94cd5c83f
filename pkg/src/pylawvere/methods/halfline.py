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
"""Closed-form exemplars on the half line [0, inf].

Covers the Lawvere metrics d_L(a, b) = b (-) a and d_R(a, b) = a (-) b, the
approach distance of the extended half line P and the Alexandroff distance
of d_R. Subsets enter only through (sup, contains inf, nonempty) and sequences
only through finite descriptions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Tuple

from pylawvere.concepts.errors import (
    ConsistencyError,
    EmptySubset,
    NotForwardCauchy,
    UnclassifiableDescription,
)
from pylawvere.concepts.extarith import (
    INF,
    ZERO,
    ExtLike,
    ExtVal,
    as_extval,
    dist_l,
    dist_r,
    ext_max,
    ext_min,
    parse_extval,
)

# points of [0, inf] are plain ExtVal values
HalfLinePoint = ExtVal

METRICS = ("dL", "dR")
SEQUENCE_KINDS = ("const", "affine", "harmonic", "alternating", "divergent")


@dataclass(frozen=True)
class AbstractSubset:
    sup: ExtVal
    contains_infinity: bool
    nonempty: bool

    def __post_init__(self):
        if self.contains_infinity and not self.sup.is_infinite:
            raise ValueError("a subset containing inf has supremum inf !")
        if not self.nonempty and (self.sup != ZERO or self.contains_infinity):
            raise ValueError("the empty subset has supremum 0 and does not contain inf !")

    @classmethod
    def empty(cls) -> "AbstractSubset":
        return cls(ZERO, False, False)

    @classmethod
    def of(cls, values: Iterable[ExtLike]) -> "AbstractSubset":
        points = [as_extval(value) for value in values]
        return cls(ext_max(points), any(p.is_infinite for p in points), bool(points))


def delta_P(x: ExtLike, subset: AbstractSubset) -> ExtVal:
    """x (-) sup A, inf for the empty set."""
    if not subset.nonempty:
        return INF
    return as_extval(x) - subset.sup


def gamma_dR(x: ExtLike, subset: AbstractSubset) -> ExtVal:
    """inf over a in A of d_R(x, a)."""
    x = as_extval(x)
    if not subset.nonempty:
        return INF
    if not x.is_infinite:
        return x - subset.sup
    # inf (-) a = inf for every finite a
    return ZERO if subset.contains_infinity else INF


def p_sobriety_cases(b: ExtLike, subset: AbstractSubset) -> ExtVal:
    """The distance of f(b) to f(A) in the sobrification of ([0, inf), Gamma(d_R)).

    f sends a finite a to d_R(-, a) and inf to the constant 0 weight; the
    distance of f(b) to f(A) splits into three cases.
    """
    if not subset.nonempty:
        raise EmptySubset("the three-case computation needs a nonempty subset !")
    b = as_extval(b)
    if subset.sup.is_infinite:
        value = ZERO
    elif b.is_infinite:
        value = INF
    else:
        value = dist_r(b, subset.sup)
    if value != delta_P(b, subset):
        raise ConsistencyError(f"case value {value} differs from delta_P at b={b} !")
    return value


@dataclass(frozen=True)
class RationalSeq:
    """x_n for n = 1, 2, ...: the prefix values, then a tail given by kind and parameters.

    const:v          x_n = v
    affine:a,b       x_n = a + b n, b >= 0
    harmonic:a,b     x_n = a + b / n
    alternating:a,b  x_n = a, b, a, b, ... from the first tail index
    divergent        nondecreasing and unbounded, the prefix is its nonempty beginning
    """

    kind: str
    prefix: Tuple[ExtVal, ...] = ()
    params: Tuple[Fraction, ...] = ()
    tail_value: ExtVal = ZERO

    def __post_init__(self):
        if self.kind not in SEQUENCE_KINDS:
            raise UnclassifiableDescription(f"unknown sequence kind {self.kind} !")
        start = len(self.prefix) + 1
        if self.kind in ("affine", "harmonic", "alternating"):
            if len(self.params) != 2:
                raise UnclassifiableDescription(f"{self.kind} needs two parameters a,b !")
            a, b = self.params
            if self.kind == "affine" and (b < 0 or a + b * start < 0):
                raise UnclassifiableDescription("affine tail must stay nonnegative !")
            if self.kind == "harmonic" and (a < 0 or a + b / start < 0):
                raise UnclassifiableDescription("harmonic tail must stay nonnegative !")
            if self.kind == "alternating" and (a < 0 or b < 0):
                raise UnclassifiableDescription("alternating values must be nonnegative !")
        if self.kind == "divergent":
            if not self.prefix or any(v.is_infinite for v in self.prefix):
                raise UnclassifiableDescription("divergent tail needs a finite nonempty prefix !")
            if any(b < a for a, b in zip(self.prefix, self.prefix[1:])):
                raise UnclassifiableDescription("divergent tail declared after a decreasing prefix !")

    @property
    def start(self) -> int:
        return len(self.prefix) + 1

    def term(self, n: int) -> ExtVal:
        if n < 1:
            raise ValueError("sequences are indexed from 1 !")
        if n < self.start:
            return self.prefix[n - 1]
        if self.kind == "const":
            return self.tail_value
        if self.kind == "affine":
            return ExtVal(self.params[0] + self.params[1] * n)
        if self.kind == "harmonic":
            return ExtVal(self.params[0] + self.params[1] / n)
        if self.kind == "alternating":
            return ExtVal(self.params[(n - self.start) % 2])
        # a concrete witness for the declared tail: keep climbing by at least 1
        return ExtVal(self.prefix[-1].fraction + (n - len(self.prefix)))

    @property
    def diverges(self) -> bool:
        """Finite terms that grow without bound."""
        return self.kind == "divergent" or (self.kind == "affine" and self.params[1] > 0)

    @property
    def oscillates(self) -> bool:
        """Alternates between two distinct values forever."""
        return self.kind == "alternating" and self.params[0] != self.params[1]

    @property
    def limit(self) -> ExtVal:
        if self.oscillates:
            raise NotForwardCauchy(f"{format_sequence(self)} has no limit !")
        if self.diverges:
            return INF
        if self.kind == "const":
            return self.tail_value
        return ExtVal(self.params[0])

    @property
    def direction(self) -> int:
        """+1 nondecreasing tail, -1 nonincreasing tail, 0 constant tail."""
        if self.diverges:
            return 1
        if self.kind == "harmonic" and self.params[1] != 0:
            return -1 if self.params[1] > 0 else 1
        return 0


def parse_sequence(text: str) -> RationalSeq:
    """Parse ``[v,v,...;]kind[:args]``, for instance ``3,1;const:inf`` or ``affine:0,1``."""
    body = text.strip()
    prefix: Tuple[ExtVal, ...] = ()
    if ";" in body:
        head, body = body.split(";", 1)
        prefix = tuple(parse_extval(token) for token in head.split(",") if token.strip())
    kind, _, args = body.partition(":")
    kind = kind.strip()
    if kind == "const":
        return RationalSeq("const", prefix, (), parse_extval(args))
    if kind in ("affine", "harmonic", "alternating"):
        try:
            params = tuple(Fraction(token.strip()) for token in args.split(","))
        except ValueError as exc:
            raise UnclassifiableDescription(f"cannot read parameters {args!r} !") from exc
        return RationalSeq(kind, prefix, params)
    if kind == "divergent":
        return RationalSeq("divergent", prefix)
    raise UnclassifiableDescription(f"unknown sequence description {text!r} !")


def format_sequence(seq: RationalSeq) -> str:
    head = ",".join(str(v) for v in seq.prefix)
    head = f"{head};" if head else ""
    if seq.kind == "const":
        return f"{head}const:{seq.tail_value}"
    if seq.kind == "divergent":
        return f"{head}divergent"
    return f"{head}{seq.kind}:{seq.params[0]},{seq.params[1]}"


@dataclass(frozen=True)
class SeqClass:
    forward_cauchy: bool
    bicauchy: bool
    kind: str


def _metric(metric: str) -> Callable[[ExtVal, ExtVal], ExtVal]:
    if metric == "dL":
        return dist_l
    if metric == "dR":
        return dist_r
    raise ValueError(f"metric must be one of {METRICS}, not {metric} !")


def classify_seq(seq: RationalSeq, metric: str) -> SeqClass:
    _metric(metric)
    if seq.oscillates:
        # both orders of the two values occur in every tail
        return SeqClass(False, False, "none")
    eventually_infinite = seq.kind == "const" and seq.tail_value.is_infinite
    if not seq.diverges:
        # a finite limit means an ordinary Cauchy sequence, a constant inf tail is trivially Cauchy
        kind = "real-cauchy"
        if eventually_infinite:
            kind = "eventually-constant-infinity" if metric == "dL" else "almost-increasing-divergent"
        return SeqClass(True, True, kind)
    if metric == "dL":
        return SeqClass(False, False, "none")
    return SeqClass(True, False, "almost-increasing-divergent")


def yoneda_limit_seq(seq: RationalSeq, metric: str) -> ExtVal:
    if not classify_seq(seq, metric).forward_cauchy:
        raise NotForwardCauchy(f"{format_sequence(seq)} is not forward Cauchy under {metric} !")
    return seq.limit


def converges_in_symmetrization(seq: RationalSeq) -> bool:
    """|x_n - L| -> 0 for some L in [0, inf], with inf - inf = 0."""
    return not (seq.diverges or seq.oscillates)


def _limit_of_distances(seq: RationalSeq, metric: str, x: ExtVal) -> ExtVal:
    d = _metric(metric)
    if not seq.diverges:
        if seq.kind == "const":
            return d(x, seq.tail_value)
        # finite terms converging to a finite limit, d(x, -) is continuous there
        return d(x, seq.limit)
    if metric == "dL":
        return ZERO if x.is_infinite else INF
    return INF if x.is_infinite else ZERO


def tail_bounds(seq: RationalSeq, metric: str, x: ExtLike, start: int) -> Tuple[ExtVal, ExtVal]:
    """(inf, sup) of d(x, x_n) over n >= start, in closed form."""
    x = as_extval(x)
    d = _metric(metric)
    start = max(start, seq.start)
    if seq.oscillates:
        both = (d(x, seq.term(start)), d(x, seq.term(start + 1)))
        return ext_min(both), ext_max(both)
    first = d(x, seq.term(start))
    lim = _limit_of_distances(seq, metric, x)
    # d_L(x, -) is nondecreasing, d_R(x, -) nonincreasing
    sense = seq.direction * (1 if metric == "dL" else -1)
    if sense > 0:
        return first, lim
    if sense < 0:
        return lim, first
    return first, first


def _eventual_bounds(seq: RationalSeq, metric: str, x: ExtVal) -> Tuple[ExtVal, ExtVal]:
    """What the tail bounds settle to as the start grows."""
    if seq.oscillates:
        return tail_bounds(seq, metric, x, seq.start)
    lim = _limit_of_distances(seq, metric, x)
    return lim, lim


def tail_limits_seq(seq: RationalSeq, metric: str, x: ExtLike) -> Tuple[ExtVal, ExtVal]:
    """(inf-sup, sup-inf) of d(x, x_n).

    Tail sups shrink and tail infs grow with the start, so the inf of the sups
    and the sup of the infs are taken over the bounds at the first two starts
    and the bounds they settle to.
    """
    x = as_extval(x)
    bounds = [tail_bounds(seq, metric, x, seq.start + k) for k in range(2)]
    bounds.append(_eventual_bounds(seq, metric, x))
    return ext_min(high for _, high in bounds), ext_max(low for low, _ in bounds)


def net_weight_seq(seq: RationalSeq, x: ExtLike) -> ExtVal:
    """The weight generated on ([0, inf), d_R): inf-sup of d_R(x, x_n)."""
    if not classify_seq(seq, "dR").forward_cauchy:
        raise NotForwardCauchy(f"{format_sequence(seq)} is not forward Cauchy under dR !")
    return tail_limits_seq(seq, "dR", x)[0]


@dataclass(frozen=True)
class FlatWeightDR:
    """phi_a(x) = x (-) a on [0, inf); a = inf gives the constant 0 weight."""

    a: ExtVal

    def __call__(self, x: ExtLike) -> ExtVal:
        x = as_extval(x)
        if x.is_infinite:
            raise ValueError("the carrier is [0, inf), inf is not a point !")
        return x - self.a

    @property
    def representable(self) -> bool:
        return not self.a.is_infinite

    def generating_sequence(self) -> RationalSeq:
        if self.a.is_infinite:
            return RationalSeq("affine", (), (Fraction(0), Fraction(1)))
        return RationalSeq("const", (), (), self.a)


def flat_weight_dR(a: ExtLike) -> FlatWeightDR:
    return FlatWeightDR(as_extval(a))


def completion_point_of(seq: RationalSeq) -> ExtVal:
    """The point of [0, inf] a forward Cauchy sequence of ([0, inf), d_R) converges to."""
    return yoneda_limit_seq(seq, "dR")


def probe_grid(values: Sequence[ExtLike]) -> Tuple[Tuple[ExtVal, AbstractSubset], ...]:
    """All (x, A) with x and sup A from the values, every legal flag combination."""
    points = [as_extval(v) for v in values]
    grid = []
    for x in points:
        grid.append((x, AbstractSubset.empty()))
        for sup in points:
            grid.append((x, AbstractSubset(sup, False, True)))
            if sup.is_infinite:
                grid.append((x, AbstractSubset(sup, True, True)))
    return tuple(grid)
