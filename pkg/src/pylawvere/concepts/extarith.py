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
"""Exact arithmetic in [0, inf] with the Lawvere conventions inf - inf = 0, inf - a = inf."""

from fractions import Fraction
from functools import total_ordering
from typing import Any, Iterable, Union

INFINITY_TOKEN = "inf"


@total_ordering
class ExtVal:
    """A value of [0, inf]: an exact nonnegative rational or infinity.

    Finite values are held as ``fractions.Fraction`` which keeps numerator and
    denominator in lowest terms with a positive denominator. Infinity is held
    as ``None``. Floats are rejected on purpose, every comparison is exact.
    """

    __slots__ = ("_q",)

    def __init__(self, value: Any = 0):
        if isinstance(value, ExtVal):
            self._q = value._q
        elif isinstance(value, bool):
            raise TypeError(f"ExtVal does not accept bool {value} !")
        elif isinstance(value, (int, Fraction)):
            if value < 0:
                raise ValueError(f"ExtVal {value} is negative !")
            self._q = Fraction(value)
        elif isinstance(value, str):
            self._q = parse_extval(value)._q
        else:
            raise TypeError(
                f"ExtVal cannot be built from {type(value).__name__} {value} !"
            )

    @classmethod
    def infinity(cls) -> "ExtVal":
        obj = cls.__new__(cls)
        obj._q = None
        return obj

    @property
    def is_infinite(self) -> bool:
        return self._q is None

    @property
    def fraction(self) -> Fraction:
        if self._q is None:
            raise ValueError("infinity has no rational value !")
        return self._q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtVal):
            if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
                return self._q is not None and self._q == other
            return NotImplemented
        return self._q == other._q

    def __hash__(self) -> int:
        return hash(INFINITY_TOKEN) if self._q is None else hash(self._q)

    def __lt__(self, other: Any) -> bool:
        other = as_extval(other)
        if self._q is None:
            return False
        if other._q is None:
            return True
        return self._q < other._q

    def __add__(self, other: Any) -> "ExtVal":
        other = as_extval(other)
        if self._q is None or other._q is None:
            return INF
        return _finite(self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ExtVal":
        """Truncated minus ``self (-) other`` = max{0, self - other}."""
        other = as_extval(other)
        if self._q is None:
            return ZERO if other._q is None else INF
        if other._q is None or other._q >= self._q:
            return ZERO
        return _finite(self._q - other._q)

    def __str__(self) -> str:
        if self._q is None:
            return INFINITY_TOKEN
        if self._q.denominator == 1:
            return str(self._q.numerator)
        return f"{self._q.numerator}/{self._q.denominator}"

    def __repr__(self) -> str:
        return f"ExtVal({str(self)!r})"


def _finite(q: Fraction) -> ExtVal:
    obj = ExtVal.__new__(ExtVal)
    obj._q = q
    return obj


INF = ExtVal.infinity()
ZERO = _finite(Fraction(0))

ExtLike = Union[ExtVal, int, Fraction, str]


def parse_extval(text: str) -> ExtVal:
    """Parse ``inf``, an integer literal or ``p/q``."""
    token = text.strip()
    if token == INFINITY_TOKEN:
        return INF
    parts = token.split("/")
    if len(parts) > 2 or not all(_is_digits(part) for part in parts):
        raise ValueError(f"{text!r} is not an ExtVal literal (inf, n or p/q) !")
    numerator = int(parts[0])
    denominator = int(parts[1]) if len(parts) == 2 else 1
    if denominator == 0:
        raise ValueError(f"{text!r} has a zero denominator !")
    return _finite(Fraction(numerator, denominator))


def _is_digits(part: str) -> bool:
    # rejects signs, decimal points and exponents
    return part.isascii() and part.isdigit()


def as_extval(value: ExtLike) -> ExtVal:
    if isinstance(value, ExtVal):
        return value
    return ExtVal(value)


def add(a: ExtLike, b: ExtLike) -> ExtVal:
    return as_extval(a) + as_extval(b)


def truncated_minus(a: ExtLike, b: ExtLike) -> ExtVal:
    """Return d_L(a, b) = b (-) a."""
    return as_extval(b) - as_extval(a)


def dist_l(a: ExtLike, b: ExtLike) -> ExtVal:
    return as_extval(b) - as_extval(a)


def dist_r(a: ExtLike, b: ExtLike) -> ExtVal:
    return as_extval(a) - as_extval(b)


def ext_min(values: Iterable[ExtLike]) -> ExtVal:
    """Minimum; the empty minimum is inf."""
    result = INF
    for value in values:
        value = as_extval(value)
        if value < result:
            result = value
    return result


def ext_max(values: Iterable[ExtLike]) -> ExtVal:
    """Maximum; the empty maximum is 0."""
    result = ZERO
    for value in values:
        value = as_extval(value)
        if result < value:
            result = value
    return result


def compare(a: ExtLike, b: ExtLike) -> int:
    """Return -1, 0 or 1."""
    a, b = as_extval(a), as_extval(b)
    if a == b:
        return 0
    return -1 if a < b else 1
