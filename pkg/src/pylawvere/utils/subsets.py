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
"""Subsets of a finite carrier as integer bitmasks over the declared point order."""

from typing import List, Sequence


def full_mask(n: int) -> int:
    return (1 << n) - 1


def all_masks(n: int) -> range:
    return range(1 << n)


def members(mask: int) -> List[int]:
    out: List[int] = []
    idx = 0
    while mask:
        if mask & 1:
            out.append(idx)
        mask >>= 1
        idx += 1
    return out


def mask_of(indices: Sequence[int]) -> int:
    mask = 0
    for idx in indices:
        mask |= 1 << idx
    return mask


def mask_of_names(points: Sequence[str], names: Sequence[str]) -> int:
    lookup = {point: idx for idx, point in enumerate(points)}
    mask = 0
    for name in names:
        if name not in lookup:
            raise KeyError(f"{name} is not a point of {list(points)} !")
        mask |= 1 << lookup[name]
    return mask


def names_of(points: Sequence[str], mask: int) -> List[str]:
    return [points[idx] for idx in members(mask)]


def format_subset(points: Sequence[str], mask: int) -> str:
    return "{" + " ".join(names_of(points, mask)) + "}"


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0
