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
"""Emit structures as stanzas of the line-oriented structure file format.

The output of these functions is read back by parsers.structure_file, which is
how failing property-law cases become replayable counterexample files.
"""

from typing import Iterable, Mapping, Sequence, Union

from pylawvere.concepts.approach import (
    ApproachMap,
    ApproachTable,
    FiniteApproach,
    validate_approach,
)
from pylawvere.concepts.extarith import ExtVal
from pylawvere.concepts.ordtop import FinitePreorder, FiniteTopology
from pylawvere.concepts.space import FiniteSpace, SpaceMap
from pylawvere.methods.halfline import format_sequence
from pylawvere.utils.interpret_boolean import format_flag
from pylawvere.utils.subsets import all_masks, format_subset


def format_space(space: FiniteSpace, name: str = "") -> str:
    lines = [f"space {name or space.name or 'X'}", "points " + " ".join(space.points)]
    for x, px in enumerate(space.points):
        for y, py in enumerate(space.points):
            if x != y or space.dist[x][y] != 0:
                lines.append(f"dist {px} {py} {space.dist[x][y]}")
    return "\n".join(lines)


def _assignments(points: Sequence[str], values: Sequence[ExtVal]) -> str:
    return " ".join(f"{p}={v}" for p, v in zip(points, values))


def format_weight(name: str, points: Sequence[str], values: Sequence[ExtVal]) -> str:
    return f"weight {name} {_assignments(points, values)}"


def format_coweight(name: str, points: Sequence[str], values: Sequence[ExtVal]) -> str:
    return f"coweight {name} {_assignments(points, values)}"


def format_approach(space: Union[FiniteApproach, ApproachTable], name: str = "") -> str:
    """Singleton lines for a validated space, every nonempty subset for a raw table."""
    carrier = space.carrier
    lines = [f"approach {name or space.name or 'A'}", "points " + " ".join(carrier)]
    for x, px in enumerate(carrier):
        if isinstance(space, FiniteApproach):
            for y, py in enumerate(carrier):
                if x != y or space.singletons[x][y] != 0:
                    lines.append(f"delta {px} {{{py}}} {space.singletons[x][y]}")
        else:
            for mask in all_masks(len(carrier)):
                lines.append(f"delta {px} {format_subset(carrier, mask)} {space.table[x][mask]}")
    return "\n".join(lines)


def format_order(order: FinitePreorder, name: str = "") -> str:
    lines = [f"order {name or order.name or 'P'}", "points " + " ".join(order.points)]
    for x, px in enumerate(order.points):
        for y, py in enumerate(order.points):
            if x != y and order.leq[x, y]:
                lines.append(f"leq {px} {py}")
    return "\n".join(lines)


def format_topology(top: FiniteTopology, name: str = "") -> str:
    lines = [f"topology {name or top.name or 'T'}", "points " + " ".join(top.points)]
    for x, px in enumerate(top.points):
        lines.append(f"closure {px} {format_subset(top.points, top.closures[x])}")
    return "\n".join(lines)


def format_net(name: str, points: Sequence[str], preperiod: Sequence[int], cycle: Sequence[int]) -> str:
    tokens = ["net", name, "pre"] + [points[i] for i in preperiod]
    tokens += ["cycle"] + [points[i] for i in cycle]
    return " ".join(tokens)


def format_map(
    name: str, fmap: Union[SpaceMap, ApproachMap], source_name: str, target_name: str
) -> str:
    if isinstance(fmap, SpaceMap):
        src, trg = fmap.source.points, fmap.target.points
    else:
        src, trg = fmap.source.carrier, fmap.target.carrier
    pairs = " ".join(f"{p}={trg[q]}" for p, q in zip(src, fmap.assignment))
    return f"map {name} {source_name} {target_name} {pairs}"


def format_value(name: str, value: ExtVal) -> str:
    return f"value {name} {value}"


def format_seq(name: str, description: str) -> str:
    return f"seq {name} {description}"


def format_probe(name: str, x: ExtVal, sup: ExtVal, contains_infinity: bool, nonempty: bool) -> str:
    return (
        f"probe {name} x={x} sup={sup} contains_inf={format_flag(contains_infinity)}"
        f" nonempty={format_flag(nonempty)}"
    )


def join_stanzas(stanzas: Iterable[str]) -> str:
    return "\n\n".join(stanza for stanza in stanzas if stanza) + "\n"


def _name_of(entries: Mapping[str, object], target: object, kind: str) -> str:
    for name, entry in entries.items():
        if entry == target:
            return name
    raise ValueError(f"no {kind} of the template matches the map end !")


def _approach_entries(template: Mapping[str, Mapping[str, object]]) -> dict:
    out = {}
    for name, entry in template.get("approach", {}).items():
        if isinstance(entry, ApproachTable):
            entry = validate_approach(entry.carrier, entry.table, entry.name)
        out[name] = entry
    return out


def format_template(template: Mapping[str, Mapping[str, object]]) -> str:
    """Every stanza of a parsed or generated template, vectors and nets after their owners."""
    stanzas = []
    vectors = {kind: template.get(kind, {}) for kind in ("weight", "coweight")}
    for kind, formatter in (("space", format_space), ("approach", format_approach)):
        for name, owner in template.get(kind, {}).items():
            lines = [formatter(owner, name)]
            points = owner.points if kind == "space" else owner.carrier
            for vkind, entries in vectors.items():
                for vname, entry in entries.items():
                    if entry.owner_kind == kind and entry.owner == name:
                        fmt = format_weight if vkind == "weight" else format_coweight
                        lines.append(fmt(vname, points, entry.values))
            if kind == "space":
                for nname, net in template.get("net", {}).items():
                    if _name_of(template["space"], net.space, "space") == name:
                        lines.append(format_net(nname, points, net.preperiod, net.cycle))
            stanzas.append("\n".join(lines))
    for name, order in template.get("order", {}).items():
        stanzas.append(format_order(order, name))
    for name, top in template.get("topology", {}).items():
        stanzas.append(format_topology(top, name))
    for name, fmap in template.get("map", {}).items():
        if isinstance(fmap, SpaceMap):
            ends = template["space"]
        else:
            ends = _approach_entries(template)
        stanzas.append(
            format_map(
                name, fmap, _name_of(ends, fmap.source, "space"), _name_of(ends, fmap.target, "space")
            )
        )
    singles = [format_value(name, value) for name, value in template.get("value", {}).items()]
    singles += [format_seq(name, format_sequence(seq)) for name, seq in template.get("seq", {}).items()]
    singles += [
        format_probe(name, x, subset.sup, subset.contains_infinity, subset.nonempty)
        for name, (x, subset) in template.get("probe", {}).items()
    ]
    stanzas.append("\n".join(singles))
    return join_stanzas(stanzas)
