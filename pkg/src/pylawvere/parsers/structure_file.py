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
"""Parser for the line-oriented structure file format.

One file may hold several named stanzas. Block stanzas start with a header
line and own the lines that follow until the next header:

    space <name>          points ...   dist p q <v>
    approach <name>       points ...   delta p {q r} <v>
    order <name>          points ...   leq p q
    topology <name>       points ...   closure p {q r}

Single-line stanzas refer to the most recent space (or approach space):

    weight <name> p=<v> ...        coweight <name> p=<v> ...
    net <name> pre p ... cycle q ...
    map <name> <source> <target> p=q ...
    value <name> <v>   seq <name> <description>
    probe <name> x=<v> sup=<v> contains_inf=<flag> nonempty=<flag>
"""

import pathlib
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from pylawvere.concepts.approach import ApproachMap, ApproachTable, validate_approach
from pylawvere.concepts.errors import LawvereError, StructureFileError
from pylawvere.concepts.extarith import INF, ZERO, ExtVal, ext_min, parse_extval
from pylawvere.concepts.ordtop import topology_from_singletons, validate_preorder
from pylawvere.concepts.space import SpaceMap, validate
from pylawvere.methods.completion import NetSpec
from pylawvere.methods.halfline import AbstractSubset, parse_sequence
from pylawvere.utils.get_file_checksum import file_fingerprint
from pylawvere.utils.interpret_boolean import try_interpret_as_boolean
from pylawvere.utils.subsets import all_masks, mask_of_names, members

STANZA_KINDS = (
    "space",
    "approach",
    "order",
    "topology",
    "weight",
    "coweight",
    "net",
    "map",
    "value",
    "seq",
    "probe",
)
BLOCK_KINDS = ("space", "approach", "order", "topology")
TOKEN = re.compile(r"\{[^}]*\}|\S+")


@dataclass(frozen=True)
class VectorEntry:
    """A weight or coweight as written, values in the owner's point order."""

    owner_kind: str
    owner: str
    values: Tuple[ExtVal, ...]


def empty_template() -> Dict[str, Dict[str, Any]]:
    return {kind: {} for kind in STANZA_KINDS}


def _subset_names(token: str, line_no: int) -> List[str]:
    if not (token.startswith("{") and token.endswith("}")):
        raise StructureFileError(f"expected a subset in braces, got {token} !", line_no)
    return token[1:-1].split()


def _value(token: str, line_no: int) -> ExtVal:
    try:
        return parse_extval(token)
    except ValueError as exc:
        raise StructureFileError(str(exc), line_no) from exc


def _assignments(tokens: List[str], line_no: int) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for token in tokens:
        key, sep, val = token.partition("=")
        if not sep or not key or not val:
            raise StructureFileError(f"expected key=value, got {token} !", line_no)
        if key in out:
            raise StructureFileError(f"{key} assigned twice !", line_no)
        out[key] = val
    return out


class _Block:
    def __init__(self, kind: str, name: str, line_no: int):
        self.kind = kind
        self.name = name
        self.line_no = line_no
        self.points: Optional[List[str]] = None
        self.entries: List[Tuple[int, List[str]]] = []

    def index(self, point: str, line_no: int) -> int:
        if self.points is None:
            raise StructureFileError(f"{self.kind} {self.name} uses points before declaring them !", line_no)
        if point not in self.points:
            raise StructureFileError(f"{point} is not a point of {self.kind} {self.name} !", line_no)
        return self.points.index(point)


class StructureFileParser:
    """Read every stanza of a structure file into a template dict keyed by kind and name."""

    def __init__(self, file_path: str = "", verbose: bool = False):
        self.file_path = file_path
        self.verbose = verbose
        self.text = ""
        self.supported = False
        self.check_if_supported()

    def check_if_supported(self):
        self.supported = False
        try:
            with open(self.file_path, "r", encoding="utf-8") as stream:
                self.text = stream.read()
            self.supported = True
        except (FileNotFoundError, IOError):
            print(f"{self.file_path} either FileNotFound or IOError !")

    def parse(self, template: dict) -> dict:
        if self.supported:
            if self.verbose:
                print(f"Parsing {pathlib.Path(self.file_path).name} {file_fingerprint(self.file_path)} ...")
            parse_text(self.text, template)
        return template


def parse_text(text: str, template: Optional[dict] = None) -> dict:
    """Parse structure file text into template, creating it when not given."""
    if template is None:
        template = empty_template()
    for kind in STANZA_KINDS:
        template.setdefault(kind, {})
    block: Optional[_Block] = None
    last_owner: Optional[Tuple[str, str]] = None
    pending: List[Tuple[int, List[str]]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = TOKEN.findall(raw.split("#", 1)[0])
        if not tokens:
            continue
        keyword = tokens[0]
        if keyword in BLOCK_KINDS:
            if len(tokens) != 2:
                raise StructureFileError(f"{keyword} header takes exactly one name !", line_no)
            if block is not None:
                _finish(block, template)
                block = None
            if tokens[1] in template[keyword]:
                raise StructureFileError(f"{keyword} {tokens[1]} defined twice !", line_no)
            block = _Block(keyword, tokens[1], line_no)
            if keyword in ("space", "approach"):
                last_owner = (keyword, tokens[1])
        elif keyword in ("points", "dist", "delta", "leq", "closure"):
            if block is None:
                raise StructureFileError(f"{keyword} line outside of a stanza !", line_no)
            if keyword == "points":
                if block.points is not None:
                    raise StructureFileError(f"points declared twice in {block.name} !", line_no)
                if len(set(tokens[1:])) != len(tokens) - 1:
                    raise StructureFileError(f"repeated point in {block.name} !", line_no)
                if any(re.search(r"[={}]", point) for point in tokens[1:]):
                    raise StructureFileError("point names may not contain = { or } !", line_no)
                block.points = tokens[1:]
            else:
                block.entries.append((line_no, tokens))
        elif keyword in ("weight", "coweight", "net"):
            if last_owner is None:
                raise StructureFileError(f"{keyword} before any space !", line_no)
            pending.append((line_no, [*last_owner, *tokens]))
        elif keyword in ("map", "value", "seq", "probe"):
            pending.append((line_no, ["", "", *tokens]))
        else:
            raise StructureFileError(f"unknown keyword {keyword} !", line_no)
    if block is not None:
        _finish(block, template)
    for line_no, tokens in pending:
        _single_line(tokens[0], tokens[1], tokens[2:], line_no, template)
    return template


def _finish(block: _Block, template: dict) -> None:
    if block.points is None:
        raise StructureFileError(f"{block.kind} {block.name} declares no points !", block.line_no)
    expected = {"space": "dist", "approach": "delta", "order": "leq", "topology": "closure"}[block.kind]
    for line_no, tokens in block.entries:
        if tokens[0] != expected:
            raise StructureFileError(f"{tokens[0]} line inside {block.kind} {block.name} !", line_no)
    builder = {
        "space": _build_space,
        "approach": _build_approach,
        "order": _build_order,
        "topology": _build_topology,
    }[block.kind]
    template[block.kind][block.name] = builder(block)


def _build_space(block: _Block):
    points = block.points
    n = len(points)
    matrix: List[List[Optional[ExtVal]]] = [[None] * n for _ in range(n)]
    for line_no, tokens in block.entries:
        if len(tokens) != 4:
            raise StructureFileError("dist lines read: dist p q <value> !", line_no)
        x, y = block.index(tokens[1], line_no), block.index(tokens[2], line_no)
        if matrix[x][y] is not None:
            raise StructureFileError(f"dist {tokens[1]} {tokens[2]} given twice !", line_no)
        matrix[x][y] = _value(tokens[3], line_no)
    for x in range(n):
        if matrix[x][x] is None:
            matrix[x][x] = ZERO
        for y in range(n):
            if matrix[x][y] is None:
                raise StructureFileError(
                    f"space {block.name} misses dist {points[x]} {points[y]} !", block.line_no
                )
    return validate(points, matrix, block.name)


def _build_approach(block: _Block) -> ApproachTable:
    points = block.points
    n = len(points)
    given: Dict[Tuple[int, int], ExtVal] = {}
    for line_no, tokens in block.entries:
        if len(tokens) != 4:
            raise StructureFileError("delta lines read: delta p {q r} <value> !", line_no)
        x = block.index(tokens[1], line_no)
        for name in _subset_names(tokens[2], line_no):
            block.index(name, line_no)
        mask = mask_of_names(points, _subset_names(tokens[2], line_no))
        if (x, mask) in given:
            raise StructureFileError(f"delta {tokens[1]} {tokens[2]} given twice !", line_no)
        given[(x, mask)] = _value(tokens[3], line_no)
    singles = [[ZERO] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if (x, 1 << y) in given:
                singles[x][y] = given[(x, 1 << y)]
            elif x != y:
                raise StructureFileError(
                    f"approach {block.name} misses delta {points[x]} {{{points[y]}}} !", block.line_no
                )
    table = []
    for x in range(n):
        row = []
        for mask in all_masks(n):
            if (x, mask) in given:
                row.append(given[(x, mask)])
            elif mask == 0:
                row.append(INF)
            else:
                row.append(ext_min(singles[x][a] for a in members(mask)))
        table.append(tuple(row))
    return ApproachTable(tuple(points), tuple(table), block.name)


def _build_order(block: _Block):
    n = len(block.points)
    rel = np.eye(n, dtype=bool)
    for line_no, tokens in block.entries:
        if len(tokens) != 3:
            raise StructureFileError("leq lines read: leq p q !", line_no)
        rel[block.index(tokens[1], line_no), block.index(tokens[2], line_no)] = True
    return validate_preorder(block.points, rel, block.name)


def _build_topology(block: _Block):
    points = block.points
    closures = [1 << x for x in range(len(points))]
    seen = set()
    for line_no, tokens in block.entries:
        if len(tokens) != 3:
            raise StructureFileError("closure lines read: closure p {q r} !", line_no)
        x = block.index(tokens[1], line_no)
        if x in seen:
            raise StructureFileError(f"closure of {tokens[1]} given twice !", line_no)
        seen.add(x)
        names = _subset_names(tokens[2], line_no)
        for name in names:
            block.index(name, line_no)
        closures[x] = mask_of_names(points, names)
    return topology_from_singletons(points, closures, block.name)


def _owner_points(template: dict, kind: str, name: str) -> Tuple[str, ...]:
    owner = template[kind][name]
    return owner.points if kind == "space" else owner.carrier


def _single_line(owner_kind: str, owner: str, tokens: List[str], line_no: int, template: dict) -> None:
    keyword = tokens[0]
    if len(tokens) < 2:
        raise StructureFileError(f"{keyword} needs a name !", line_no)
    name = tokens[1]
    if name in template[keyword]:
        raise StructureFileError(f"{keyword} {name} defined twice !", line_no)
    if keyword in ("weight", "coweight"):
        points = _owner_points(template, owner_kind, owner)
        values = _assignments(tokens[2:], line_no)
        if set(values) != set(points):
            raise StructureFileError(
                f"{keyword} {name} must assign every point of {owner} exactly once !", line_no
            )
        template[keyword][name] = VectorEntry(
            owner_kind, owner, tuple(_value(values[p], line_no) for p in points)
        )
    elif keyword == "net":
        if owner_kind != "space":
            raise StructureFileError(f"net {name} must follow a space !", line_no)
        space = template["space"][owner]
        rest = tokens[2:]
        if not rest or rest[0] != "pre" or "cycle" not in rest:
            raise StructureFileError("net lines read: net <name> pre ... cycle ... !", line_no)
        cut = rest.index("cycle")
        try:
            template["net"][name] = NetSpec(
                space,
                tuple(space.index(p) for p in rest[1:cut]),
                tuple(space.index(p) for p in rest[cut + 1 :]),
                name,
            )
        except (KeyError, ValueError) as exc:
            raise StructureFileError(str(exc), line_no) from exc
    elif keyword == "map":
        template["map"][name] = _build_map(name, tokens[2:], line_no, template)
    elif keyword == "value":
        if len(tokens) != 3:
            raise StructureFileError("value lines read: value <name> <v> !", line_no)
        template["value"][name] = _value(tokens[2], line_no)
    elif keyword == "seq":
        try:
            template["seq"][name] = parse_sequence(" ".join(tokens[2:]))
        except LawvereError as exc:
            raise StructureFileError(str(exc), line_no) from exc
    elif keyword == "probe":
        fields = _assignments(tokens[2:], line_no)
        if set(fields) != {"x", "sup", "contains_inf", "nonempty"}:
            raise StructureFileError("probe lines read: probe <name> x= sup= contains_inf= nonempty= !", line_no)
        try:
            subset = AbstractSubset(
                _value(fields["sup"], line_no),
                try_interpret_as_boolean(fields["contains_inf"]),
                try_interpret_as_boolean(fields["nonempty"]),
            )
        except (KeyError, ValueError) as exc:
            raise StructureFileError(str(exc), line_no) from exc
        template["probe"][name] = (_value(fields["x"], line_no), subset)


def _build_map(name: str, tokens: List[str], line_no: int, template: dict):
    if len(tokens) < 2:
        raise StructureFileError("map lines read: map <name> <source> <target> p=q ... !", line_no)
    source, target = tokens[0], tokens[1]
    pairs = _assignments(tokens[2:], line_no)
    for kind in ("space", "approach"):
        if source in template[kind] and target in template[kind]:
            src, trg = template[kind][source], template[kind][target]
            break
    else:
        raise StructureFileError(f"map {name} needs two spaces of the same kind !", line_no)
    src_points = _owner_points(template, kind, source)
    trg_points = _owner_points(template, kind, target)
    if set(pairs) != set(src_points) or not set(pairs.values()) <= set(trg_points):
        raise StructureFileError(f"map {name} is not a total map {source} -> {target} !", line_no)
    assignment = tuple(trg_points.index(pairs[p]) for p in src_points)
    if kind == "space":
        return SpaceMap(src, trg, assignment)
    try:
        return ApproachMap(
            validate_approach(src.carrier, src.table, src.name),
            validate_approach(trg.carrier, trg.table, trg.name),
            assignment,
        )
    except LawvereError as exc:
        raise StructureFileError(f"map {name}: {exc}", line_no) from exc
