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
"""Command line interface of pylawvere.

Exit codes: 0 success, 1 a negative verdict or failing law, 2 usage errors
including malformed structure files.
"""

import contextlib
import json
import pathlib
import sys
from typing import Any, Dict, List, Optional

import click

from pylawvere.concepts.approach import (
    ApproachTable,
    FiniteApproach,
    alexandroff,
    approach_violations,
    is_contraction,
    specialization,
    validate_approach,
)
from pylawvere.concepts.errors import InvalidStructureError, LawvereError, StructureFileError
from pylawvere.concepts.extarith import INF, parse_extval
from pylawvere.concepts.ordtop import is_sober_top, omega_top, square_checks
from pylawvere.concepts.space import FiniteSpace, SpaceMap, check_nonexpansive, classify
from pylawvere.configurations.suite_cfg import LAW_REGISTRY, SUITE_DEFAULTS
from pylawvere.conformance import generators as gen
from pylawvere.conformance.suite import (
    SuiteConfig,
    format_json_report,
    format_text_report,
    law_rng,
    replay,
    run_suite,
    suite_exit_code,
)
from pylawvere.methods.completion import (
    classify_net,
    net_weight,
    smyth_classify,
    yoneda_completion,
    yoneda_limits,
)
from pylawvere.methods.halfline import (
    AbstractSubset,
    classify_seq,
    delta_P,
    gamma_dR,
    parse_sequence,
    yoneda_limit_seq,
)
from pylawvere.methods.sobriety import is_sober, sobrify
from pylawvere.methods.weightcalc import coweight_law_violations, weight_law_violations
from pylawvere.parsers.structure_file import StructureFileParser, empty_template
from pylawvere.parsers.suite_config import SuiteConfigParser
from pylawvere.utils.serialization import format_space
from pylawvere.utils.versioning import PYLAWVERE_EXEC_NAME, PYLAWVERE_EXEC_VERSION

FORMAT_OPTION = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Human readable text or one JSON document on stdout.",
)
VERBOSE_OPTION = click.option("--verbose", is_flag=True, help="Progress messages on stderr.")


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _emit(fmt: str, payload: Dict[str, Any], text: str) -> None:
    click.echo(json.dumps(payload, indent=2) if fmt == "json" else text)


def _load(file_path: str, verbose: bool) -> Dict[str, Dict[str, Any]]:
    if verbose:
        click.echo(f"Parsing structure file {file_path} ...", err=True)
    parser = StructureFileParser(file_path, verbose=False)
    if not parser.supported:
        _fail(f"cannot read {file_path}", 2)
    try:
        return parser.parse(empty_template())
    except StructureFileError as exc:
        _fail(str(exc), 2)
    except InvalidStructureError as exc:
        lines = [str(exc)] + [f"  {violation}" for violation in exc.violations]
        _fail("\n".join(lines), 1)
    return {}


def _pick(template: Dict[str, Dict[str, Any]], kinds: List[str], name: Optional[str]):
    for kind in kinds:
        entries = template[kind]
        if name is None and entries:
            first = next(iter(entries))
            return kind, first, entries[first]
        if name in entries:
            return kind, name, entries[name]
    wanted = f"{' or '.join(kinds)} {name}" if name else " or ".join(kinds)
    _fail(f"no {wanted} in the file", 2)
    return "", "", None


def _as_approach(kind: str, name: str, entry) -> FiniteApproach:
    if kind == "space":
        return alexandroff(entry)
    try:
        return validate_approach(entry.carrier, entry.table, name)
    except InvalidStructureError as exc:
        _fail("\n".join([str(exc)] + [f"  {v}" for v in exc.violations]), 1)
    return None


def _matrix(space: FiniteSpace) -> List[List[str]]:
    return [[str(v) for v in row] for row in space.dist]


@click.group()
@click.version_option(PYLAWVERE_EXEC_VERSION, prog_name=PYLAWVERE_EXEC_NAME)
def main():
    """Exact Lawvere quasi-metric spaces, approach spaces, sobrification and completion."""


@main.command()
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@FORMAT_OPTION
@VERBOSE_OPTION
def check(file_path: str, fmt: str, verbose: bool):
    """Validate every stanza of a structure file."""
    template = _load(file_path, verbose)
    results: List[Dict[str, Any]] = []
    for name in template["space"]:
        results.append({"kind": "space", "name": name, "valid": True, "violations": []})
    for name, table in template["approach"].items():
        violations = [str(v) for v in approach_violations(table.carrier, table.table)]
        results.append({"kind": "approach", "name": name, "valid": not violations, "violations": violations})
    for kind in ("order", "topology"):
        for name in template[kind]:
            results.append({"kind": kind, "name": name, "valid": True, "violations": []})
    for kind, law in (("weight", weight_law_violations), ("coweight", coweight_law_violations)):
        for name, entry in template[kind].items():
            owner = template[entry.owner_kind][entry.owner]
            if isinstance(owner, ApproachTable):
                try:
                    owner = validate_approach(owner.carrier, owner.table, owner.name)
                except InvalidStructureError:
                    results.append({"kind": kind, "name": name, "valid": False, "violations": ["owner is invalid"]})
                    continue
            metric = owner if isinstance(owner, FiniteSpace) else specialization(owner)
            pairs = [f"{x},{y}" for x, y in law(metric, entry.values)]
            results.append({"kind": kind, "name": name, "valid": not pairs, "violations": pairs})
    for name, fmap in template["map"].items():
        if isinstance(fmap, SpaceMap):
            ok = check_nonexpansive(fmap)
            label = "nonexpansive"
        else:
            ok = is_contraction(fmap).contraction
            label = "contraction"
        results.append({"kind": "map", "name": name, "valid": ok, "violations": [] if ok else [f"not a {label}"]})
    for name in template["net"]:
        results.append({"kind": "net", "name": name, "valid": True, "violations": []})
    text = "\n".join(
        f"{r['kind']} {r['name']}: {'ok' if r['valid'] else 'INVALID'}"
        + "".join(f"\n  {v}" for v in r["violations"])
        for r in results
    )
    _emit(fmt, {"file": file_path, "results": results}, text)
    sys.exit(0 if all(r["valid"] for r in results) else 1)


@main.command(name="classify")
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--name", default=None, help="Space to classify, the first one by default.")
@FORMAT_OPTION
@VERBOSE_OPTION
def classify_cmd(file_path: str, name: Optional[str], fmt: str, verbose: bool):
    """Symmetry, separation, finiteness and the Smyth flags of a space."""
    _, name, space = _pick(_load(file_path, verbose), ["space"], name)
    flags = classify(space)
    smyth = smyth_classify(space)
    payload = {
        "space": name,
        "symmetric": flags.symmetric,
        "separated": flags.separated,
        "finitary": flags.finitary,
        "smyth_complete": smyth.complete,
        "smyth_completable": smyth.completable,
    }
    text = "\n".join(f"{key}: {value}" for key, value in payload.items())
    _emit(fmt, payload, text)


@main.command()
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--name", default=None, help="Space to complete, the first one by default.")
@FORMAT_OPTION
@VERBOSE_OPTION
def complete(file_path: str, name: Optional[str], fmt: str, verbose: bool):
    """The Yoneda completion of a space and its embedding."""
    _, name, space = _pick(_load(file_path, verbose), ["space"], name)
    result = yoneda_completion(space)
    embedding = {space.points[x]: result.completed.points[k] for x, k in enumerate(result.embedding)}
    payload = {
        "space": name,
        "points": list(result.completed.points),
        "dist": _matrix(result.completed),
        "embedding": embedding,
        "fixed_point": result.iso_flag,
    }
    text = "\n".join(
        [format_space(result.completed, f"{name}.yon"), ""]
        + [f"y({p}) = {q}" for p, q in embedding.items()]
        + [f"fixed point: {result.iso_flag}"]
    )
    _emit(fmt, payload, text)


@main.command(name="sobrify")
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--name", default=None, help="Approach space (or space, through Gamma) to sobrify.")
@FORMAT_OPTION
@VERBOSE_OPTION
def sobrify_cmd(file_path: str, name: Optional[str], fmt: str, verbose: bool):
    """The approach primes, the specialization metric of the sobrification and eta."""
    kind, name, entry = _pick(_load(file_path, verbose), ["approach", "space"], name)
    space = _as_approach(kind, name, entry)
    sob = sobrify(space)
    eta = {space.carrier[x]: sob.dist.points[k] for x, k in enumerate(sob.eta)}
    primes = {
        sob.dist.points[k]: [str(v) for v in prime.values] for k, prime in enumerate(sob.primes)
    }
    payload = {
        "name": name,
        "primes": primes,
        "points": list(sob.dist.points),
        "dist": _matrix(sob.dist),
        "eta": eta,
    }
    text = "\n".join(
        [f"{len(primes)} primes"]
        + [f"  {p}: " + " ".join(values) for p, values in primes.items()]
        + ["", format_space(sob.dist, f"{name}.sob"), ""]
        + [f"eta({p}) = {q}" for p, q in eta.items()]
    )
    _emit(fmt, payload, text)


@main.command(name="is-sober")
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--name", default=None, help="Approach space (or space, through Gamma) to test.")
@FORMAT_OPTION
@VERBOSE_OPTION
def is_sober_cmd(file_path: str, name: Optional[str], fmt: str, verbose: bool):
    """Exit 0 when every approach prime is delta(-, {x}) for exactly one x."""
    kind, name, entry = _pick(_load(file_path, verbose), ["approach", "space"], name)
    space = _as_approach(kind, name, entry)
    report = is_sober(space)
    witness = [str(v) for v in report.witness.values] if report.witness is not None else None
    payload = {"name": name, "sober": report.sober, "witness": witness, "preimages": list(report.preimages)}
    text = f"{name}: {'sober' if report.sober else 'not sober'}"
    if witness is not None:
        text += f"\n  prime {' '.join(witness)} is represented by {report.preimages[-1]} points"
    _emit(fmt, payload, text)
    sys.exit(0 if report.sober else 1)


@main.command()
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("net_name")
@FORMAT_OPTION
@VERBOSE_OPTION
def net(file_path: str, net_name: str, fmt: str, verbose: bool):
    """Classify a net and report its weight and Yoneda limits."""
    template = _load(file_path, verbose)
    if net_name not in template["net"]:
        _fail(f"no net {net_name} in the file", 2)
    spec = template["net"][net_name]
    cls = classify_net(spec)
    payload: Dict[str, Any] = {
        "net": net_name,
        "forward_cauchy": cls.forward_cauchy,
        "bicauchy": cls.bicauchy,
        "weight": None,
        "yoneda_limits": yoneda_limits(spec),
    }
    if cls.forward_cauchy:
        payload["weight"] = [str(v) for v in net_weight(spec).values]
    text = "\n".join(
        f"{key}: {' '.join(value) if isinstance(value, list) else value}"
        for key, value in payload.items()
    )
    _emit(fmt, payload, text)


@main.group()
def top():
    """Finite topologies."""


@top.command(name="sober")
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--name", default=None, help="Topology to test, the first one by default.")
@FORMAT_OPTION
@VERBOSE_OPTION
def top_sober(file_path: str, name: Optional[str], fmt: str, verbose: bool):
    """Exit 0 when every irreducible closed set has exactly one generic point."""
    _, name, topology = _pick(_load(file_path, verbose), ["topology"], name)
    report = is_sober_top(topology)
    agrees = is_sober(omega_top(topology)).sober == report.sober
    payload = {"topology": name, "sober": report.sober, "witness": report.witness, "omega_agrees": agrees}
    text = f"{name}: {'sober' if report.sober else 'not sober'}"
    if report.witness:
        text += f"\n  {report.witness}"
    _emit(fmt, payload, text)
    sys.exit(0 if report.sober else 1)


@main.command()
@click.option("--seed", type=int, default=SUITE_DEFAULTS["seed"], show_default=True)
@click.option("--cases", type=click.IntRange(min=1), default=SUITE_DEFAULTS["cases"], show_default=True)
@click.option("--max-points", type=click.IntRange(min=1, max=8), default=5, show_default=True)
@FORMAT_OPTION
def squares(seed: int, cases: int, max_points: int, fmt: str):
    """Functor squares on random preorders, topologies and approach spaces."""
    rng = law_rng(seed, "squares")
    pool = SuiteConfig().pool
    failures: List[str] = []
    for k in range(cases):
        instances = [
            gen.generate_preorder(rng, max_points),
            omega_top(gen.generate_topology(rng, max_points)),
            gen.generate_approach(rng, max_points, pool),
        ]
        for instance in instances:
            report = square_checks(instance)
            failures += [f"case {k}: {failure}" for failure in report.failures]
    payload = {"seed": seed, "cases": cases, "ok": not failures, "failures": failures}
    text = "\n".join(failures + [f"{3 * cases} instances, {len(failures)} failures"])
    _emit(fmt, payload, text)
    sys.exit(0 if not failures else 1)


@main.group()
def halfline():
    """Closed-form exemplars on [0, inf]."""


@halfline.command(name="eval")
@click.argument("function", type=click.Choice(["deltaP", "gammaDR"]))
@click.option("--x", "x_text", required=True, help="Point of [0, inf].")
@click.option("--sup", "sup_text", default="0", show_default=True, help="Supremum of the subset.")
@click.option("--contains-inf", is_flag=True, help="The subset contains inf.")
@click.option("--empty", is_flag=True, help="The subset is empty.")
@FORMAT_OPTION
def halfline_eval(function: str, x_text: str, sup_text: str, contains_inf: bool, empty: bool, fmt: str):
    """delta_P(x, A) or Gamma(d_R)(x, A) for A given by its supremum and flags."""
    try:
        x = parse_extval(x_text)
        sup = INF if contains_inf else parse_extval(sup_text)
        subset = AbstractSubset.empty() if empty else AbstractSubset(sup, contains_inf, True)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc
    value = delta_P(x, subset) if function == "deltaP" else gamma_dR(x, subset)
    _emit(fmt, {"function": function, "x": str(x), "value": str(value)}, str(value))


@halfline.command(name="seq")
@click.option("--metric", type=click.Choice(["dL", "dR"]), required=True)
@click.option("--desc", required=True, help="Sequence description, e.g. 'affine:0,1' or '3,1;const:inf'.")
@FORMAT_OPTION
def halfline_seq(metric: str, desc: str, fmt: str):
    """Classify a described sequence and print its Yoneda limit."""
    try:
        seq = parse_sequence(desc)
    except LawvereError as exc:
        raise click.BadParameter(str(exc)) from exc
    cls = classify_seq(seq, metric)
    limit = str(yoneda_limit_seq(seq, metric)) if cls.forward_cauchy else None
    payload = {
        "metric": metric,
        "kind": cls.kind,
        "forward_cauchy": cls.forward_cauchy,
        "bicauchy": cls.bicauchy,
        "yoneda_limit": limit,
    }
    text = "\n".join(f"{key}: {value}" for key, value in payload.items())
    _emit(fmt, payload, text)


@main.group()
def props():
    """The seeded property-law suite."""


@props.command(name="run")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="A *.suite.yaml file, overridden by the flags below.")
@click.option("--seed", type=int, default=None)
@click.option("--cases", type=int, default=None)
@click.option("--max-points", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--law", "laws", multiple=True, help="Run only these laws.")
@click.option("--inject-mutant", is_flag=True, default=None, help="Break generated spaces for the main-theorem law.")
@click.option("--counterexample-dir", type=click.Path(file_okay=False), default=None,
              help="Write one replayable <law>.case file per failing law.")
@FORMAT_OPTION
@VERBOSE_OPTION
def props_run(config_path, seed, cases, max_points, workers, laws, inject_mutant, counterexample_dir, fmt, verbose):
    """Run the registered laws; exit 1 if any fails."""
    values: Dict[str, Any] = {}
    if config_path is not None:
        # parser diagnostics must not end up in a --format json document
        with contextlib.redirect_stdout(sys.stderr):
            parser = SuiteConfigParser(config_path, verbose=verbose)
            if not parser.supported:
                _fail(f"{config_path} is not a readable *.suite.yaml file", 2)
            try:
                values = parser.parse(values)
            except (KeyError, ValueError) as exc:
                _fail(str(exc), 2)
    overrides = {
        "seed": seed,
        "cases": cases,
        "max_points": max_points,
        "workers": workers,
        "laws": list(laws) if laws else None,
        "inject_mutant": inject_mutant,
    }
    values.update({key: value for key, value in overrides.items() if value is not None})
    try:
        config = SuiteConfig.from_dict(values)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    with contextlib.redirect_stdout(sys.stderr):
        reports = run_suite(config, verbose=verbose)
    if counterexample_dir is not None:
        target = pathlib.Path(counterexample_dir)
        target.mkdir(parents=True, exist_ok=True)
        for report in reports:
            if not report.passed:
                (target / f"{report.law}.case").write_text(report.counterexample or "", encoding="utf-8")
    click.echo(format_json_report(reports) if fmt == "json" else format_text_report(reports))
    sys.exit(suite_exit_code(reports))


@props.command(name="replay")
@click.argument("law", type=click.Choice(list(LAW_REGISTRY)))
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False))
@FORMAT_OPTION
def props_replay(law: str, file_path: str, fmt: str):
    """Re-run one law on a serialized counterexample."""
    text = pathlib.Path(file_path).read_text(encoding="utf-8")
    report = replay(law, text)
    click.echo(format_json_report([report]) if fmt == "json" else format_text_report([report]))
    sys.exit(suite_exit_code([report]))


@props.command(name="list")
@FORMAT_OPTION
def props_list(fmt: str):
    """Print the law registry."""
    payload = {
        law: {
            "statement": entry["statement"],
            "paper_ref": entry["reference"],
            "module": entry["module"],
            "ops": entry["ops"],
        }
        for law, entry in LAW_REGISTRY.items()
    }
    text = "\n".join(f"{law} [{entry['module']}]: {entry['statement']} ({entry['reference']})" for law, entry in LAW_REGISTRY.items())
    _emit(fmt, payload, text)


if __name__ == "__main__":
    main()
