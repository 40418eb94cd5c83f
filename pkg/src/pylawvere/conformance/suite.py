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
"""Seeded runner for the registered property laws, with replay and report emission."""

import json
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from itertools import repeat
from time import perf_counter_ns
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from pylawvere.concepts.extarith import INF, ZERO, ExtVal, parse_extval
from pylawvere.configurations.suite_cfg import LAW_REGISTRY, SUITE_DEFAULTS
from pylawvere.conformance.laws import CASES, CHECKS
from pylawvere.parsers.structure_file import parse_text
from pylawvere.utils.serialization import format_template
from pylawvere.utils.versioning import PYLAWVERE_EXEC_NAME, PYLAWVERE_EXEC_VERSION


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = SUITE_DEFAULTS["seed"]
    cases: int = SUITE_DEFAULTS["cases"]
    max_points: int = SUITE_DEFAULTS["max_points"]
    value_pool: Tuple[str, ...] = tuple(SUITE_DEFAULTS["value_pool"])
    workers: int = SUITE_DEFAULTS["workers"]
    inject_mutant: bool = SUITE_DEFAULTS["inject_mutant"]
    laws: Tuple[str, ...] = ()
    pool: Tuple[ExtVal, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError(f"seed {self.seed} must be nonnegative !")
        if self.cases < 1:
            raise ValueError(f"cases {self.cases} must be at least 1 !")
        if self.max_points < 1:
            raise ValueError(f"max_points {self.max_points} must be at least 1 !")
        if self.workers < 1:
            raise ValueError(f"workers {self.workers} must be at least 1 !")
        pool = tuple(parse_extval(str(value)) for value in self.value_pool)
        if ZERO not in pool or INF not in pool:
            raise ValueError("value_pool must contain 0 and inf !")
        unknown = [law for law in self.laws if law not in LAW_REGISTRY]
        if unknown:
            raise ValueError(f"unknown laws {unknown} !")
        object.__setattr__(self, "pool", pool)

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "SuiteConfig":
        merged = {**SUITE_DEFAULTS, **values}
        return cls(
            seed=int(merged["seed"]),
            cases=int(merged["cases"]),
            max_points=int(merged["max_points"]),
            value_pool=tuple(str(v) for v in merged["value_pool"]),
            workers=int(merged["workers"]),
            inject_mutant=bool(merged["inject_mutant"]),
            laws=tuple(merged["laws"]),
        )


@dataclass(frozen=True)
class LawReport:
    law: str
    statement: str
    reference: str
    module: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None
    message: Optional[str] = None

    def as_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        out["paper_ref"] = out.pop("reference")
        return out


def law_ids(config: SuiteConfig) -> List[str]:
    return list(config.laws) if config.laws else list(LAW_REGISTRY)


def law_rng(seed: int, law: str) -> np.random.Generator:
    """Per-law stream, independent of which other laws run and in which process."""
    return np.random.default_rng(np.random.SeedSequence([seed, zlib.crc32(law.encode("utf-8"))]))


def case_count(config: SuiteConfig, law: str) -> int:
    return max(1, round(config.cases * LAW_REGISTRY[law]["case_factor"]))


def run_check(law: str, case: Dict[str, Any]) -> Optional[str]:
    """The check's verdict, with any exception turned into a failure message."""
    try:
        return CHECKS[LAW_REGISTRY[law]["check"]](case)
    except Exception as exc:
        return f"{type(exc).__name__}: {exc}"


def _report(law: str, cases: int, counterexample: Optional[str] = None, message: Optional[str] = None) -> LawReport:
    entry = LAW_REGISTRY[law]
    return LawReport(
        law, entry["statement"], entry["reference"], entry["module"], message is None, cases, counterexample, message
    )


def run_law(law: str, config: SuiteConfig) -> LawReport:
    entry = LAW_REGISTRY[law]
    bound = entry["max_points"]
    law_config = replace(
        config,
        max_points=min(config.max_points, bound) if bound else config.max_points,
        inject_mutant=config.inject_mutant and entry.get("mutant_target", False),
    )
    rng = law_rng(config.seed, law)
    generate = CASES[entry["case"]]
    count = case_count(config, law)
    for k in range(count):
        case = generate(rng, law_config)
        message = run_check(law, case)
        if message is not None:
            return _report(law, k + 1, format_template(case), message)
    return _report(law, count)


def run_suite(config: SuiteConfig, verbose: bool = False) -> List[LawReport]:
    tic = perf_counter_ns()
    laws = law_ids(config)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(run_law, laws, repeat(config)))
    else:
        reports = []
        for law in laws:
            reports.append(run_law(law, config))
            if verbose:
                print(f"{law} done, pass {reports[-1].passed}")
    if verbose:
        print(f"Running {len(laws)} laws took {(perf_counter_ns() - tic) / 1.0e9} s")
    return reports


def replay(law: str, text: str) -> LawReport:
    """Re-run one law on a serialized case."""
    if law not in LAW_REGISTRY:
        raise KeyError(f"unknown law {law} !")
    try:
        case = parse_text(text)
    except Exception as exc:
        return _report(law, 1, text, f"{type(exc).__name__}: {exc}")
    message = run_check(law, case)
    return _report(law, 1, text if message is not None else None, message)


def suite_exit_code(reports: Sequence[LawReport]) -> int:
    return 0 if all(report.passed for report in reports) else 1


def format_text_report(reports: Sequence[LawReport]) -> str:
    lines = []
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(f"{verdict} {report.law} ({report.cases} cases): {report.statement}")
        if not report.passed:
            lines.append(f"  {report.message}")
            for row in (report.counterexample or "").splitlines():
                lines.append(f"  | {row}")
    failed = sum(1 for report in reports if not report.passed)
    lines.append(f"{len(reports) - failed} passed, {failed} failed")
    return "\n".join(lines)


def format_json_report(reports: Sequence[LawReport]) -> str:
    return json.dumps(
        {
            "program": PYLAWVERE_EXEC_NAME,
            "version": PYLAWVERE_EXEC_VERSION,
            "reports": [report.as_dict() for report in reports],
        },
        indent=2,
    )
