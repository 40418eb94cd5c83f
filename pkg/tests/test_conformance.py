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
"""The seeded property-law suite."""

import json
from time import perf_counter

import numpy as np
import pytest

from pylawvere.concepts.approach import ApproachTable, a1_a3_violations
from pylawvere.concepts.extarith import INF, ExtVal
from pylawvere.concepts.space import validate
from pylawvere.configurations.suite_cfg import LAW_REGISTRY
from pylawvere.conformance import laws
from pylawvere.conformance.laws import CASES, CHECKS
from pylawvere.conformance.suite import (
    SuiteConfig,
    case_count,
    format_json_report,
    format_text_report,
    law_rng,
    replay,
    run_law,
    run_suite,
    suite_exit_code,
)
from pylawvere.methods import weightcalc
from pylawvere.methods.halfline import SeqClass, parse_sequence
from pylawvere.parsers.structure_file import VectorEntry, empty_template

QUICK = SuiteConfig(seed=42, cases=4, max_points=3)


def test_registry_is_wired():
    for law, entry in LAW_REGISTRY.items():
        assert entry["case"] in CASES, law
        assert entry["check"] in CHECKS, law
        assert entry["statement"], law
        assert entry["reference"], law


@pytest.mark.parametrize(
    "kwargs",
    [
        pytest.param({"cases": 0}, id="no-cases"),
        pytest.param({"max_points": 0}, id="no-points"),
        pytest.param({"workers": 0}, id="no-workers"),
        pytest.param({"seed": -1}, id="negative-seed"),
        pytest.param({"value_pool": ("0", "1")}, id="pool-without-inf"),
        pytest.param({"value_pool": ("1", "inf")}, id="pool-without-zero"),
        pytest.param({"laws": ("no-such-law",)}, id="unknown-law"),
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SuiteConfig(**kwargs)


def test_from_dict_overlays_defaults():
    config = SuiteConfig.from_dict({"cases": "7", "laws": ["residuation"]})
    assert config.cases == 7
    assert config.laws == ("residuation",)
    assert config.seed == 42


def test_case_count_scales():
    config = SuiteConfig(cases=8)
    assert case_count(config, "residuation") == 8
    assert case_count(config, "halfline-delta-vs-gamma") == 1


@pytest.mark.parametrize(
    "law,expected",
    [
        pytest.param("sober-iff-smyth-complete", 500, id="main-chain"),
        pytest.param("prime-iff-flat", 5000, id="prime-oracle"),
        pytest.param("hat-calculus", 100, id="hat-spaces"),
        pytest.param("bicauchy-bridge", 100, id="bicauchy-spaces"),
        pytest.param("a4-iff-a4prime", 200, id="table-pairs"),
        pytest.param("halfline-sequence-convergence", 200, id="sequences"),
    ],
)
def test_default_case_counts(law, expected):
    assert case_count(SuiteConfig(), law) == expected


def test_law_streams_are_independent():
    first = law_rng(42, "residuation").integers(1 << 30, size=4)
    again = law_rng(42, "residuation").integers(1 << 30, size=4)
    other = law_rng(42, "hat-calculus").integers(1 << 30, size=4)
    assert list(first) == list(again)
    assert list(first) != list(other)


@pytest.mark.parametrize("law", list(LAW_REGISTRY))
def test_every_law_passes_on_small_cases(law):
    report = run_law(law, QUICK)
    assert report.passed, f"{report.message}\n{report.counterexample}"


def test_run_suite_is_deterministic():
    config = SuiteConfig(seed=3, cases=3, max_points=3, laws=("residuation", "yoneda-lemma", "top-sober"))
    first = format_json_report(run_suite(config))
    assert first == format_json_report(run_suite(config))
    assert suite_exit_code(run_suite(config)) == 0


def test_mutant_is_caught_and_replays():
    config = SuiteConfig(seed=42, cases=10, max_points=4, inject_mutant=True, laws=("sober-iff-smyth-complete",))
    (report,) = run_suite(config)
    assert not report.passed
    assert report.counterexample
    assert suite_exit_code([report]) == 1
    replayed = replay("sober-iff-smyth-complete", report.counterexample)
    assert not replayed.passed


def test_mutant_only_touches_its_law():
    config = SuiteConfig(seed=42, cases=3, max_points=3, inject_mutant=True, laws=("space-constructions",))
    assert run_suite(config)[0].passed


def test_replay_of_valid_case():
    text = "value a 1\nvalue b 3\nvalue c 2\n"
    assert replay("residuation", text).passed
    with pytest.raises(KeyError):
        replay("no-such-law", text)


def test_reports():
    reports = run_suite(SuiteConfig(seed=1, cases=2, laws=("residuation",)))
    text = format_text_report(reports)
    assert text.startswith("PASS residuation (2 cases)")
    assert text.endswith("1 passed, 0 failed")
    document = json.loads(format_json_report(reports))
    assert document["program"] == "pylawvere"
    (entry,) = document["reports"]
    assert entry["law"] == "residuation"
    assert entry["pass"] is True
    assert entry["paper_ref"] == "Example (Lawvere metric)"
    assert entry["counterexample"] is None


def test_hat_cases_carry_tuples():
    case = CASES["case_hat_tuples"](np.random.default_rng(5), QUICK)
    assert len(case["value"]) == laws.HAT_TUPLES
    assert len(case["weight"]) == 3 * laws.HAT_TUPLES
    assert CHECKS["check_hat_calculus"](case) is None


def test_flat_enumeration_drops_are_caught(monkeypatch):
    space = validate(("a", "b"), [[0, 1], [1, 0]], "X")
    case = empty_template()
    case["space"]["X"] = space
    case["weight"]["g0"] = VectorEntry("space", "X", space.column(1))
    assert CHECKS["check_flat_enumeration"](case) is None
    # forget the clique of b
    monkeypatch.setattr(
        laws, "enumerate_flat_weights", lambda s: [pair for pair in weightcalc.enumerate_flat_weights(s) if 1 not in pair[1]]
    )
    assert "missing from the enumeration" in CHECKS["check_flat_enumeration"](case)


def _sequence_case(desc, *probes):
    case = empty_template()
    case["seq"]["s"] = parse_sequence(desc)
    for k, x in enumerate(probes):
        case["value"][f"x{k}"] = ExtVal(x)
    return case


def test_sequence_convergence_compares_tail_limits(monkeypatch):
    case = _sequence_case("4;alternating:0,2", 1, 3)
    assert CHECKS["check_sequence_convergence"](case) is None
    # claiming forward Cauchy for the oscillating sequence must be refuted
    monkeypatch.setattr(laws, "classify_seq", lambda seq, metric: SeqClass(True, False, "forced"))
    assert "differs from sup-inf" in CHECKS["check_sequence_convergence"](case)


def test_sequence_cases_use_twenty_probes():
    case = CASES["case_sequence"](np.random.default_rng(0), QUICK)
    assert len(case["value"]) == laws.SEQUENCE_PROBES == 20


def test_table_cases_compare_a_perturbation():
    rng = np.random.default_rng(11)
    config = SuiteConfig(max_points=4)
    changed = 0
    for _ in range(20):
        case = CASES["case_approach_table"](rng, config)
        valid, perturbed = case["approach"]["A"], case["approach"]["B"]
        assert not a1_a3_violations(perturbed.carrier, perturbed.table)
        assert CHECKS["check_a4_a4prime"](case) is None
        changed += perturbed.table != valid.table
    assert changed > 0


def test_table_breaking_the_base_axioms_fails():
    case = empty_template()
    # masks 0 and 1 are the empty set and {a}, delta(a, {a}) must be 0
    case["approach"]["B"] = ApproachTable(("a",), ((INF, ExtVal(1)),), "B")
    assert "breaks (A1)-(A3)" in CHECKS["check_a4_a4prime"](case)


def test_bicauchy_bridge_visits_every_recurring_set(monkeypatch):
    seen = []
    classify = laws.classify_net

    def recording(net):
        seen.append(net.cycle)
        return classify(net)

    monkeypatch.setattr(laws, "classify_net", recording)
    case = CASES["case_space_net"](np.random.default_rng(2), SuiteConfig(max_points=4))
    assert CHECKS["check_bicauchy_bridge"](case) is None
    size = case["space"]["X"].size
    assert len(seen) == 1 + len(laws.periodic_nets(case["space"]["X"], 4))
    assert {cycle for cycle in seen[1:] if len(cycle) == 1} == {(x,) for x in range(size)}


@pytest.mark.slow
@pytest.mark.timeout(120)
def test_main_chain_at_the_default_configuration():
    tic = perf_counter()
    (report,) = run_suite(SuiteConfig(laws=("sober-iff-smyth-complete",)))
    assert report.passed, report.message
    assert report.cases == 500
    assert perf_counter() - tic < 60


@pytest.mark.slow
@pytest.mark.timeout(7200)
def test_every_law_passes_at_the_default_configuration():
    reports = run_suite(SuiteConfig(workers=4))
    failed = [f"{report.law}: {report.message}" for report in reports if not report.passed]
    assert not failed, "\n".join(failed)
    assert suite_exit_code(reports) == 0
