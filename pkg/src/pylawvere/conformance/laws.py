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
"""Executable laws: a case generator and a check per registered law.

A case is a template dict in the structure file layout (kind -> name ->
object), so a failing case is serialized and replayed through the same check.
Checks return None on success and a short description of the failure
otherwise; structures are re-validated on entry.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from pylawvere.concepts.approach import (
    ApproachMap,
    ApproachTable,
    FiniteApproach,
    a1_a3_violations,
    a4_violations,
    a4prime_violations,
    alexandroff,
    approach_violations,
    collapse_table,
    is_contraction,
    is_regular,
    reconstruct_delta,
    regular_closure,
    regular_generators,
    specialization,
    validate_approach,
)
from pylawvere.concepts.extarith import (
    ZERO,
    ExtVal,
    add,
    dist_l,
    dist_r,
    ext_max,
    ext_min,
    truncated_minus,
)
from pylawvere.concepts.ordtop import (
    closure_table,
    is_directed_complete,
    is_sober_top,
    iota_app,
    iota_met,
    omega_top,
    square_checks,
    validate_preorder,
    validate_topology,
)
from pylawvere.concepts.space import (
    SpaceMap,
    check_isometric,
    check_nonexpansive,
    classify,
    opposite,
    separated_quotient,
    symmetrization,
    validate,
    zero_cliques,
)
from pylawvere.conformance import generators as gen
from pylawvere.methods.completion import (
    NetSpec,
    cauchy_completion,
    classify_net,
    net_coweight,
    net_weight,
    periodic_nets,
    smyth_classify,
    tail_limits,
    weight_net_is_forward_cauchy,
    weight_net_limit,
    yoneda_complete_check,
    yoneda_completion,
    yoneda_limits,
)
from pylawvere.methods.halfline import (
    RationalSeq,
    classify_seq,
    delta_P,
    flat_weight_dR,
    gamma_dR,
    net_weight_seq,
    p_sobriety_cases,
    probe_grid,
    tail_limits_seq,
    yoneda_limit_seq,
)
from pylawvere.methods.sobriety import (
    as_regular,
    direct_counterexample,
    extension_majorant_gap,
    hat,
    hat_transform,
    is_sober,
    net_prime,
    prime_oracle,
    sobrify,
    universal_extension,
)
from pylawvere.methods.weightcalc import (
    CoweightVec,
    WeightVec,
    check_coweight,
    check_weight,
    distributes,
    enumerate_flat_weights,
    flat_by_distributivity,
    is_cauchy,
    is_flat,
    left_adjoint_candidate,
    pullback,
    pushforward,
    representable,
    shift_down,
    shift_up,
    sup_metric,
    tensor,
    vec_max,
    vec_min,
    weight_coreflection,
    weight_law_violations,
)
from pylawvere.parsers.structure_file import VectorEntry, empty_template

Template = Dict[str, Dict[str, Any]]

# accessors: every structure is re-validated, mutants fail here


def _space(case: Template, name: str = "X"):
    entry = case["space"][name]
    return validate(entry.points, entry.dist, name)


def _approach(case: Template, name: str = "A") -> FiniteApproach:
    entry = case["approach"][name]
    table = entry.table if isinstance(entry, ApproachTable) else entry.table()
    return validate_approach(entry.carrier, table, name)


def _weight(case: Template, name: str, space) -> WeightVec:
    return check_weight(space, case["weight"][name].values)


def _coweight(case: Template, name: str, space) -> CoweightVec:
    return check_coweight(space, case["coweight"][name].values)


def _raw(case: Template, name: str):
    return case["weight"][name].values


def _value(case: Template, name: str) -> ExtVal:
    return case["value"][name]


def _vector(owner: str, values, owner_kind: str = "space") -> VectorEntry:
    return VectorEntry(owner_kind, owner, tuple(values))


def _pool(cfg) -> List[ExtVal]:
    return list(cfg.pool)


def _rational(rng: np.random.Generator) -> ExtVal:
    return ExtVal(Fraction(int(rng.integers(0, 25)), int(rng.integers(1, 7))))


def _pick_flat(rng: np.random.Generator, space) -> WeightVec:
    flats = enumerate_flat_weights(space)
    return flats[int(rng.integers(len(flats)))][0]


# arithmetic


def case_values(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    for name in ("a", "b", "c"):
        case["value"][name] = gen.draw_value(rng, pool) if rng.random() < 0.7 else _rational(rng)
    return case


def check_residuation(case: Template) -> Optional[str]:
    a, b, c = (_value(case, n) for n in "abc")
    if (truncated_minus(a, b) <= c) != (b <= add(a, c)):
        return f"residuation fails at a={a}, b={b}, c={c}"
    return None


def check_monoid_lattice(case: Template) -> Optional[str]:
    a, b, c = (_value(case, n) for n in "abc")
    if add(add(a, b), c) != add(a, add(b, c)):
        return "addition is not associative"
    if add(a, b) != add(b, a) or add(a, ZERO) != a:
        return "addition is not a commutative monoid with unit 0"
    if ext_min((a, ext_max((b, c)))) != ext_max((ext_min((a, b)), ext_min((a, c)))):
        return "min does not distribute over max"
    if ext_max((a, ext_min((b, c)))) != ext_min((ext_max((a, b)), ext_max((a, c)))):
        return "max does not distribute over min"
    return None


def check_halfline_metrics(case: Template) -> Optional[str]:
    a, b, c = (_value(case, n) for n in "abc")
    for label, d in (("d_L", dist_l), ("d_R", dist_r)):
        if d(a, a) != ZERO:
            return f"{label}({a},{a}) is not 0"
        if d(a, b) + d(b, c) < d(a, c):
            return f"{label} triangle fails at {a}, {b}, {c}"
    return None


# spaces


def case_space(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    space = gen.generate_space(rng, cfg.max_points, _pool(cfg))
    if getattr(cfg, "inject_mutant", False):
        space = gen.mutate_space(rng, space)
    case["space"]["X"] = space
    return case


def check_space_constructions(case: Template) -> Optional[str]:
    space = _space(case)
    if opposite(opposite(space)) != space:
        return "opposite is not an involution"
    sym = symmetrization(space)
    if symmetrization(sym) != sym:
        return "symmetrization is not idempotent"
    quotient, proj = separated_quotient(space)
    if not classify(quotient).separated:
        return "separated quotient is not separated"
    if not check_isometric(proj):
        return "quotient projection is not isometric"
    for k, clique in enumerate(zero_cliques(space)):
        # the section picks the first member of each class
        if proj.assignment[clique[0]] != k:
            return f"projection after section moves quotient point {quotient.points[k]}"
    return None


def case_space_map(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    source = gen.generate_space(rng, cfg.max_points, pool)
    case["space"]["X"] = source
    if rng.random() < 0.5:
        target, fmap = separated_quotient(source)
        target = validate(target.points, target.dist, "Y")
        fmap = SpaceMap(source, target, fmap.assignment)
    else:
        target = gen.generate_space(rng, cfg.max_points, pool, "Y")
        fmap = gen.generate_map(rng, source, target)
    case["space"]["Y"] = target
    case["map"]["f"] = fmap
    return case


def _space_map(case: Template) -> SpaceMap:
    fmap = case["map"]["f"]
    return SpaceMap(_space(case, "X"), _space(case, "Y"), fmap.assignment)


def check_isometric_nonexpansive(case: Template) -> Optional[str]:
    fmap = _space_map(case)
    if check_isometric(fmap) and not check_nonexpansive(fmap):
        return "isometric map expands a distance"
    return None


# weights


def case_space_weights(rng: np.random.Generator, cfg) -> Template:
    """A space with weights phi, xi, a raw vector g, coweights psi, psi2 and a value alpha."""
    case = empty_template()
    pool = _pool(cfg)
    space = gen.generate_space(rng, cfg.max_points, pool)
    case["space"]["X"] = space
    if rng.random() < 0.5:
        phi = gen.generate_zero_weight(rng, space, pool)
    else:
        phi = gen.generate_weight(rng, space, pool)
    xi = gen.generate_weight(rng, space, pool)
    raw = gen.draw_vector(rng, space.size, pool)
    # g dominates phi half of the time
    if rng.random() < 0.5:
        raw = [ext_max(pair) for pair in zip(raw, phi.values)]
    case["weight"]["phi"] = _vector("X", phi.values)
    case["weight"]["xi"] = _vector("X", xi.values)
    case["weight"]["g"] = _vector("X", raw)
    case["coweight"]["psi"] = _vector("X", gen.generate_coweight(rng, space, pool).values)
    case["coweight"]["psi2"] = _vector("X", gen.generate_coweight(rng, space, pool).values)
    case["value"]["alpha"] = gen.draw_value(rng, pool)
    return case


def case_cauchy_weight(rng: np.random.Generator, cfg) -> Template:
    case = case_space_weights(rng, cfg)
    space = case["space"]["X"]
    case["weight"]["phi"] = _vector("X", _pick_flat(rng, space).values)
    case["weight"]["xi2"] = _vector("X", gen.generate_weight(rng, space, _pool(cfg)).values)
    return case


def check_yoneda_lemma(case: Template) -> Optional[str]:
    space = _space(case)
    phi = _weight(case, "phi", space)
    for x, point in enumerate(space.points):
        rep = representable(space, point)
        if sup_metric(rep, phi) != phi.values[x]:
            return f"d-bar(d(-,{point}), phi) differs from phi({point})"
        for y, other in enumerate(space.points):
            if sup_metric(rep, representable(space, other)) != space.dist[x][y]:
                return f"Yoneda embedding changes d({point},{other})"
    return None


def check_cauchy_weight(case: Template) -> Optional[str]:
    space = _space(case)
    phi = _weight(case, "phi", space)
    report = is_cauchy(phi)
    if not report.cauchy:
        return None
    cand = report.witness
    xi, xi2 = _weight(case, "xi", space), _weight(case, "xi2", space)
    psi, psi2 = _coweight(case, "psi", space), _coweight(case, "psi2", space)
    for p in (psi, psi2):
        if tensor(phi, p) != ext_max(dist_l(c, v) for c, v in zip(cand.values, p.values)):
            return "tensor with a coweight is not the coweight distance from the adjoint"
    for w in (xi, xi2):
        if tensor(w, cand) != sup_metric(phi, w):
            return "tensor with the adjoint is not the distance from phi"
    if not distributes(phi, psi, psi2):
        return "tensor with phi does not preserve the max of two coweights"
    if sup_metric(phi, vec_min((xi, xi2))) != ext_min((sup_metric(phi, xi), sup_metric(phi, xi2))):
        return "distance from phi does not preserve the min of two weights"
    if not is_flat(phi):
        return "Cauchy weight is not flat"
    return None


def check_flat_distributive(case: Template) -> Optional[str]:
    space = _space(case)
    phi = _weight(case, "phi", space)
    flat = is_flat(phi)
    if flat != flat_by_distributivity(phi):
        return f"pair condition says flat={flat}, distributivity disagrees"
    if flat and not distributes(phi, _coweight(case, "psi", space), _coweight(case, "psi2", space)):
        return "flat weight fails distributivity on random coweights"
    return None


def check_cauchy_iff_flat(case: Template) -> Optional[str]:
    space = _space(case)
    for name in ("phi", "xi"):
        phi = _weight(case, name, space)
        if is_cauchy(phi).cauchy != is_flat(phi):
            return f"{name}: Cauchy and flat disagree"
    return None


def check_weight_closure(case: Template) -> Optional[str]:
    space = _space(case)
    phi, xi = _weight(case, "phi", space), _weight(case, "xi", space)
    alpha = _value(case, "alpha")
    for label, vec in (
        ("min", vec_min((phi, xi))),
        ("max", vec_max((phi, xi))),
        ("phi + alpha", shift_up(phi, alpha)),
        ("phi - alpha", shift_down(phi, alpha)),
    ):
        if weight_law_violations(space, vec.values):
            return f"{label} is not a weight"
    return None


def check_coreflection(case: Template) -> Optional[str]:
    space = _space(case)
    phi = _weight(case, "phi", space)
    raw = _raw(case, "g")
    core = weight_coreflection(space, raw)
    if weight_law_violations(space, core.values):
        return "coreflection is not a weight"
    if any(a > b for a, b in zip(core.values, raw)):
        return "coreflection exceeds g"
    if all(a <= b for a, b in zip(phi.values, raw)) and not phi.leq(core):
        return "a weight below g is not below the coreflection"
    return None


FLAT_CANDIDATES = 20


def case_flat_candidates(rng: np.random.Generator, cfg) -> Template:
    """A space with raw vectors g0, g1, ..., half of them drawn around a representable weight."""
    case = empty_template()
    pool = _pool(cfg)
    space = gen.generate_space(rng, cfg.max_points, pool)
    case["space"]["X"] = space
    for k in range(FLAT_CANDIDATES):
        raw = gen.draw_vector(rng, space.size, pool)
        if rng.random() < 0.5:
            column = space.column(int(rng.integers(space.size)))
            raw = [value if rng.random() < 0.8 else ext_max((value, raw[y])) for y, value in enumerate(column)]
        else:
            raw[int(rng.integers(space.size))] = ZERO
        case["weight"][f"g{k}"] = _vector("X", raw)
    return case


def check_flat_enumeration(case: Template) -> Optional[str]:
    space = _space(case)
    listed = {phi.values for phi, _ in enumerate_flat_weights(space)}
    for name in sorted(case["weight"]):
        core = weight_coreflection(space, _raw(case, name))
        if is_flat(core) and core.values not in listed:
            return f"the coreflection of {name} is flat but missing from the enumeration"
    return None


def case_pushforward(rng: np.random.Generator, cfg) -> Template:
    case = case_space_map(rng, cfg)
    source, target = case["space"]["X"], case["space"]["Y"]
    case["weight"]["phi"] = _vector("X", _pick_flat(rng, source).values)
    case["coweight"]["psi"] = _vector("Y", gen.generate_coweight(rng, target, _pool(cfg)).values)
    return case


def check_pushforward(case: Template) -> Optional[str]:
    fmap = _space_map(case)
    phi = _weight(case, "phi", fmap.source)
    psi = _coweight(case, "psi", fmap.target)
    image = pushforward(fmap, phi)
    if weight_law_violations(fmap.target, image.values):
        return "image of a weight is not a weight"
    if is_flat(phi) and not is_flat(image):
        return "image of a flat weight is not flat"
    if is_cauchy(phi).cauchy and not is_cauchy(image).cauchy:
        return "image of a Cauchy weight is not Cauchy"
    if tensor(image, psi) != tensor(phi, pullback(fmap, psi)):
        return "f(phi) tensor psi differs from phi tensor (psi o f)"
    if check_isometric(fmap) and is_cauchy(image).cauchy and not is_cauchy(phi).cauchy:
        return "isometric map does not reflect a Cauchy weight"
    return None


def check_generator_soundness(case: Template) -> Optional[str]:
    space = _space(case)
    for name in case["weight"]:
        if case["weight"][name].owner == "X" and name != "g":
            _weight(case, name, space)
    for name in case["coweight"]:
        _coweight(case, name, space)
    return None


# approach spaces


def case_approach(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    case["approach"]["A"] = gen.generate_approach(rng, cfg.max_points, _pool(cfg))
    return case


def check_finite_collapse(case: Template) -> Optional[str]:
    space = _approach(case)
    if space.table() != collapse_table(space.carrier, space.singletons):
        return "table does not collapse to its singletons"
    if alexandroff(specialization(space)) != space:
        return "Gamma(Omega(A)) differs from A"
    return None


PERTURB_ATTEMPTS = 50


def case_approach_table(rng: np.random.Generator, cfg) -> Template:
    """A valid table A and a single-entry perturbation B that keeps (A1)-(A3)."""
    case = empty_template()
    pool = _pool(cfg)
    space = gen.generate_approach(rng, cfg.max_points, pool)
    valid = space.table()
    perturbed = valid
    for _ in range(PERTURB_ATTEMPTS):
        candidate = gen.perturb_table(rng, space, pool)
        if candidate != valid and not a1_a3_violations(space.carrier, candidate):
            perturbed = candidate
            break
    for name, table in (("A", valid), ("B", perturbed)):
        case["approach"][name] = ApproachTable(space.carrier, tuple(tuple(row) for row in table), name)
    return case


def check_a4_a4prime(case: Template) -> Optional[str]:
    for name, entry in sorted(case["approach"].items()):
        carrier = entry.carrier
        table = entry.table if isinstance(entry, ApproachTable) else entry.table()
        if a1_a3_violations(carrier, table):
            return f"{name} breaks (A1)-(A3)"
        a4 = bool(a4_violations(carrier, table))
        a4p = bool(a4prime_violations(carrier, table))
        if a4 != a4p:
            return f"{name}: (A4) rejects={a4} but (A4') rejects={a4p}"
        if bool(approach_violations(carrier, table)) != a4:
            return f"{name}: reduced validation disagrees with the full axioms"
    return None


def check_regular_iff_weight(case: Template) -> Optional[str]:
    space = _space(case)
    gamma = alexandroff(space)
    for name in ("phi", "g"):
        raw = _raw(case, name)
        if is_regular(gamma, raw) != (not weight_law_violations(space, raw)):
            return f"{name}: regular and weight disagree"
    return None


def check_regular_closure(case: Template) -> Optional[str]:
    space = _space(case)
    gamma = alexandroff(space)
    phi, xi = _weight(case, "phi", space), _weight(case, "xi", space)
    alpha = _value(case, "alpha")
    for label, vec in (
        ("sup", vec_max((phi, xi))),
        ("min", vec_min((phi, xi))),
        ("phi + alpha", shift_up(phi, alpha)),
        ("phi - alpha", shift_down(phi, alpha)),
    ):
        if not is_regular(gamma, vec.values):
            return f"{label} of regular functions is not regular"
    return None


def case_approach_map(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    source = gen.generate_approach(rng, cfg.max_points, pool, "A")
    target = gen.generate_approach(rng, cfg.max_points, pool, "B")
    case["approach"]["A"] = source
    case["approach"]["B"] = target
    assignment = tuple(int(v) for v in rng.integers(target.size, size=source.size))
    if rng.random() < 0.5:
        assignment = gen.generate_map(rng, specialization(source), specialization(target)).assignment
    case["map"]["f"] = ApproachMap(source, target, assignment)
    return case


def check_contraction_criteria(case: Template) -> Optional[str]:
    source, target = _approach(case, "A"), _approach(case, "B")
    fmap = ApproachMap(source, target, case["map"]["f"].assignment)
    report = is_contraction(fmap)
    metric = SpaceMap(specialization(source), specialization(target), fmap.assignment)
    if report.contraction != check_nonexpansive(metric):
        return "contraction differs from nonexpansiveness of the specialization metrics"
    return None


def check_reconstruct_delta(case: Template) -> Optional[str]:
    space = _approach(case)
    family = regular_closure(space.carrier, regular_generators(space))
    if reconstruct_delta(space.carrier, family, "A") != space:
        return "delta rebuilt from the regular functions differs"
    return None


# sobriety


def case_approach_regulars(rng: np.random.Generator, cfg) -> Template:
    """An approach space with regular functions xi, psi, a zero-infimum phi and a value alpha."""
    case = empty_template()
    pool = _pool(cfg)
    space = gen.generate_approach(rng, cfg.max_points, pool)
    metric = specialization(space)
    case["approach"]["A"] = space
    case["weight"]["xi"] = _vector("A", gen.generate_weight(rng, metric, pool).values, "approach")
    case["weight"]["psi"] = _vector("A", gen.generate_weight(rng, metric, pool).values, "approach")
    case["weight"]["phi"] = _vector("A", gen.generate_zero_weight(rng, metric, pool).values, "approach")
    case["value"]["alpha"] = gen.draw_value(rng, pool)
    return case


HAT_TUPLES = 200


def case_hat_tuples(rng: np.random.Generator, cfg) -> Template:
    """An approach space with HAT_TUPLES tuples (xi, psi, phi, alpha), phi of zero infimum."""
    case = empty_template()
    pool = _pool(cfg)
    space = gen.generate_approach(rng, cfg.max_points, pool)
    metric = specialization(space)
    case["approach"]["A"] = space
    for k in range(HAT_TUPLES):
        case["weight"][f"xi{k}"] = _vector("A", gen.generate_weight(rng, metric, pool).values, "approach")
        case["weight"][f"psi{k}"] = _vector("A", gen.generate_weight(rng, metric, pool).values, "approach")
        case["weight"][f"phi{k}"] = _vector("A", gen.generate_zero_weight(rng, metric, pool).values, "approach")
        case["value"][f"alpha{k}"] = gen.draw_value(rng, pool)
    return case


def _regular(space: FiniteApproach, case: Template, name: str, seen: Dict[Tuple[ExtVal, ...], WeightVec]) -> WeightVec:
    raw = tuple(_raw(case, name))
    if raw not in seen:
        seen[raw] = as_regular(space, raw)
    return seen[raw]


def _hat_tuple_failure(xi: WeightVec, psi: WeightVec, phi: WeightVec, alpha: ExtVal, primes) -> Optional[str]:
    hx, hp = hat_transform(xi, primes), hat_transform(psi, primes)
    if xi.leq(psi) != all(a <= b for a, b in zip(hx, hp)):
        return "order of regular functions is not reflected by the hat transform"
    if (hat(xi, phi) == ZERO) != xi.leq(phi):
        return "xi-hat vanishes at phi although xi is not below phi, or the converse"
    for k, prime in enumerate(primes):
        if (hx[k] == ZERO) != xi.leq(prime):
            return "xi-hat vanishes on a prime that xi is not below, or the converse"
        if hat(vec_max((xi, psi)), prime) != ext_max((hx[k], hp[k])):
            return "hat does not commute with sup"
        if hat(vec_min((xi, psi)), prime) != ext_min((hx[k], hp[k])):
            return "hat does not commute with min"
        if hat(shift_up(xi, alpha), prime) != hx[k] + alpha:
            return "hat does not commute with adding alpha"
        if hat(shift_down(xi, alpha), prime) != hx[k] - alpha:
            return "hat does not commute with subtracting alpha"
    return None


def check_hat_calculus(case: Template) -> Optional[str]:
    space = _approach(case)
    sob = sobrify(space)
    primes = sob.primes
    seen: Dict[Tuple[ExtVal, ...], WeightVec] = {}
    hats_checked = set()
    for k in range(len(case["value"])):
        xi, psi, phi = (_regular(space, case, f"{n}{k}", seen) for n in ("xi", "psi", "phi"))
        hx = hat_transform(xi, primes)
        if hx not in hats_checked:
            if not is_regular(sob.approach, hx):
                return f"tuple {k}: xi-hat is not regular on the sobrification"
            hats_checked.add(hx)
        failure = _hat_tuple_failure(xi, psi, phi, _value(case, f"alpha{k}"), primes)
        if failure is not None:
            return f"tuple {k}: {failure}"
    return None


def check_prime_oracle(case: Template) -> Optional[str]:
    space = _approach(case)
    phi = as_regular(space, _raw(case, "phi"))
    verdict = prime_oracle(space, phi)
    if verdict.prime != is_flat(phi):
        return f"oracle says prime={verdict.prime}, flatness says {is_flat(phi)}"
    candidates = [WeightVec(phi.space, vec) for vec in regular_generators(space)]
    candidates += [as_regular(space, _raw(case, n)) for n in ("xi", "psi")]
    if verdict.prime:
        found = direct_counterexample(phi, candidates)
        if found is not None:
            return "direct search refutes a prime accepted by the oracle"
    else:
        xi, psi = verdict.counterexample
        if xi.leq(phi) or psi.leq(phi) or not vec_min((xi, psi)).leq(phi):
            return "oracle counterexample does not refute primality"
        for vec in (xi, psi):
            if not is_regular(space, vec.values):
                return "oracle counterexample is not regular"
    return None


def check_sobrification_idempotent(case: Template) -> Optional[str]:
    space = _approach(case)
    once = sobrify(space)
    twice = sobrify(once.approach)
    if len(twice.primes) != len(once.primes):
        return f"{len(once.primes)} primes, then {len(twice.primes)}"
    return None


def case_topology(rng: np.random.Generator, cfg) -> Template:
    case = case_approach(rng, cfg)
    case["topology"]["T"] = gen.generate_topology(rng, cfg.max_points)
    case["order"]["P"] = gen.generate_preorder(rng, cfg.max_points)
    if rng.random() < 0.5:
        # a sober space through its sobrification
        sob = sobrify(case["approach"]["A"])
        case["approach"]["A"] = alexandroff(validate(sob.dist.points, sob.dist.dist, "A"))
    return case


def check_top_sober(case: Template) -> Optional[str]:
    entry = case["topology"]["T"]
    top = validate_topology(entry.points, closure_table(entry.points, entry.closures), "T")
    if is_sober_top(top).sober != is_sober(omega_top(top)).sober:
        return "topological sobriety differs from sobriety of omega(T)"
    space = _approach(case)
    if is_sober(space).sober and not is_sober_top(iota_app(space)).sober:
        return "underlying topology of a sober approach space is not sober"
    return None


def check_functor_squares(case: Template) -> Optional[str]:
    entry = case["order"]["P"]
    order = validate_preorder(entry.points, entry.leq, "P")
    entry = case["topology"]["T"]
    top = validate_topology(entry.points, closure_table(entry.points, entry.closures), "T")
    for label, instance in (
        ("P", order),
        ("omega(T)", omega_top(top)),
        ("A", _approach(case)),
    ):
        report = square_checks(instance)
        if not report.ok:
            return f"{label}: {'; '.join(report.failures)}"
    return None


def check_sobrification_yoneda(case: Template) -> Optional[str]:
    space = _space(case)
    sob = sobrify(alexandroff(space))
    yon = yoneda_completion(space)
    match = []
    for prime in sob.primes:
        hits = [j for j, phi in enumerate(yon.flats) if phi.values == prime.values]
        if len(hits) != 1:
            return "a prime is not exactly one flat weight"
        match.append(hits[0])
    if sorted(match) != list(range(len(yon.flats))):
        return "primes and flat weights are not in bijection"
    for k, j in enumerate(match):
        for l, i in enumerate(match):
            if sob.dist.dist[k][l] != yon.completed.dist[j][i]:
                return "sobrification metric differs from the Yoneda completion"
    if any(match[sob.eta[x]] != yon.embedding[x] for x in range(space.size)):
        return "eta does not correspond to the Yoneda embedding"
    return None


def case_extension(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    source = gen.generate_approach(rng, cfg.max_points, pool, "A")
    raw = gen.generate_space(rng, cfg.max_points, pool, "B")
    quotient, _ = separated_quotient(raw)
    # finite separated spaces are sober
    target = alexandroff(validate(quotient.points, quotient.dist, "B"))
    fmap = gen.generate_map(rng, specialization(source), specialization(target))
    case["approach"]["A"] = source
    case["approach"]["B"] = target
    case["map"]["f"] = ApproachMap(source, target, fmap.assignment)
    return case


def check_universal_extension(case: Template) -> Optional[str]:
    source, target = _approach(case, "A"), _approach(case, "B")
    fmap = ApproachMap(source, target, case["map"]["f"].assignment)
    if not is_sober(target).sober or not is_contraction(fmap).contraction:
        return None
    extension = universal_extension(fmap)
    if extension.target != target:
        return "extension lands outside the target"
    candidates = regular_generators(target)
    for prime in sobrify(source).primes:
        gap = extension_majorant_gap(fmap, prime, candidates)
        if gap is not None:
            return gap
    return None


# nets and completion


def case_space_net(rng: np.random.Generator, cfg) -> Template:
    case = case_space(rng, cfg)
    space = case["space"]["X"]
    if rng.random() < 0.6:
        cliques = zero_cliques(space)
        net = gen.generate_clique_net(rng, space, cliques[int(rng.integers(len(cliques)))])
    else:
        net = gen.generate_net(rng, space)
    case["net"]["N"] = net
    return case


def _net(case: Template, space) -> NetSpec:
    net = case["net"]["N"]
    return NetSpec(space, net.preperiod, net.cycle, "N")


def check_net_prime(case: Template) -> Optional[str]:
    space = _space(case)
    net = _net(case, space)
    if not classify_net(net).forward_cauchy:
        return None
    gamma = alexandroff(space)
    prime = net_prime(gamma, net)
    if not prime_oracle(gamma, prime).prime:
        return "net prime is rejected by the prime oracle"
    if prime.values != net_weight(net).values:
        return "net prime differs from the weight of the net"
    return None


def check_forward_cauchy_convergence(case: Template) -> Optional[str]:
    space = _space(case)
    net = _net(case, space)
    if not classify_net(net).forward_cauchy:
        return None
    for x in range(space.size):
        inf_sup, sup_inf = tail_limits(net, x)
        if inf_sup != sup_inf:
            return f"inf-sup {inf_sup} differs from sup-inf {sup_inf} at {space.points[x]}"
    if not yoneda_limits(net):
        return "forward Cauchy net without a Yoneda limit"
    return None


BRIDGE_CYCLE = 4


def check_bicauchy_bridge(case: Template) -> Optional[str]:
    """The drawn net and one net per recurring set of at most BRIDGE_CYCLE points."""
    space = _space(case)
    for net in [_net(case, space)] + periodic_nets(space, BRIDGE_CYCLE):
        cls = classify_net(net)
        if not cls.forward_cauchy:
            continue
        phi = net_weight(net)
        label = ",".join(space.points[x] for x in net.cycle)
        if cls.bicauchy != is_cauchy(phi).cauchy:
            return f"net recurring on {label}: biCauchy differs from Cauchy net weight"
        if cls.bicauchy and net_coweight(net) != left_adjoint_candidate(phi):
            return f"net recurring on {label}: coweight is not the left adjoint of the net weight"
    return None


def case_weight_net(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    space = gen.generate_space(rng, cfg.max_points, pool)
    case["space"]["X"] = space
    for k in range(int(rng.integers(3))):
        case["weight"][f"pre{k}"] = _vector("X", gen.generate_weight(rng, space, pool).values)
    flat = _pick_flat(rng, space)
    for k in range(int(rng.integers(1, 4))):
        vec = flat if rng.random() < 0.7 else gen.generate_weight(rng, space, pool)
        case["weight"][f"cyc{k}"] = _vector("X", vec.values)
    for k in range(2):
        case["weight"][f"xi{k}"] = _vector("X", gen.generate_weight(rng, space, pool).values)
    return case


def _inf_sup(rows: List[List[ExtVal]], starts: int) -> ExtVal:
    return ext_min(ext_max(v for row in rows[lam:] for v in row) for lam in range(starts))


def check_weight_net_limits(case: Template) -> Optional[str]:
    space = _space(case)
    names = sorted(case["weight"])
    pre = [_weight(case, n, space) for n in names if n.startswith("pre")]
    cycle = [_weight(case, n, space) for n in names if n.startswith("cyc")]
    seq = pre + cycle * 3
    starts = len(pre) + len(cycle)
    rows = [[sup_metric(seq[mu], seq[nu]) for nu in range(mu, len(seq))] for mu in range(len(seq))]
    forward = _inf_sup(rows, starts) == ZERO
    if forward != weight_net_is_forward_cauchy(cycle):
        return "forward Cauchy test of the weight net disagrees with direct evaluation"
    if not forward:
        return None
    limit = weight_net_limit(cycle)
    for n in names:
        if n.startswith("xi"):
            xi = _weight(case, n, space)
            direct = _inf_sup([[sup_metric(phi, xi)] for phi in seq], starts)
            if sup_metric(limit, xi) != direct:
                return f"limit is not a Yoneda limit against {n}"
    if all(is_flat(phi) for phi in cycle) and not is_flat(limit):
        return "limit of flat weights is not flat"
    return None


def check_directed_complete(case: Template) -> Optional[str]:
    if not is_directed_complete(iota_met(_space(case))):
        return "underlying order is not directed complete"
    return None


def check_main_theorem(case: Template) -> Optional[str]:
    space = _space(case)
    sober = is_sober(alexandroff(space)).sober
    complete = smyth_classify(space).complete
    iso = yoneda_completion(space).iso_flag
    if not sober == complete == iso:
        return f"sober={sober}, Smyth complete={complete}, Yoneda fixed point={iso}"
    return None


def check_completable_chain(case: Template) -> Optional[str]:
    space = _space(case)
    if not smyth_classify(space).completable:
        return "finite space is not Smyth completable"
    sob = sobrify(alexandroff(space))
    if specialization(sob.approach) != sob.dist:
        return "sobrification is not metric"
    yon = yoneda_completion(space)
    if cauchy_completion(space).completed != yon.completed:
        return "sobrification is not generated by the Cauchy completion"
    if not yoneda_completion(yon.completed).iso_flag:
        return "Yoneda completion is not idempotent"
    return None


def check_sober_yoneda_complete(case: Template) -> Optional[str]:
    space = _approach(case)
    if is_sober(space).sober and not yoneda_complete_check(specialization(space)):
        return "sober approach space with a Yoneda incomplete specialization metric"
    return None


def check_cauchy_completion(case: Template) -> Optional[str]:
    space = _space(case)
    cau, yon = cauchy_completion(space), yoneda_completion(space)
    if cau.completed != yon.completed or cau.flats != yon.flats:
        return "Cauchy completion differs from the Yoneda completion"
    return None


# half line


def case_probe_grid(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    for k, (x, subset) in enumerate(probe_grid(_pool(cfg))):
        case["probe"][f"p{k}"] = (x, subset)
    return case


def check_delta_gamma(case: Template) -> Optional[str]:
    for name, (x, subset) in case["probe"].items():
        predicted = (
            x.is_infinite and subset.nonempty and subset.sup.is_infinite and not subset.contains_infinity
        )
        if (delta_P(x, subset) != gamma_dR(x, subset)) != predicted:
            return f"probe {name}: disagreement outside the predicted set"
    return None


def check_p_sobriety(case: Template) -> Optional[str]:
    for name, (x, subset) in case["probe"].items():
        if subset.nonempty and p_sobriety_cases(x, subset) != delta_P(x, subset):
            return f"probe {name}: case value differs from delta_P"
    return None


SEQUENCE_PROBES = 20


def _draw_sequence(rng: np.random.Generator, pool: List[ExtVal]) -> RationalSeq:
    finite = [v for v in pool if not v.is_infinite]
    kind = ("const", "affine", "harmonic", "alternating", "divergent")[int(rng.integers(5))]
    if kind == "divergent":
        prefix = sorted(gen.draw_value(rng, finite) for _ in range(int(rng.integers(1, 4))))
        return RationalSeq("divergent", tuple(prefix))
    prefix = tuple(gen.draw_value(rng, pool) for _ in range(int(rng.integers(0, 3))))
    if kind == "const":
        return RationalSeq("const", prefix, (), gen.draw_value(rng, pool))
    a = gen.draw_value(rng, finite).fraction
    b = Fraction(int(rng.integers(-2, 3)), 2)
    if kind == "affine":
        return RationalSeq("affine", prefix, (a, abs(b)))
    if kind == "alternating":
        return RationalSeq("alternating", prefix, (a, gen.draw_value(rng, finite).fraction))
    return RationalSeq("harmonic", prefix, (a + abs(b), b))


def case_sequence(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    case["seq"]["s"] = _draw_sequence(rng, pool)
    for k in range(SEQUENCE_PROBES):
        case["value"][f"x{k}"] = gen.draw_value(rng, pool) if rng.random() < 0.7 else _rational(rng)
    return case


def check_sequence_convergence(case: Template) -> Optional[str]:
    seq = case["seq"]["s"]
    probes = [v for n, v in case["value"].items() if n.startswith("x")]
    for metric in ("dL", "dR"):
        cls = classify_seq(seq, metric)
        if cls.bicauchy and not cls.forward_cauchy:
            return f"biCauchy but not forward Cauchy under {metric}"
        for x in probes:
            inf_sup, sup_inf = tail_limits_seq(seq, metric, x)
            if inf_sup < sup_inf:
                return f"sup-inf {sup_inf} exceeds inf-sup {inf_sup} at {x} under {metric}"
            if not cls.forward_cauchy:
                continue
            if inf_sup != sup_inf:
                return f"inf-sup {inf_sup} differs from sup-inf {sup_inf} at {x} under {metric}"
    terms = [seq.term(n) for n in range(1, seq.start + 1)]
    nondecreasing = not seq.oscillates and seq.direction >= 0 and all(a <= b for a, b in zip(terms, terms[1:]))
    if nondecreasing and not classify_seq(seq, "dR").forward_cauchy:
        return "nondecreasing sequence is not forward Cauchy under dR"
    if classify_seq(seq, "dR").forward_cauchy and yoneda_limit_seq(seq, "dR") != seq.limit:
        return "Yoneda limit under dR is not the limit of the sequence"
    return None


def case_flat_dr(rng: np.random.Generator, cfg) -> Template:
    case = empty_template()
    pool = _pool(cfg)
    case["value"]["a"] = gen.draw_value(rng, pool)
    for k in range(4):
        case["value"][f"x{k}"] = gen.draw_value(rng, [v for v in pool if not v.is_infinite])
    return case


def check_halfline_completion(case: Template) -> Optional[str]:
    a = _value(case, "a")
    weight = flat_weight_dR(a)
    seq = weight.generating_sequence()
    cls = classify_seq(seq, "dR")
    if not cls.forward_cauchy:
        return "generating sequence is not forward Cauchy under dR"
    if weight.representable != (not a.is_infinite) or cls.bicauchy != weight.representable:
        return "representability, finiteness and biCauchy disagree"
    if yoneda_limit_seq(seq, "dR") != a:
        return "generating sequence does not converge to a"
    for name, x in case["value"].items():
        if name.startswith("x") and net_weight_seq(seq, x) != weight(x):
            return f"net weight differs from phi_a at {x}"
    return None


# registry lookups resolve case and check functions by name
CASES = {name: fn for name, fn in globals().items() if name.startswith("case_")}
CHECKS = {name: fn for name, fn in globals().items() if name.startswith("check_")}
