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
"""Defaults of the property-law suite and the law registry.

Each law names the case generator and the check in conformance.laws, the
module whose operations it exercises, a plain statement of what is asserted,
the named definition, lemma or theorem the law comes from,
a case_factor scaling the configured number of cases and a carrier bound that
caps max_points for the expensive laws.
"""

from typing import Any, Dict

SUITE_DEFAULTS: Dict[str, Any] = {
    "seed": 42,
    "cases": 200,
    "max_points": 6,
    "value_pool": ["0", "1/2", "1", "3/2", "2", "3", "inf"],
    "workers": 1,
    "inject_mutant": False,
    "laws": [],
}

LAW_REGISTRY: Dict[str, Dict[str, Any]] = {
    "residuation": {
        "statement": "b (-) a <= c iff b <= a + c on [0, inf]",
        "reference": "Example (Lawvere metric)",
        "module": "extarith",
        "ops": ["truncated_minus", "add"],
        "case": "case_values",
        "check": "check_residuation",
        "case_factor": 1,
        "max_points": 0,
    },
    "addition-monoid-lattice": {
        "statement": "+ is a commutative monoid with unit 0, min and max distribute",
        "reference": "Example (Lawvere metric)",
        "module": "extarith",
        "ops": ["add", "ext_min", "ext_max"],
        "case": "case_values",
        "check": "check_monoid_lattice",
        "case_factor": 1,
        "max_points": 0,
    },
    "halfline-lawvere-metrics": {
        "statement": "d_L and d_R are reflexive and satisfy the triangle inequality",
        "reference": "Definition (metric space)",
        "module": "extarith",
        "ops": ["dist_l", "dist_r"],
        "case": "case_values",
        "check": "check_halfline_metrics",
        "case_factor": 1,
        "max_points": 0,
    },
    "space-constructions": {
        "statement": "opposite is an involution, symmetrization idempotent, the separated quotient separated",
        "reference": "Definition (symmetrization)",
        "module": "space",
        "ops": ["opposite", "symmetrization", "separated_quotient"],
        "case": "case_space",
        "check": "check_space_constructions",
        "case_factor": 1,
        "max_points": 6,
    },
    "isometric-implies-nonexpansive": {
        "statement": "every isometric map is nonexpansive",
        "reference": "Definition (non-expansive map)",
        "module": "space",
        "ops": ["check_isometric", "check_nonexpansive"],
        "case": "case_space_map",
        "check": "check_isometric_nonexpansive",
        "case_factor": 1,
        "max_points": 6,
    },
    "generator-soundness": {
        "statement": "generated spaces validate and generated weights and coweights obey their laws",
        "reference": "Definition (weight)",
        "module": "shell",
        "ops": ["generate_space", "validate", "check_weight"],
        "case": "case_space_weights",
        "check": "check_generator_soundness",
        "case_factor": 1,
        "max_points": 6,
    },
    "yoneda-lemma": {
        "statement": "d-bar(d(-,x), phi) = phi(x) and the Yoneda embedding is isometric",
        "reference": "Lemma (Yoneda)",
        "module": "weightcalc",
        "ops": ["representable", "sup_metric"],
        "case": "case_space_weights",
        "check": "check_yoneda_lemma",
        "case_factor": 1,
        "max_points": 6,
    },
    "cauchy-weight-calculus": {
        "statement": "a Cauchy weight and its adjoint compute tensors and distances, preserve max and min",
        "reference": "Definition (Cauchy weight)",
        "module": "weightcalc",
        "ops": ["is_cauchy", "tensor", "left_adjoint_candidate"],
        "case": "case_cauchy_weight",
        "check": "check_cauchy_weight",
        "case_factor": 1,
        "max_points": 6,
    },
    "flat-iff-distributive": {
        "statement": "flat weights are exactly those whose tensor distributes over binary max",
        "reference": "Proposition (flat weight)",
        "module": "weightcalc",
        "ops": ["is_flat", "flat_by_distributivity", "distributes"],
        "case": "case_space_weights",
        "check": "check_flat_distributive",
        "case_factor": 1,
        "max_points": 6,
    },
    "cauchy-iff-flat": {
        "statement": "on a finite carrier a weight is Cauchy iff it is flat",
        "reference": "Proposition (flat weight)",
        "module": "weightcalc",
        "ops": ["is_cauchy", "is_flat"],
        "case": "case_space_weights",
        "check": "check_cauchy_iff_flat",
        "case_factor": 1,
        "max_points": 6,
    },
    "weight-closure": {
        "statement": "weights are closed under min, max, phi + alpha and phi - alpha",
        "reference": "Definition (weight)",
        "module": "weightcalc",
        "ops": ["vec_min", "vec_max", "shift_up", "shift_down"],
        "case": "case_space_weights",
        "check": "check_weight_closure",
        "case_factor": 1,
        "max_points": 6,
    },
    "coreflection-maximal": {
        "statement": "the coreflection of g is the largest weight below g",
        "reference": "Definition (weight)",
        "module": "weightcalc",
        "ops": ["weight_coreflection"],
        "case": "case_space_weights",
        "check": "check_coreflection",
        "case_factor": 1,
        "max_points": 6,
    },
    "flat-enumeration-complete": {
        "statement": "every flat coreflection of a vector is one of the enumerated flat weights",
        "reference": "Proposition (flat weight)",
        "module": "weightcalc",
        "ops": ["enumerate_flat_weights", "weight_coreflection", "is_flat"],
        "case": "case_flat_candidates",
        "check": "check_flat_enumeration",
        "case_factor": 1,
        "max_points": 6,
    },
    "pushforward-images": {
        "statement": "images along nonexpansive maps keep flat and Cauchy weights, f(phi) tensor psi = phi tensor psi o f",
        "reference": "Definition (image of a weight)",
        "module": "weightcalc",
        "ops": ["pushforward", "pullback"],
        "case": "case_pushforward",
        "check": "check_pushforward",
        "case_factor": 1,
        "max_points": 6,
    },
    "finite-collapse": {
        "statement": "a finite approach distance is the min over singletons and Gamma(Omega(A)) = A",
        "reference": "Definition (Alexandroff distance)",
        "module": "approach",
        "ops": ["validate_approach", "alexandroff", "specialization"],
        "case": "case_approach",
        "check": "check_finite_collapse",
        "case_factor": 1,
        "max_points": 6,
    },
    "a4-iff-a4prime": {
        "statement": "the transitivity axiom and its epsilon form accept and reject the same tables",
        "reference": "Definition (approach space)",
        "module": "approach",
        "ops": ["a4_violations", "a4prime_violations", "validate_approach"],
        "case": "case_approach_table",
        "check": "check_a4_a4prime",
        "case_factor": 1,
        "max_points": 4,
    },
    "regular-iff-weight": {
        "statement": "regular functions of Gamma(X, d) are exactly the weights of (X, d)",
        "reference": "Definition (regular function)",
        "module": "approach",
        "ops": ["is_regular", "check_weight"],
        "case": "case_space_weights",
        "check": "check_regular_iff_weight",
        "case_factor": 1,
        "max_points": 6,
    },
    "regular-closure": {
        "statement": "regular functions are closed under sup, binary min, + alpha and - alpha",
        "reference": "Proposition (regular functions)",
        "module": "approach",
        "ops": ["is_regular"],
        "case": "case_space_weights",
        "check": "check_regular_closure",
        "case_factor": 1,
        "max_points": 6,
    },
    "contraction-criteria": {
        "statement": "a map is a contraction iff pulling back regular functions keeps them regular",
        "reference": "Proposition (contraction by regular frame)",
        "module": "approach",
        "ops": ["is_contraction"],
        "case": "case_approach_map",
        "check": "check_contraction_criteria",
        "case_factor": 1,
        "max_points": 5,
    },
    "reconstruct-delta": {
        "statement": "delta(x, A) = sup of the regular functions vanishing on A",
        "reference": "Proposition (regular functions)",
        "module": "approach",
        "ops": ["regular_closure", "reconstruct_delta"],
        "case": "case_approach",
        "check": "check_reconstruct_delta",
        "case_factor": 0.25,
        "max_points": 3,
    },
    "hat-calculus": {
        "statement": "the hat transform reflects order, detects xi <= phi, commutes with sup, min, + alpha and - alpha",
        "reference": "Theorem (sobrification)",
        "module": "sobriety",
        "ops": ["hat", "hat_transform", "sobrify"],
        "case": "case_hat_tuples",
        "check": "check_hat_calculus",
        "case_factor": 0.5,
        "max_points": 5,
    },
    "prime-iff-flat": {
        "statement": "approach primes of Gamma(X, d) are exactly the flat weights of (X, d)",
        "reference": "Lemma (metric approach prime)",
        "module": "sobriety",
        "ops": ["prime_oracle", "direct_counterexample", "is_flat"],
        "case": "case_approach_regulars",
        "check": "check_prime_oracle",
        "case_factor": 25,
        "max_points": 6,
    },
    "sobrification-idempotent": {
        "statement": "sobrifying a sobrification adds no primes",
        "reference": "Theorem (sobrification)",
        "module": "sobriety",
        "ops": ["sobrify", "enumerate_primes"],
        "case": "case_approach",
        "check": "check_sobrification_idempotent",
        "case_factor": 1,
        "max_points": 6,
    },
    "top-sober": {
        "statement": "omega(T) is sober iff T is sober, and a sober approach space has a sober topology",
        "reference": "Definition (sober)",
        "module": "ordtop",
        "ops": ["is_sober_top", "omega_top", "iota_app", "is_sober"],
        "case": "case_topology",
        "check": "check_top_sober",
        "case_factor": 1,
        "max_points": 5,
    },
    "functor-squares": {
        "statement": "Gamma and omega commute, iota after omega is the identity, the counit is a contraction",
        "reference": "Definition (underlying topology)",
        "module": "ordtop",
        "ops": ["square_checks"],
        "case": "case_topology",
        "check": "check_functor_squares",
        "case_factor": 1,
        "max_points": 5,
    },
    "sobrification-is-yoneda-completion": {
        "statement": "the specialization metric of the sobrification of Gamma(X, d) is the Yoneda completion",
        "reference": "Theorem (sobrification of a metric space)",
        "module": "sobriety",
        "ops": ["sobrify", "yoneda_completion"],
        "case": "case_space",
        "check": "check_sobrification_yoneda",
        "case_factor": 2.5,
        "max_points": 6,
    },
    "universal-extension": {
        "statement": "a contraction into a sober space extends uniquely along eta",
        "reference": "Theorem (sobrification)",
        "module": "sobriety",
        "ops": ["universal_extension", "extension_transform", "extension_majorant_gap"],
        "case": "case_extension",
        "check": "check_universal_extension",
        "case_factor": 1,
        "max_points": 5,
    },
    "net-prime": {
        "statement": "a forward Cauchy net gives an approach prime through its tail sets",
        "reference": "Proposition (flat weight)",
        "module": "sobriety",
        "ops": ["net_prime", "prime_oracle"],
        "case": "case_space_net",
        "check": "check_net_prime",
        "case_factor": 1,
        "max_points": 6,
    },
    "weight-net-limits": {
        "statement": "inf-sup of a forward Cauchy net of weights is its Yoneda limit under d-bar",
        "reference": "Proposition (supremum)",
        "module": "completion",
        "ops": ["weight_net_limit", "weight_net_is_forward_cauchy"],
        "case": "case_weight_net",
        "check": "check_weight_net_limits",
        "case_factor": 1,
        "max_points": 6,
    },
    "forward-cauchy-convergence": {
        "statement": "for a forward Cauchy net inf-sup and sup-inf of d(x, x_n) agree",
        "reference": "Definition (Yoneda limit)",
        "module": "completion",
        "ops": ["classify_net", "tail_limits", "yoneda_limits"],
        "case": "case_space_net",
        "check": "check_forward_cauchy_convergence",
        "case_factor": 1,
        "max_points": 6,
    },
    "directed-complete": {
        "statement": "the underlying order of a finite space is directed complete",
        "reference": "Definition (underlying order)",
        "module": "completion",
        "ops": ["iota_met", "is_directed_complete"],
        "case": "case_space",
        "check": "check_directed_complete",
        "case_factor": 1,
        "max_points": 6,
    },
    "bicauchy-bridge": {
        "statement": "a forward Cauchy net is biCauchy iff its weight is Cauchy, its coweight is then the adjoint",
        "reference": "Proposition (biCauchy net)",
        "module": "completion",
        "ops": ["classify_net", "net_weight", "net_coweight", "is_cauchy"],
        "case": "case_space_net",
        "check": "check_bicauchy_bridge",
        "case_factor": 0.5,
        "max_points": 6,
    },
    "sober-iff-smyth-complete": {
        "statement": "Gamma(X, d) is sober iff (X, d) is Smyth complete iff it is a fixed point of the Yoneda completion",
        "reference": "Theorem (sober iff Smyth complete)",
        "module": "completion",
        "ops": ["is_sober", "smyth_classify", "yoneda_completion"],
        "case": "case_space",
        "check": "check_main_theorem",
        "case_factor": 2.5,
        "max_points": 6,
        "mutant_target": True,
    },
    "completable-chain": {
        "statement": "finite spaces are Smyth completable, with a metric sobrification and an idempotent completion",
        "reference": "Theorem (Smyth completable)",
        "module": "completion",
        "ops": ["smyth_classify", "sobrify", "cauchy_completion", "yoneda_completion"],
        "case": "case_space",
        "check": "check_completable_chain",
        "case_factor": 1,
        "max_points": 6,
    },
    "sober-implies-yoneda-complete": {
        "statement": "the specialization metric of a sober approach space is Yoneda complete",
        "reference": "Theorem (sober implies Yoneda complete)",
        "module": "completion",
        "ops": ["is_sober", "yoneda_complete_check"],
        "case": "case_topology",
        "check": "check_sober_yoneda_complete",
        "case_factor": 1,
        "max_points": 6,
    },
    "cauchy-completion": {
        "statement": "on a finite carrier the Cauchy completion is the Yoneda completion",
        "reference": "Definition (Yoneda completion)",
        "module": "completion",
        "ops": ["cauchy_completion", "yoneda_completion"],
        "case": "case_space",
        "check": "check_cauchy_completion",
        "case_factor": 1,
        "max_points": 6,
    },
    "halfline-delta-vs-gamma": {
        "statement": "delta_P and Gamma(d_R) differ exactly at x = inf, sup A = inf, inf not in A",
        "reference": "Example (real approach)",
        "module": "halfline",
        "ops": ["delta_P", "gamma_dR"],
        "case": "case_probe_grid",
        "check": "check_delta_gamma",
        "case_factor": 0,
        "max_points": 0,
    },
    "halfline-p-sobriety": {
        "statement": "the three-case distance through the flat weights of d_R equals delta_P",
        "reference": "Proposition (P is sober)",
        "module": "halfline",
        "ops": ["p_sobriety_cases", "delta_P"],
        "case": "case_probe_grid",
        "check": "check_p_sobriety",
        "case_factor": 0,
        "max_points": 0,
    },
    "halfline-sequence-convergence": {
        "statement": "forward Cauchy sequences on the half line have equal inf-sup and sup-inf distances",
        "reference": "Example (d_L and d_R)",
        "module": "halfline",
        "ops": ["classify_seq", "tail_limits_seq", "yoneda_limit_seq"],
        "case": "case_sequence",
        "check": "check_sequence_convergence",
        "case_factor": 1,
        "max_points": 0,
    },
    "halfline-completion": {
        "statement": "flat weights of ([0, inf), d_R) are phi_a, representable iff a < inf, generated by a sequence",
        "reference": "Example (Yoneda completion)",
        "module": "halfline",
        "ops": ["flat_weight_dR", "net_weight_seq"],
        "case": "case_flat_dr",
        "check": "check_halfline_completion",
        "case_factor": 0.25,
        "max_points": 0,
    },
}
