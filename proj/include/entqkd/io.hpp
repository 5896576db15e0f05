// Copyright 2026 The entqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON documents exchanged by the command line tool.
//
// Distribution:
//   {"protocol": "four-state" | "six-state",
//    "basis_probs": "uniform",
//    "probs": {"<basisA>,<a>,<basisB>,<b>": p, ...},   // a, b in "+1" | "-1"
//    "qber": e}                                          // written, ignored on load
// Every key for the protocol's basis pairs must be present, no others may be.
// Probabilities must sum to 1 within 1e-9.
//
// Tripartite table:
//   {"alphabet_a": [...], "alphabet_b": [...], "alphabet_e": [...],
//    "probs": [[[P(a,b,e) for e] for b] for a]}

#include <span>
#include <string>

#include "json.hpp"

#include "entqkd/information.hpp"
#include "entqkd/measurements.hpp"
#include "entqkd/witnesses.hpp"

namespace entqkd {

inline constexpr double kSumTolerance = 1e-9;

nlohmann::json distribution_to_json(const JointDistribution& dist);
// Validation error for any schema or invariant violation.
JointDistribution distribution_from_json(const nlohmann::json& doc);
JointDistribution distribution_from_json_text(const std::string& text);

nlohmann::json witness_to_json(const Witness& w);

// verdict, witness, value, margin, min_eigenvalue, qber and optionally the
// pseudo-mixture terms (EW4 witnesses only).
nlohmann::json detection_to_json(const DetectionResult& result, const JointDistribution& dist,
                                 double tol, bool emit_pseudo_mixture);

nlohmann::json tripartite_to_json(const TripartiteTable& t);
TripartiteTable tripartite_from_json(const nlohmann::json& doc);
TripartiteTable tripartite_from_json_text(const std::string& text);

// I(A;B) of the common marginal, I(A;B|E) per candidate and their minimum.
nlohmann::json info_report(std::span<const TripartiteTable> candidates);

// Reconstructed state, its Pauli table and the partial-transpose verdict.
nlohmann::json tomography_report(const JointDistribution& dist, double tol);

std::string witness_index_label(std::size_t i, std::size_t j);

}  // namespace entqkd
