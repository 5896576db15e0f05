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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entqkd/information.hpp"
#include "entqkd/linalg.hpp"
#include "entqkd/measurements.hpp"
#include "entqkd/states.hpp"

namespace entqkd {

// Trace-preserving single-qubit channel in Kraus form.
struct Channel {
  std::vector<Mat2> kraus;
};

// Throws a validation error unless sum_m K_m^dagger K_m = 1 within tol.
void validate_channel(const Channel& ch, double tol = 1e-10);

Channel identity_channel();
// Fibre-like polarisation drift U(theta) = cos(theta) 1 - i sin(theta) sigma_y.
Channel rotation_channel(double theta);
// Kraus set {sqrt(1 - 3p/4) 1, sqrt(p/4) sigma_x, sqrt(p/4) sigma_y, sqrt(p/4) sigma_z}.
Channel depolarizing_channel(double p);

// sum_m (1 (x) K_m) rho (1 (x) K_m)^dagger. Alice's reduced state is untouched.
TwoQubitState apply_to_bob(const Channel& ch, const TwoQubitState& state);

using BasisPair = std::pair<Basis, Basis>;

struct AttackRecord {
  TwoQubitState post_state;
  // Eve's classical record: "<basis>,<outcome>".
  std::vector<std::string> eve_outcomes;
  // P(a, b, e | basisA, basisB) for every basis pair in {x, y, z}^2. A and B
  // labels are "+1" / "-1".
  std::map<BasisPair, TripartiteTable> tables;
  // Explicit separable decomposition of post_state.
  std::vector<ProductTerm> mixture;
};

// Eve picks one of `bases` uniformly, measures Bob's qubit and resends the
// eigenstate she observed. Usage error for an empty basis set.
AttackRecord intercept_resend(const std::vector<Basis>& bases, const TwoQubitState& state);

// Joint table over the protocol's rounds: A and B labels "<basis>,<outcome>"
// with the uniform basis weights folded in, E the attack's record.
TripartiteTable attack_table(const AttackRecord& record, const Protocol& protocol);

}  // namespace entqkd
