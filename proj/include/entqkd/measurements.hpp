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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entqkd/linalg.hpp"
#include "entqkd/states.hpp"

namespace entqkd {

enum class Basis { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Basis, 3> kAllBases{Basis::X, Basis::Y, Basis::Z};

inline int pauli_index(Basis b) { return static_cast<int>(b) + 1; }
inline std::size_t basis_index(Basis b) { return static_cast<std::size_t>(b); }
char basis_letter(Basis b);
std::optional<Basis> basis_from_letter(char c);

// Outcomes are +1 / -1; index 0 is +1.
inline std::size_t outcome_index(int outcome) { return outcome > 0 ? 0 : 1; }
inline int outcome_value(std::size_t index) { return index == 0 ? 1 : -1; }

// Normalised +-1 eigenvector of the Pauli operator for the basis, with the
// phase convention of hermitian_eig.
const Vec2& basis_vector(Basis b, int outcome);
const Mat2& basis_projector(Basis b, int outcome);

enum class ProtocolKind { FourState, SixState };

struct Protocol {
  ProtocolKind kind = ProtocolKind::FourState;
  std::vector<Basis> bases;
  // Expected sign of a*b for a round with matching bases, per basis (x, y, z).
  std::array<int, 3> correlation_signs{1, -1, 1};

  static Protocol four_state();
  static Protocol six_state();

  bool uses(Basis b) const;
  double basis_probability() const { return 1.0 / static_cast<double>(bases.size()); }
  int correlation_sign(Basis b) const { return correlation_signs[basis_index(b)]; }
  std::string name() const;
};

bool operator==(const Protocol& a, const Protocol& b);

// Throws a usage error when the sign table or basis list is malformed.
void validate_protocol(const Protocol& p);

inline constexpr double kDistributionTol = 1e-9;

// Observed P(basisA, a, basisB, b) for uniformly chosen bases. Entries for
// bases outside the protocol are zero and never read.
class JointDistribution {
 public:
  using Table = std::array<double, 36>;

  const Protocol& protocol() const { return protocol_; }
  const Table& table() const { return probs_; }

  double prob(Basis ba, int a, Basis bb, int b) const { return probs_[index(ba, a, bb, b)]; }
  // P(a, b | ba, bb).
  double conditional(Basis ba, int a, Basis bb, int b) const;
  double pair_weight(Basis ba, Basis bb) const;

  static std::size_t index(Basis ba, int a, Basis bb, int b) {
    return ((basis_index(ba) * 2 + outcome_index(a)) * 3 + basis_index(bb)) * 2 +
           outcome_index(b);
  }

 private:
  friend JointDistribution make_distribution(const Protocol&, const Table&, double);
  JointDistribution(Protocol p, const Table& t) : protocol_(std::move(p)), probs_(t) {}

  Protocol protocol_;
  Table probs_{};
};

// Validates nonnegativity, total mass, per-pair conditional normalisation and
// the uniform pair weight 1/n^2. Throws a validation error.
JointDistribution make_distribution(const Protocol& protocol, const JointDistribution::Table& t,
                                    double tol = kDistributionTol);

// P(i, a, j, b) = q_i q_j Tr(rho P_{i,a} (x) P_{j,b}).
JointDistribution joint_distribution(const TwoQubitState& state, const Protocol& protocol);

// Sifted-key error rate. Usage error when no matching-basis mass exists.
double qber(const JointDistribution& dist);

// Per-basis sifted error P(a*b != sign | i, i).
double basis_error(const JointDistribution& dist, Basis b);

// Pauli table with entries outside the protocol's reach left empty.
using PartialPauliTable = std::array<std::array<std::optional<double>, 4>, 4>;

PartialPauliTable observed_pauli_table(const JointDistribution& dist);

// Full table from a partial one; usage error naming the first missing entry.
PauliTable require_complete(const PartialPauliTable& t);

// Source for the shipped protocols: Alice measures her half of |Phi+> in a
// uniformly chosen protocol basis, which prepares the conjugate eigenstate on
// Bob's side.
SourceState protocol_source(const Protocol& protocol);

}  // namespace entqkd
