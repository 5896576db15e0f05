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
#include <vector>

#include "entqkd/linalg.hpp"

namespace entqkd {

// t[i][j] = Tr(rho sigma_i (x) sigma_j), i, j in {0, x, y, z}.
using PauliTable = std::array<std::array<double, 4>, 4>;

inline constexpr double kDefaultStateTol = 1e-10;

// Operator sum_{ij} coeff[i][j] sigma_i (x) sigma_j.
Mat4 from_pauli_coefficients(const PauliTable& coeff);

// Real parts of Tr(m sigma_i (x) sigma_j).
PauliTable pauli_expectations(const Mat4& m);

// A validated two-qubit density matrix. Only constructible through
// make_state / standard-state helpers, so every instance satisfies the
// density-matrix invariants.
class TwoQubitState {
 public:
  const Mat4& rho() const { return rho_; }
  const PauliTable& pauli() const { return pauli_; }

  Mat2 reduced_a() const { return partial_trace_b(rho_); }
  Mat2 reduced_b() const { return partial_trace_a(rho_); }

  double expectation(const Mat4& op) const { return hs_inner(op, rho_).real(); }

 private:
  friend TwoQubitState make_state(const Mat4& rho, double tol);
  TwoQubitState(const Mat4& rho, const PauliTable& pauli) : rho_(rho), pauli_(pauli) {}

  Mat4 rho_;
  PauliTable pauli_;
};

// Validates Hermiticity, unit trace and positivity (minimum eigenvalue >= -tol).
// The stored matrix is the Hermitian part of the input.
TwoQubitState make_state(const Mat4& rho, double tol = kDefaultStateTol);

// rho = 1/4 sum t_ij sigma_i (x) sigma_j.
TwoQubitState state_from_pauli(const PauliTable& t, double tol = kDefaultStateTol);

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

Vec4 bell_vector(Bell which);

TwoQubitState bell_state(Bell which);
TwoQubitState maximally_mixed();
// p |Phi+><Phi+| + (1 - p) 1/4.
TwoQubitState werner(double p);
// |psi><psi| / <psi|psi>; psi must be nonzero and normalised within 1e-10.
TwoQubitState pure_state(const Vec4& psi);

// Convex combination of states; weights must form a probability vector.
TwoQubitState mixture(const std::vector<double>& weights,
                      const std::vector<TwoQubitState>& states);

enum class PptVerdict { PPT, NPT };

struct PptResult {
  PptVerdict verdict = PptVerdict::PPT;
  double min_eigenvalue = 0.0;
  // Eigenvector of rho^{T_B} for min_eigenvalue, present when NPT.
  std::optional<Vec4> neg_eigenvector;
};

inline constexpr double kDefaultPptTol = 1e-9;

// Peres-Horodecki test on rho^{T_B}; exact for two qubits.
PptResult is_ppt(const TwoQubitState& state, double tol = kDefaultPptTol);

// Prepare-and-measure view of a source: Alice sends |phi_i> with probability
// p_i, equivalently she measures half of the purification
// sum_i sqrt(p_i) |e_i>|phi_i>. For qubit protocols the purification is a
// two-qubit vector whose Alice reduced state is fixed by the protocol.
struct SourceState {
  std::vector<double> probabilities;
  std::vector<Vec2> signals;
  Vec4 purification{};

  Mat2 alice_reduced() const;
  // sum_i p_i |phi_i><phi_i|
  Mat2 signal_average() const;
};

// Checks the probability vector, signal normalisation and that the
// purification reproduces the signal ensemble on Bob's side.
SourceState make_source(std::vector<double> probabilities, std::vector<Vec2> signals,
                        const Vec4& purification, double tol = 1e-10);

}  // namespace entqkd
