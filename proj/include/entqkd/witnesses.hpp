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

#include <optional>
#include <vector>

#include "entqkd/linalg.hpp"
#include "entqkd/measurements.hpp"
#include "entqkd/states.hpp"

namespace entqkd {

enum class WitnessClass {
  EW4,      // real combination of sigma_i (x) sigma_j with i, j in {0, x, z}
  OEW,      // |phi_e><phi_e|^{T_B}
  General,  // any real combination over {0, x, y, z}^2
};

// W = sum_ij coefficients[i][j] sigma_i (x) sigma_j. Real coefficients make W
// Hermitian by construction.
struct Witness {
  PauliTable coefficients{};
  std::optional<Vec4> generator;
  WitnessClass class_tag = WitnessClass::General;

  Mat4 matrix() const { return from_pauli_coefficients(coefficients); }
  double trace() const { return 4.0 * coefficients[0][0]; }
};

// Pauli coordinates of an arbitrary Hermitian operator, tagged General.
Witness witness_from_operator(const Mat4& w);

enum class Verdict { Detected, NotDetected };

struct DetectionResult {
  Verdict verdict = Verdict::NotDetected;
  std::optional<Witness> witness;
  // Certified Tr(W rho) when detected; otherwise the smallest value the
  // search could reach (the minimum eigenvalue of the relevant operator).
  double value = 0.0;
  // -min_eigenvalue - tol: positive when detected, negative otherwise.
  double margin = 0.0;
  double min_eigenvalue = 0.0;
};

inline constexpr double kDefaultVerdictTol = 1e-9;

// 1/4 (rho + rho^{T_A} + rho^{T_B} + rho^T).
Mat4 omega(const TwoQubitState& state);
// 1/4 sum_{i,j in {0,x,z}} t_ij sigma_i (x) sigma_j. Usage error if any of
// those nine entries is absent.
Mat4 omega(const PartialPauliTable& table);

// W = W^T = W^{T_B} within tol (Frobenius).
bool is_ew4(const Witness& w, double tol = kDefaultVerdictTol);

// W = 1/2 (Q + Q^{T_B}) with Q = |phi><phi| for a real entangled phi.
// Usage error when phi has an imaginary part above 1e-12, is not normalised
// within 1e-10, or has a Schmidt coefficient <= tol.
Witness witness_from_real_state(const Vec4& phi, double tol = kDefaultVerdictTol);

// Tr(W rho) from 4-state statistics alone. Usage error for a witness outside EW4.
double evaluate_from_data(const Witness& w, const JointDistribution& dist);

// Decides detectability within EW4 by one eigendecomposition of Omega.
DetectionResult detect_4state(const JointDistribution& dist, double tol = kDefaultVerdictTol);

// Tomographic reconstruction from complete (6-state) statistics.
// Validation error when the table is not a density matrix within tol.
TwoQubitState reconstruct_state(const JointDistribution& dist, double tol = kDefaultVerdictTol);

// Tomography plus the partial-transpose test; the witness is the optimal
// |phi_e><phi_e|^{T_B} for the negative eigenvector phi_e.
DetectionResult detect_6state(const JointDistribution& dist, double tol = kDefaultVerdictTol);

struct PseudoTerm {
  double coefficient = 0.0;
  Basis basis_a = Basis::Z;
  int outcome_a = 1;
  Basis basis_b = Basis::Z;
  int outcome_b = 1;
};

// W = sum coefficient * P_{basis_a, outcome_a} (x) P_{basis_b, outcome_b}.
struct PseudoMixture {
  std::vector<PseudoTerm> terms;

  Mat4 reconstruct() const;
  double coefficient_sum() const;
};

// Expansion over the 16 protocol projectors, with the identity on each side
// written as 1/2 (P_{x,+} + P_{x,-}) + 1/2 (P_{z,+} + P_{z,-}). Usage error
// for a witness outside EW4.
PseudoMixture pseudo_mixture(const Witness& w);

// sum_i c_i P(a_i, b_i | basis pair) over the observed conditionals.
double evaluate_pseudo_mixture(const PseudoMixture& pm, const JointDistribution& dist);

// Brute-force minimum of evaluate_from_data over the real-generator family on
// a resolution^3 grid of the real unit 3-sphere (modulo sign), followed by a
// compass search around the best grid point. Independent of Omega.
DetectionResult grid_search_family(const JointDistribution& dist, int resolution,
                                   double tol = kDefaultVerdictTol);

// The fibre-rotation example: generator is the negative-eigenvalue
// eigenvector of (|psi><psi|)^{T_B} with
// psi = cos t |00> + sin t |01> - sin t |10> + cos t |11>.
Witness rotation_example_witness(double theta);

}  // namespace entqkd
