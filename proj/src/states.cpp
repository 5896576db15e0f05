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

#include "entqkd/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

Mat4 from_pauli_coefficients(const PauliTable& coeff) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double c = coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != 0.0) m += c * pauli_product(i, j);
    }
  return m;
}

PauliTable pauli_expectations(const Mat4& m) {
  PauliTable t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          hs_inner(pauli_product(i, j), m).real();
  return t;
}

TwoQubitState make_state(const Mat4& rho, double tol) {
  if (!rho.is_finite()) throw_validation("state: non-finite entry");
  const double defect = rho.hermiticity_defect();
  if (defect > tol)
    throw_validation("state: not Hermitian (defect " + std::to_string(defect) + ")");
  const Mat4 herm = 0.5 * (rho + rho.adjoint());
  const auto eig = hermitian_eig(herm, tol);
  if (eig.eigenvalues[0] < -tol)
    throw_validation("state: negative eigenvalue " + std::to_string(eig.eigenvalues[0]));
  const double tr = herm.trace().real();
  if (std::abs(tr - 1.0) > tol)
    throw_validation("state: trace is " + std::to_string(tr) + ", expected 1");
  return TwoQubitState(herm, pauli_expectations(herm));
}

TwoQubitState state_from_pauli(const PauliTable& t, double tol) {
  return make_state(0.25 * from_pauli_coefficients(t), tol);
}

Vec4 bell_vector(Bell which) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (which) {
    case Bell::PhiPlus: return {h, 0.0, 0.0, h};
    case Bell::PhiMinus: return {h, 0.0, 0.0, -h};
    case Bell::PsiPlus: return {0.0, h, h, 0.0};
    case Bell::PsiMinus: return {0.0, h, -h, 0.0};
  }
  throw_usage("unknown Bell state");
}

TwoQubitState bell_state(Bell which) { return make_state(Mat4::projector(bell_vector(which))); }

TwoQubitState maximally_mixed() { return make_state(0.25 * Mat4::identity()); }

TwoQubitState werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw_usage("werner: p must lie in [0, 1]");
  const Mat4 phi = Mat4::projector(bell_vector(Bell::PhiPlus));
  return make_state(p * phi + (1.0 - p) * 0.25 * Mat4::identity());
}

TwoQubitState pure_state(const Vec4& psi) {
  const double n = norm(psi);
  if (!std::isfinite(n) || n == 0.0) throw_usage("pure_state: zero or non-finite vector");
  if (std::abs(n - 1.0) > 1e-10) throw_usage("pure_state: vector is not normalised");
  return make_state(Mat4::projector(psi) * (1.0 / (n * n)));
}

TwoQubitState mixture(const std::vector<double>& weights,
                      const std::vector<TwoQubitState>& states) {
  if (weights.size() != states.size() || weights.empty())
    throw_usage("mixture: weights and states must be nonempty and of equal length");
  double total = 0.0;
  Mat4 rho{};
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < 0.0) throw_usage("mixture: negative weight");
    total += weights[k];
    rho += weights[k] * states[k].rho();
  }
  if (std::abs(total - 1.0) > 1e-12) throw_usage("mixture: weights do not sum to 1");
  return make_state(rho);
}

PptResult is_ppt(const TwoQubitState& state, double tol) {
  const auto eig = hermitian_eig(partial_transpose(state.rho(), Side::B));
  PptResult out;
  out.min_eigenvalue = eig.eigenvalues[0];
  if (out.min_eigenvalue < -tol) {
    out.verdict = PptVerdict::NPT;
    out.neg_eigenvector = eig.eigenvectors[0];
  }
  return out;
}

Mat2 SourceState::alice_reduced() const { return partial_trace_b(Mat4::projector(purification)); }

Mat2 SourceState::signal_average() const {
  Mat2 m{};
  for (std::size_t i = 0; i < signals.size(); ++i)
    m += probabilities[i] * Mat2::projector(signals[i]);
  return m;
}

SourceState make_source(std::vector<double> probabilities, std::vector<Vec2> signals,
                        const Vec4& purification, double tol) {
  if (probabilities.empty() || probabilities.size() != signals.size())
    throw_usage("source: need one probability per signal");
  double total = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw_validation("source: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw_validation("source: probabilities do not sum to 1");
  for (const auto& s : signals)
    if (std::abs(norm(s) - 1.0) > tol) throw_validation("source: signal not normalised");
  if (std::abs(norm(purification) - 1.0) > tol)
    throw_validation("source: purification not normalised");

  SourceState src{std::move(probabilities), std::move(signals), purification};
  const Mat2 bob = partial_trace_a(Mat4::projector(purification));
  if ((bob - src.signal_average()).frobenius_norm() > tol)
    throw_validation("source: purification does not reproduce the signal ensemble");
  return src;
}

}  // namespace entqkd
