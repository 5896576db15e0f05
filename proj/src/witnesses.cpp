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

#include "entqkd/witnesses.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

namespace {

constexpr std::array<std::size_t, 3> kEw4Indices{0, 1, 3};  // 0, x, z

bool has_y(std::size_t i, std::size_t j) { return i == 2 || j == 2; }

// Assumes phi is real, normalised and entangled.
Witness family_witness(const std::array<double, 4>& phi) {
  Mat4 q{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) q(r, c) = phi[r] * phi[c];
  const Mat4 w = 0.5 * (q + partial_transpose(q, Side::B));
  Witness out;
  out.coefficients = pauli_expectations(w);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (has_y(i, j))
        out.coefficients[i][j] = 0.0;
      else
        out.coefficients[i][j] *= 0.25;
    }
  out.generator = Vec4{phi[0], phi[1], phi[2], phi[3]};
  out.class_tag = WitnessClass::EW4;
  return out;
}

double evaluate_on_table(const Witness& w, const PartialPauliTable& t) {
  double value = 0.0;
  for (std::size_t i : kEw4Indices)
    for (std::size_t j : kEw4Indices) {
      if (!t[i][j]) throw_usage("evaluate_from_data: observed table lacks an x/z entry");
      value += w.coefficients[i][j] * *t[i][j];
    }
  return value;
}

void require_ew4(const Witness& w, const char* who) {
  if (!is_ew4(w)) throw_usage(std::string(who) + ": witness is not in EW4");
}

void require_protocol(const JointDistribution& dist, ProtocolKind kind, const char* who) {
  if (dist.protocol().kind != kind)
    throw_usage(std::string(who) + ": wrong protocol (" + dist.protocol().name() + ")");
}

}  // namespace

Witness witness_from_operator(const Mat4& w) {
  if (w.hermiticity_defect() > 1e-10) throw_usage("witness: operator is not Hermitian");
  Witness out;
  out.coefficients = pauli_expectations(w);
  for (auto& row : out.coefficients)
    for (auto& c : row) c *= 0.25;
  return out;
}

Mat4 omega(const TwoQubitState& state) {
  const Mat4& rho = state.rho();
  return 0.25 * (rho + partial_transpose(rho, Side::A) + partial_transpose(rho, Side::B) +
                 rho.transpose());
}

Mat4 omega(const PartialPauliTable& table) {
  static const char* names = "0xyz";
  Mat4 out{};
  for (std::size_t i : kEw4Indices)
    for (std::size_t j : kEw4Indices) {
      if (!table[i][j])
        throw_usage(std::string("omega: table entry t_") + names[i] + names[j] + " is absent");
      out += (0.25 * *table[i][j]) *
             pauli_product(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

bool is_ew4(const Witness& w, double tol) {
  const Mat4 m = w.matrix();
  return (m - m.transpose()).frobenius_norm() <= tol &&
         (m - partial_transpose(m, Side::B)).frobenius_norm() <= tol;
}

Witness witness_from_real_state(const Vec4& phi, double tol) {
  std::array<double, 4> real{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!std::isfinite(phi[k].real()) || !std::isfinite(phi[k].imag()))
      throw_usage("witness_from_real_state: non-finite component");
    if (std::abs(phi[k].imag()) > 1e-12)
      throw_usage("witness_from_real_state: generator has complex components");
    real[k] = phi[k].real();
  }
  const Vec4 truncated{real[0], real[1], real[2], real[3]};
  if (std::abs(norm(truncated) - 1.0) > 1e-10)
    throw_usage("witness_from_real_state: generator is not normalised");
  const auto schmidt = schmidt_coefficients(truncated);
  if (schmidt[1] <= tol) throw_usage("witness_from_real_state: not an entangled generator");
  return family_witness(real);
}

double evaluate_from_data(const Witness& w, const JointDistribution& dist) {
  require_ew4(w, "evaluate_from_data");
  return evaluate_on_table(w, observed_pauli_table(dist));
}

DetectionResult detect_4state(const JointDistribution& dist, double tol) {
  require_protocol(dist, ProtocolKind::FourState, "detect_4state");
  const Mat4 om = omega(observed_pauli_table(dist));
  const auto eig = hermitian_eig(om);

  DetectionResult out;
  out.min_eigenvalue = eig.eigenvalues[0];
  out.margin = -out.min_eigenvalue - tol;
  out.value = out.min_eigenvalue;
  if (out.min_eigenvalue < -tol) {
    // Omega is real symmetric, so its eigenvectors come out real.
    Witness w = witness_from_real_state(eig.eigenvectors[0], 1e-12);
    out.value = evaluate_from_data(w, dist);
    out.witness = std::move(w);
    out.verdict = Verdict::Detected;
  }
  return out;
}

TwoQubitState reconstruct_state(const JointDistribution& dist, double tol) {
  require_protocol(dist, ProtocolKind::SixState, "reconstruct_state");
  return state_from_pauli(require_complete(observed_pauli_table(dist)), tol);
}

DetectionResult detect_6state(const JointDistribution& dist, double tol) {
  const TwoQubitState rho = reconstruct_state(dist, std::max(tol, 1e-9));
  const PptResult ppt = is_ppt(rho, tol);

  DetectionResult out;
  out.min_eigenvalue = ppt.min_eigenvalue;
  out.margin = -out.min_eigenvalue - tol;
  out.value = out.min_eigenvalue;
  if (ppt.verdict == PptVerdict::NPT) {
    const Vec4& phi = *ppt.neg_eigenvector;
    Witness w = witness_from_operator(partial_transpose(Mat4::projector(phi), Side::B));
    w.generator = phi;
    w.class_tag = WitnessClass::OEW;
    out.value = rho.expectation(w.matrix());
    out.witness = std::move(w);
    out.verdict = Verdict::Detected;
  }
  return out;
}

Mat4 PseudoMixture::reconstruct() const {
  Mat4 out{};
  for (const auto& t : terms)
    out += t.coefficient *
           kron(basis_projector(t.basis_a, t.outcome_a), basis_projector(t.basis_b, t.outcome_b));
  return out;
}

double PseudoMixture::coefficient_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.coefficient;
  return s;
}

PseudoMixture pseudo_mixture(const Witness& w) {
  require_ew4(w, "pseudo_mixture");
  // Weight of projector (basis, outcome) in the expansion of sigma_k.
  auto alpha = [](std::size_t k, Basis basis, int outcome) {
    if (k == 0) return 0.5;
    if (k == 1) return basis == Basis::X ? static_cast<double>(outcome) : 0.0;
    return basis == Basis::Z ? static_cast<double>(outcome) : 0.0;
  };
  PseudoMixture pm;
  for (Basis ba : {Basis::X, Basis::Z})
    for (int a : {1, -1})
      for (Basis bb : {Basis::X, Basis::Z})
        for (int b : {1, -1}) {
          double coeff = 0.0;
          for (std::size_t k : kEw4Indices)
            for (std::size_t l : kEw4Indices)
              coeff += w.coefficients[k][l] * alpha(k, ba, a) * alpha(l, bb, b);
          pm.terms.push_back({coeff, ba, a, bb, b});
        }
  return pm;
}

double evaluate_pseudo_mixture(const PseudoMixture& pm, const JointDistribution& dist) {
  double value = 0.0;
  for (const auto& t : pm.terms)
    value += t.coefficient * dist.conditional(t.basis_a, t.outcome_a, t.basis_b, t.outcome_b);
  return value;
}

DetectionResult grid_search_family(const JointDistribution& dist, int resolution, double tol) {
  if (resolution < 8) throw_usage("grid_search_family: resolution must be at least 8");
  const PartialPauliTable table = observed_pauli_table(dist);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  auto value_at = [&](const std::array<double, 4>& phi) {
    const Vec4 v{phi[0], phi[1], phi[2], phi[3]};
    if (schmidt_coefficients(v)[1] <= tol) return kInf;
    return evaluate_on_table(family_witness(phi), table);
  };

  const double pi = std::numbers::pi;
  const int n = resolution;
  double best = kInf;
  std::array<double, 4> best_phi{1.0, 0.0, 0.0, 0.0};
  // Grid order is lexicographic in (alpha, beta, gamma); strict improvement
  // keeps the lowest index on ties.
  for (int ia = 0; ia < n; ++ia) {
    const double alpha = (ia + 0.5) * (0.5 * pi) / n;
    for (int ib = 0; ib < n; ++ib) {
      const double beta = (ib + 0.5) * pi / n;
      for (int ig = 0; ig < n; ++ig) {
        const double gamma = ig * 2.0 * pi / n;
        const std::array<double, 4> phi{
            std::cos(alpha), std::sin(alpha) * std::cos(beta),
            std::sin(alpha) * std::sin(beta) * std::cos(gamma),
            std::sin(alpha) * std::sin(beta) * std::sin(gamma)};
        const double v = value_at(phi);
        if (v < best) {
          best = v;
          best_phi = phi;
        }
      }
    }
  }

  // Compass search in the ambient coordinates, renormalising onto the sphere.
  double step = pi / n;
  int evaluations = 0;
  while (step > 1e-12 && evaluations < 200000) {
    bool improved = false;
    for (std::size_t k = 0; k < 4 && !improved; ++k)
      for (double dir : {1.0, -1.0}) {
        std::array<double, 4> trial = best_phi;
        trial[k] += dir * step;
        double nrm = 0.0;
        for (double x : trial) nrm += x * x;
        nrm = std::sqrt(nrm);
        const double sign = trial[0] < 0.0 ? -1.0 : 1.0;
        for (double& x : trial) x *= sign / nrm;
        const double v = value_at(trial);
        ++evaluations;
        if (v < best) {
          best = v;
          best_phi = trial;
          improved = true;
          break;
        }
      }
    if (!improved) step *= 0.5;
  }

  DetectionResult out;
  out.value = best;
  out.min_eigenvalue = best;
  out.margin = -best - tol;
  if (best < -tol) {
    out.verdict = Verdict::Detected;
    out.witness = family_witness(best_phi);
  }
  return out;
}

Witness rotation_example_witness(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vec4 psi{c, s, -s, c};
  const Mat4 pt = partial_transpose(0.5 * Mat4::projector(psi), Side::B);
  const auto eig = hermitian_eig(pt);
  return witness_from_real_state(eig.eigenvectors[0], 1e-12);
}

}  // namespace entqkd
