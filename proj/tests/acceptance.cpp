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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "entqkd/channels.hpp"
#include "entqkd/information.hpp"
#include "entqkd/simulation.hpp"
#include "entqkd/witnesses.hpp"
#include "test_support.hpp"

namespace {

using namespace entqkd;
using testing::Rng;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

JointDistribution four(const TwoQubitState& s) {
  return joint_distribution(s, Protocol::four_state());
}
JointDistribution six(const TwoQubitState& s) { return joint_distribution(s, Protocol::six_state()); }

Vec4 real_vec(const std::array<double, 4>& v) { return {v[0], v[1], v[2], v[3]}; }

// Tr(W rho) with W assembled from the textbook Pauli matrices.
double oracle_trace(const PauliTable& c, const Mat4& rho) {
  double v = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      v += c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
           testing::oracle_pauli_expectation(rho, i, j);
  return v;
}

Outcome rotation_error_laws() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = scan_rotation(0.0, M_PI / 2, 181);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0;
  for (const auto& r : rows) {
    const double s2 = std::sin(r.theta) * std::sin(r.theta);
    worst = std::max({worst, std::abs(r.qber_4state - s2), std::abs(r.qber_6state - 2.0 / 3.0 * s2)});
  }
  return {rows.size() == 181 && worst <= 1e-9 && secs < 1.0,
          fmt("181 points, max |qber - law| = %.2e (tol 1e-9), sweep %.3f s (limit 1 s)", worst, secs)};
}

Outcome constant_witness_value() {
  std::vector<double> thetas;
  for (int k = 0; k < 181; ++k) thetas.push_back(k * (M_PI / 2) / 180.0);
  thetas.push_back(M_PI / 3);
  double worst = 0.0;
  int detected = 0;
  double qber_pi3 = 0.0;
  for (double t : thetas) {
    const auto d = four(apply_to_bob(rotation_channel(t), bell_state(Bell::PhiPlus)));
    const auto r = detect_4state(d);
    if (r.verdict == Verdict::Detected) ++detected;
    worst = std::max(worst, std::abs(r.value + 0.25));
    if (t == M_PI / 3) qber_pi3 = qber(d);
  }
  const bool ok = detected == static_cast<int>(thetas.size()) && worst <= 1e-9 &&
                  std::abs(qber_pi3 - 0.75) < 1e-12;
  return {ok, fmt("%.0f/182 detected, max |value + 0.25| = %.2e (tol 1e-9), qber at pi/3 = %.4f",
                  detected, worst, qber_pi3)};
}

Outcome intercept_resend_thresholds() {
  const auto r4 = intercept_resend({Basis::X, Basis::Z}, bell_state(Bell::PhiPlus));
  const auto r6 = intercept_resend({Basis::X, Basis::Y, Basis::Z}, bell_state(Bell::PhiPlus));
  const double q4 = qber(four(r4.post_state));
  const double q6 = qber(six(r6.post_state));
  const bool nd4 = detect_4state(four(r4.post_state)).verdict == Verdict::NotDetected;
  const bool nd6 = detect_6state(six(r6.post_state)).verdict == Verdict::NotDetected;
  const double pt4 = is_ppt(r4.post_state).min_eigenvalue;
  const double pt6 = is_ppt(r6.post_state).min_eigenvalue;
  const bool ok = std::abs(q4 - 0.25) < 1e-12 && std::abs(q6 - 1.0 / 3.0) < 1e-12 && nd4 && nd6 &&
                  pt4 >= -1e-9 && pt6 >= -1e-9;
  return {ok, fmt("qber {x,z} = %.12f, {x,y,z} = %.12f, min PT eigenvalue %.2e", q4, q6,
                  std::min(pt4, pt6)) +
                  (nd4 && nd6 ? ", both NotDetected" : ", DETECTED")};
}

double bisect(const std::function<bool(double)>& detected) {
  double lo = 0.0, hi = 1.0;  // not detected at lo, detected at hi
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (detected(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome werner_boundary() {
  const double p4 = bisect([](double p) {
    return detect_4state(four(werner(p))).verdict == Verdict::Detected;
  });
  const double p6 = bisect([](double p) {
    return detect_6state(six(werner(p))).verdict == Verdict::Detected;
  });
  // Closed forms checked against an independent eigensolver.
  double closed = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const auto w = werner(p);
    closed = std::max(closed, std::abs(testing::oracle_min_eigenvalue(omega(w)) -
                                       std::min((1.0 - 2.0 * p) / 4.0, 0.25)));
    closed = std::max(closed,
                      std::abs(testing::oracle_min_eigenvalue(partial_transpose(w.rho(), Side::B)) -
                               (1.0 - 3.0 * p) / 4.0));
  }
  const bool ok = std::abs(p4 - 0.5) < 1e-6 && std::abs(p6 - 1.0 / 3.0) < 1e-6 && closed < 1e-12;
  return {ok, fmt("4-state flips at p = %.9f, 6-state at p = %.9f (tol 1e-6), closed forms %.1e",
                  p4, p6, closed)};
}

Outcome eigen_vs_grid_search() {
  Rng rng(2001);
  int agree = 0, in_band = 0, outside = 0;
  double worst_value = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = four(rng.state());
    const auto exact = detect_4state(d);
    const auto grid = grid_search_family(d, 32);
    if (exact.verdict == grid.verdict) {
      ++agree;
    } else if (std::abs(exact.min_eigenvalue) < 1e-6) {
      ++in_band;
    } else {
      ++outside;
    }
    if (exact.verdict == Verdict::Detected)
      worst_value = std::max(worst_value, std::abs(grid.value - exact.value));
  }
  return {outside == 0,
          fmt("%.0f/200 agree, %.0f in |lambda| < 1e-6 band, ", agree, in_band) +
              fmt("%.0f outside band; max value gap %.1e", outside, worst_value)};
}

Outcome ew4_characterisation() {
  Rng rng(2002);
  int pass = 0, fail = 0;
  for (int k = 0; k < 1000; ++k)
    if (is_ew4(witness_from_real_state(real_vec(rng.real_unit_vector())))) ++pass;
  for (int k = 0; k < 1000; ++k) {
    Witness w;
    for (auto& row : w.coefficients)
      for (auto& c : row) c = rng.normal();
    // Force at least one y-indexed coefficient with |c| > 1e-6.
    const auto i = static_cast<std::size_t>(rng.uniform(0.0, 4.0));
    const double mag = std::pow(10.0, rng.uniform(-5.9, 0.0));
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    if (rng.uniform() < 0.5) {
      for (std::size_t j = 0; j < 4; ++j) w.coefficients[2][j] = w.coefficients[j][2] = 0.0;
      (rng.uniform() < 0.5 ? w.coefficients[2][i] : w.coefficients[i][2]) = sign * mag;
    }
    if (!is_ew4(w)) ++fail;
  }
  return {pass == 1000 && fail == 1000,
          fmt("%.0f/1000 EW4-constructed pass, %.0f/1000 y-carrying witnesses fail", pass, fail)};
}

Outcome data_evaluation() {
  Rng rng(2003);
  double eval = 0.0, recon = 0.0, sum = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = rng.state();
    Witness w;
    if (trial % 2 == 0) {
      w = witness_from_real_state(real_vec(rng.real_unit_vector()));
    } else {
      // Arbitrary real combination over {0, x, z}.
      for (std::size_t i : {0, 1, 3})
        for (std::size_t j : {0, 1, 3}) w.coefficients[i][j] = rng.normal();
      w.class_tag = WitnessClass::EW4;
    }
    eval = std::max(eval, std::abs(evaluate_from_data(w, four(s)) - oracle_trace(w.coefficients, s.rho())));
    const auto pm = pseudo_mixture(w);
    recon = std::max(recon, testing::max_diff(pm.reconstruct(), w.matrix()));
    sum = std::max(sum, std::abs(pm.coefficient_sum() - w.matrix().trace().real()));
  }
  return {eval <= 1e-9 && recon <= 1e-10 && sum <= 1e-10,
          fmt("500 pairs: max eval error %.2e (1e-9), reconstruction %.2e (1e-10), sum - Tr(W) %.2e",
              eval, recon, sum)};
}

Outcome tomography_roundtrip() {
  Rng rng(2004);
  double worst = 0.0;
  int agree = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = rng.state();
    const auto d = six(s);
    worst = std::max(worst, testing::max_diff(reconstruct_state(d).rho(), s.rho()));
    const bool detected = detect_6state(d).verdict == Verdict::Detected;
    if (detected == (is_ppt(s).verdict == PptVerdict::NPT)) ++agree;
  }
  return {worst <= 1e-9 && agree == 500,
          fmt("500 states: max entry deviation %.2e (1e-9), %.0f/500 agree with PPT test", worst, agree)};
}

Outcome separable_extension_cmi() {
  const auto rec = intercept_resend({Basis::X, Basis::Z}, bell_state(Bell::PhiPlus));
  const auto ext = separable_extension(rec.mixture, Protocol::four_state());
  const double cmi = conditional_mutual_information(ext);
  const double mi = mutual_information(marginal_ab(sift(ext, Basis::Z, Basis::Z)));
  return {cmi <= 1e-12 && mi > 0.18,
          fmt("I(A;B|E) = %.2e (<= 1e-12), sifted z I(A;B) = %.5f bits (> 0.18)", cmi, mi)};
}

Outcome soundness() {
  Rng rng(2005);
  std::vector<Mat4> witnesses;
  for (int k = 0; k < 50; ++k)
    witnesses.push_back(witness_from_real_state(real_vec(rng.real_unit_vector())).matrix());
  while (witnesses.size() < 150) {
    const auto s = rng.state();
    const auto r4 = detect_4state(four(s));
    if (r4.witness) witnesses.push_back(r4.witness->matrix());
    const auto r6 = detect_6state(six(s));
    if (r6.witness) witnesses.push_back(r6.witness->matrix());
  }
  double lowest = 1.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Mat4 sigma = testing::mixture_matrix(rng.product_mixture(1 + trial % 8));
    for (const auto& w : witnesses) lowest = std::min(lowest, (w * sigma).trace().real());
  }
  return {lowest >= -1e-9,
          fmt("%.0f witnesses x 500 separable mixtures, min Tr(W sigma) = %.3e (>= -1e-9)",
              static_cast<double>(witnesses.size()), lowest)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"rotation-channel error laws", rotation_error_laws},
      {"constant witness value -1/4", constant_witness_value},
      {"intercept-resend thresholds", intercept_resend_thresholds},
      {"Werner detection boundaries", werner_boundary},
      {"eigen decision vs family grid search", eigen_vs_grid_search},
      {"EW4 symmetry characterisation", ew4_characterisation},
      {"evaluation from data and pseudo-mixtures", data_evaluation},
      {"six-state tomography roundtrip", tomography_roundtrip},
      {"separable extension has zero I(A;B|E)", separable_extension_cmi},
      {"witness soundness on separable states", soundness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
