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

#include "entqkd/channels.hpp"

#include <algorithm>
#include <cmath>

#include "entqkd/errors.hpp"

namespace entqkd {

void validate_channel(const Channel& ch, double tol) {
  if (ch.kraus.empty()) throw_validation("channel: no Kraus operators");
  Mat2 sum{};
  for (const auto& k : ch.kraus) {
    if (!k.is_finite()) throw_validation("channel: non-finite Kraus operator");
    sum += k.adjoint() * k;
  }
  if ((sum - Mat2::identity()).frobenius_norm() > tol)
    throw_validation("channel: Kraus operators are not trace preserving");
}

Channel identity_channel() { return Channel{{Mat2::identity()}}; }

Channel rotation_channel(double theta) {
  using namespace std::complex_literals;
  if (!std::isfinite(theta)) throw_usage("rotation_channel: angle must be finite");
  Mat2 u = std::cos(theta) * Mat2::identity() + (-1.0i * std::sin(theta)) * pauli(Pauli::Y);
  return Channel{{u}};
}

Channel depolarizing_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw_usage("depolarizing_channel: p must lie in [0, 1]");
  const double w0 = std::sqrt(1.0 - 0.75 * p);
  const double w = std::sqrt(0.25 * p);
  return Channel{{w0 * Mat2::identity(), w * pauli(Pauli::X), w * pauli(Pauli::Y),
                  w * pauli(Pauli::Z)}};
}

TwoQubitState apply_to_bob(const Channel& ch, const TwoQubitState& state) {
  validate_channel(ch);
  Mat4 out{};
  for (const auto& k : ch.kraus) {
    const Mat4 lifted = kron(Mat2::identity(), k);
    out += lifted * state.rho() * lifted.adjoint();
  }
  return make_state(out);
}

AttackRecord intercept_resend(const std::vector<Basis>& bases, const TwoQubitState& state) {
  if (bases.empty()) throw_usage("intercept_resend: Eve needs at least one basis");
  std::vector<Basis> eve = bases;
  std::sort(eve.begin(), eve.end());
  eve.erase(std::unique(eve.begin(), eve.end()), eve.end());
  const double pick = 1.0 / static_cast<double>(eve.size());

  std::vector<std::string> labels;
  Mat4 post{};
  std::vector<ProductTerm> mixture;
  for (Basis k : eve)
    for (int r : {1, -1}) {
      labels.push_back(std::string(1, basis_letter(k)) + (r > 0 ? ",+1" : ",-1"));
      const Mat4 lifted = kron(Mat2::identity(), basis_projector(k, r));
      const Mat4 branch = lifted * state.rho() * lifted;
      post += pick * branch;

      // Alice's conditional state given Eve's outcome, split into pure terms.
      const Mat2 alice = partial_trace_b(branch);
      const double p_branch = alice.trace().real();
      if (p_branch <= 0.0) continue;
      const auto eig = hermitian_eig(alice * (1.0 / p_branch), 1e-9);
      for (std::size_t m = 0; m < 2; ++m) {
        const double lambda = eig.eigenvalues[m];
        if (lambda <= 1e-15) continue;
        mixture.push_back({pick * p_branch * lambda, eig.eigenvectors[m], basis_vector(k, r)});
      }
    }

  // Renormalise the dropped-eigenvalue remainder away.
  double total = 0.0;
  for (const auto& t : mixture) total += t.weight;
  for (auto& t : mixture) t.weight /= total;

  AttackRecord rec{make_state(post), labels, {}, std::move(mixture)};

  const std::size_t ne = labels.size();
  for (Basis i : kAllBases)
    for (Basis j : kAllBases) {
      TripartiteTable t{{"+1", "-1"}, {"+1", "-1"}, labels, std::vector<double>(4 * ne, 0.0)};
      std::size_t e = 0;
      for (Basis k : eve)
        for (int r : {1, -1}) {
          const double resend = std::norm(dot(basis_vector(j, 1), basis_vector(k, r)));
          for (int a : {1, -1}) {
            const double p_ae =
                pick * state.expectation(kron(basis_projector(i, a), basis_projector(k, r)));
            const double clamped = std::max(0.0, p_ae);
            t(outcome_index(a), 0, e) = clamped * resend;
            t(outcome_index(a), 1, e) = clamped * (1.0 - resend);
          }
          ++e;
        }
      rec.tables.emplace(BasisPair{i, j}, std::move(t));
    }
  return rec;
}

TripartiteTable attack_table(const AttackRecord& record, const Protocol& protocol) {
  validate_protocol(protocol);
  TripartiteTable out;
  for (Basis b : protocol.bases)
    for (int o : {1, -1}) {
      const std::string label = std::string(1, basis_letter(b)) + (o > 0 ? ",+1" : ",-1");
      out.alphabet_a.push_back(label);
      out.alphabet_b.push_back(label);
    }
  out.alphabet_e = record.eve_outcomes;
  const std::size_t ne = out.alphabet_e.size();
  out.probs.assign(out.alphabet_a.size() * out.alphabet_b.size() * ne, 0.0);
  const double qq = protocol.basis_probability() * protocol.basis_probability();
  for (std::size_t ia = 0; ia < protocol.bases.size(); ++ia)
    for (std::size_t ib = 0; ib < protocol.bases.size(); ++ib) {
      const auto& t = record.tables.at({protocol.bases[ia], protocol.bases[ib]});
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t e = 0; e < ne; ++e) out(2 * ia + a, 2 * ib + b, e) = qq * t(a, b, e);
    }
  return out;
}

}  // namespace entqkd
