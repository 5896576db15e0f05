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

#include "entqkd/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

namespace {

struct BasisTables {
  std::array<Vec2, 6> vectors{};
  std::array<Mat2, 6> projectors{};
};

const BasisTables& basis_tables() {
  static const BasisTables tables = [] {
    using namespace std::complex_literals;
    const double h = 1.0 / std::sqrt(2.0);
    BasisTables t;
    t.vectors = {Vec2{h, h},       Vec2{h, -h},       // x
                 Vec2{h, h * 1.0i}, Vec2{h, -h * 1.0i},  // y
                 Vec2{1.0, 0.0},   Vec2{0.0, 1.0}};   // z
    for (std::size_t k = 0; k < 6; ++k) t.projectors[k] = Mat2::projector(t.vectors[k]);
    return t;
  }();
  return tables;
}

std::string pair_label(Basis a, Basis b) {
  return std::string(1, basis_letter(a)) + basis_letter(b);
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::X: return 'x';
    case Basis::Y: return 'y';
    case Basis::Z: return 'z';
  }
  return '?';
}

std::optional<Basis> basis_from_letter(char c) {
  switch (c) {
    case 'x': return Basis::X;
    case 'y': return Basis::Y;
    case 'z': return Basis::Z;
    default: return std::nullopt;
  }
}

const Vec2& basis_vector(Basis b, int outcome) {
  return basis_tables().vectors[2 * basis_index(b) + outcome_index(outcome)];
}

const Mat2& basis_projector(Basis b, int outcome) {
  return basis_tables().projectors[2 * basis_index(b) + outcome_index(outcome)];
}

Protocol Protocol::four_state() { return Protocol{ProtocolKind::FourState, {Basis::X, Basis::Z}}; }

Protocol Protocol::six_state() {
  return Protocol{ProtocolKind::SixState, {Basis::X, Basis::Y, Basis::Z}};
}

bool Protocol::uses(Basis b) const {
  return std::find(bases.begin(), bases.end(), b) != bases.end();
}

std::string Protocol::name() const {
  return kind == ProtocolKind::FourState ? "four-state" : "six-state";
}

bool operator==(const Protocol& a, const Protocol& b) {
  return a.kind == b.kind && a.bases == b.bases && a.correlation_signs == b.correlation_signs;
}

void validate_protocol(const Protocol& p) {
  const std::vector<Basis> expected = p.kind == ProtocolKind::FourState
                                          ? std::vector<Basis>{Basis::X, Basis::Z}
                                          : std::vector<Basis>{Basis::X, Basis::Y, Basis::Z};
  if (p.bases != expected) throw_usage("protocol: basis list does not match " + p.name());
  for (int s : p.correlation_signs)
    if (s != 1 && s != -1) throw_usage("protocol: correlation signs must be +1 or -1");
}

double JointDistribution::pair_weight(Basis ba, Basis bb) const {
  double w = 0.0;
  for (int a : {1, -1})
    for (int b : {1, -1}) w += prob(ba, a, bb, b);
  return w;
}

double JointDistribution::conditional(Basis ba, int a, Basis bb, int b) const {
  const double w = pair_weight(ba, bb);
  if (w <= 0.0)
    throw_usage("distribution: basis pair " + pair_label(ba, bb) + " has no weight");
  return prob(ba, a, bb, b) / w;
}

JointDistribution make_distribution(const Protocol& protocol, const JointDistribution::Table& t,
                                    double tol) {
  validate_protocol(protocol);
  double total = 0.0;
  for (Basis ba : kAllBases)
    for (Basis bb : kAllBases)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          const double p = t[JointDistribution::index(ba, a, bb, b)];
          const bool in_protocol = protocol.uses(ba) && protocol.uses(bb);
          if (!std::isfinite(p)) throw_validation("distribution: non-finite probability");
          if (!in_protocol) {
            if (p != 0.0)
              throw_validation("distribution: mass on basis pair " + pair_label(ba, bb) +
                               " outside " + protocol.name());
            continue;
          }
          if (p < 0.0) throw_validation("distribution: negative probability");
          total += p;
        }
  if (std::abs(total - 1.0) > tol)
    throw_validation("distribution: total probability " + std::to_string(total));

  const double q = protocol.basis_probability();
  for (Basis ba : protocol.bases)
    for (Basis bb : protocol.bases) {
      double w = 0.0;
      for (int a : {1, -1})
        for (int b : {1, -1}) w += t[JointDistribution::index(ba, a, bb, b)];
      if (std::abs(w - q * q) > tol)
        throw_validation("distribution: basis pair " + pair_label(ba, bb) +
                         " does not carry the uniform weight");
    }
  return JointDistribution(protocol, t);
}

JointDistribution joint_distribution(const TwoQubitState& state, const Protocol& protocol) {
  validate_protocol(protocol);
  const double q = protocol.basis_probability();
  JointDistribution::Table t{};
  for (Basis ba : protocol.bases)
    for (Basis bb : protocol.bases)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          const Mat4 proj = kron(basis_projector(ba, a), basis_projector(bb, b));
          // Clamp rounding noise; exact values are nonnegative.
          const double p = std::max(0.0, state.expectation(proj));
          t[JointDistribution::index(ba, a, bb, b)] = q * q * p;
        }
  return make_distribution(protocol, t);
}

double basis_error(const JointDistribution& dist, Basis b) {
  if (!dist.protocol().uses(b)) throw_usage("basis_error: basis not in protocol");
  const int sign = dist.protocol().correlation_sign(b);
  double err = 0.0;
  for (int a : {1, -1})
    for (int o : {1, -1})
      if (a * o != sign) err += dist.conditional(b, a, b, o);
  return err;
}

double qber(const JointDistribution& dist) {
  double sifted = 0.0;
  double errors = 0.0;
  for (Basis b : dist.protocol().bases) {
    const int sign = dist.protocol().correlation_sign(b);
    for (int a : {1, -1})
      for (int o : {1, -1}) {
        const double p = dist.prob(b, a, b, o);
        sifted += p;
        if (a * o != sign) errors += p;
      }
  }
  if (sifted <= 0.0) throw_usage("qber: no sifted events to condition on");
  return errors / sifted;
}

PartialPauliTable observed_pauli_table(const JointDistribution& dist) {
  const auto& bases = dist.protocol().bases;
  PartialPauliTable t{};
  t[0][0] = 1.0;
  for (Basis ba : bases) {
    const auto i = static_cast<std::size_t>(pauli_index(ba));
    double alice = 0.0;
    for (Basis bb : bases) {
      const auto j = static_cast<std::size_t>(pauli_index(bb));
      double corr = 0.0;
      double marg = 0.0;
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          const double p = dist.conditional(ba, a, bb, b);
          corr += a * b * p;
          marg += a * p;
        }
      t[i][j] = corr;
      alice += marg;
    }
    t[i][0] = alice / static_cast<double>(bases.size());
  }
  for (Basis bb : bases) {
    const auto j = static_cast<std::size_t>(pauli_index(bb));
    double bob = 0.0;
    for (Basis ba : bases)
      for (int a : {1, -1})
        for (int b : {1, -1}) bob += b * dist.conditional(ba, a, bb, b);
    t[0][j] = bob / static_cast<double>(bases.size());
  }
  return t;
}

PauliTable require_complete(const PartialPauliTable& t) {
  static const char* names = "0xyz";
  PauliTable out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (!t[i][j])
        throw_usage(std::string("pauli table: entry t_") + names[i] + names[j] + " is absent");
      out[i][j] = *t[i][j];
    }
  return out;
}

SourceState protocol_source(const Protocol& protocol) {
  validate_protocol(protocol);
  std::vector<double> probs;
  std::vector<Vec2> signals;
  const double p = 0.5 * protocol.basis_probability();
  for (Basis b : protocol.bases)
    for (int a : {1, -1}) {
      const Vec2& e = basis_vector(b, a);
      probs.push_back(p);
      signals.push_back({std::conj(e[0]), std::conj(e[1])});
    }
  return make_source(std::move(probs), std::move(signals), bell_vector(Bell::PhiPlus));
}

}  // namespace entqkd
