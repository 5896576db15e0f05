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

#include <gtest/gtest.h>

#include <cmath>

#include "entqkd/channels.hpp"
#include "entqkd/errors.hpp"
#include "entqkd/measurements.hpp"
#include "test_support.hpp"

namespace entqkd {
namespace {

using testing::Rng;

// Tr(rho P (x) Q) with the projectors written out by hand.
double oracle_prob(const Mat4& rho, Basis ba, int a, Basis bb, int b) {
  auto proj = [](Basis basis, int o) {
    const double h = 0.5;
    Mat2 p{};
    switch (basis) {
      case Basis::X: p(0, 0) = p(1, 1) = h; p(0, 1) = p(1, 0) = h * o; break;
      case Basis::Y:
        p(0, 0) = p(1, 1) = h;
        p(0, 1) = cplx(0.0, -h * o);
        p(1, 0) = cplx(0.0, h * o);
        break;
      case Basis::Z: p(0, 0) = o > 0 ? 1.0 : 0.0; p(1, 1) = o > 0 ? 0.0 : 1.0; break;
    }
    return p;
  };
  const Mat2 pa = proj(ba, a);
  const Mat2 pb = proj(bb, b);
  Mat4 op{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) op(r, c) = testing::oracle_kron_entry(pa, pb, r, c);
  return (op * rho).trace().real();
}

TEST(BasisVectors, AreEigenvectors) {
  for (Basis b : kAllBases)
    for (int o : {1, -1}) {
      const Vec2& v = basis_vector(b, o);
      const Vec2 w = pauli(pauli_index(b)) * v;
      EXPECT_NEAR(std::abs(w[0] - static_cast<double>(o) * v[0]), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(w[1] - static_cast<double>(o) * v[1]), 0.0, 1e-15);
      EXPECT_LT(testing::max_diff(basis_projector(b, o), Mat2::projector(v)), 1e-15);
    }
}

TEST(Protocol, Definitions) {
  const auto four = Protocol::four_state();
  const auto six = Protocol::six_state();
  EXPECT_TRUE(four.uses(Basis::X));
  EXPECT_FALSE(four.uses(Basis::Y));
  EXPECT_TRUE(six.uses(Basis::Y));
  EXPECT_EQ(four.basis_probability(), 0.5);
  EXPECT_NEAR(six.basis_probability() * 3.0, 1.0, 1e-15);
  EXPECT_EQ(four.name(), "four-state");
  EXPECT_EQ(six.name(), "six-state");
  EXPECT_NO_THROW(validate_protocol(four));
  Protocol bad = four;
  bad.correlation_signs[0] = 0;
  EXPECT_THROW(validate_protocol(bad), Error);
}

TEST(JointDistribution, MaximallyMixedIsUniform) {
  const auto d = joint_distribution(maximally_mixed(), Protocol::four_state());
  for (Basis ba : {Basis::X, Basis::Z})
    for (Basis bb : {Basis::X, Basis::Z})
      for (int a : {1, -1})
        for (int b : {1, -1}) EXPECT_NEAR(d.prob(ba, a, bb, b), 1.0 / 16.0, 1e-15);
  EXPECT_NEAR(qber(d), 0.5, 1e-15);
}

TEST(JointDistribution, PhiPlusZZ) {
  const auto d = joint_distribution(bell_state(Bell::PhiPlus), Protocol::four_state());
  EXPECT_NEAR(d.prob(Basis::Z, 1, Basis::Z, 1), 0.125, 1e-15);
  EXPECT_NEAR(d.prob(Basis::Z, -1, Basis::Z, -1), 0.125, 1e-15);
  EXPECT_NEAR(d.prob(Basis::Z, 1, Basis::Z, -1), 0.0, 1e-15);
  EXPECT_NEAR(d.prob(Basis::Z, -1, Basis::Z, 1), 0.0, 1e-15);
  EXPECT_EQ(qber(d), 0.0);
}

TEST(JointDistribution, MatchesProjectorOracleOnRandomStates) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = rng.state();
    for (const auto& proto : {Protocol::four_state(), Protocol::six_state()}) {
      const auto d = joint_distribution(s, proto);
      const double q = proto.basis_probability();
      double total = 0.0;
      for (Basis ba : kAllBases)
        for (Basis bb : kAllBases)
          for (int a : {1, -1})
            for (int b : {1, -1}) {
              const double expected = proto.uses(ba) && proto.uses(bb)
                                          ? q * q * oracle_prob(s.rho(), ba, a, bb, b)
                                          : 0.0;
              EXPECT_NEAR(d.prob(ba, a, bb, b), expected, 1e-14);
              EXPECT_GE(d.prob(ba, a, bb, b), 0.0);
              total += d.prob(ba, a, bb, b);
            }
      EXPECT_NEAR(total, 1.0, 1e-12);
      for (Basis ba : proto.bases)
        for (Basis bb : proto.bases) {
          double cond = 0.0;
          for (int a : {1, -1})
            for (int b : {1, -1}) cond += d.conditional(ba, a, bb, b);
          EXPECT_NEAR(cond, 1.0, 1e-12);
        }
      const double e = qber(d);
      EXPECT_GE(e, 0.0);
      EXPECT_LE(e, 1.0);
    }
  }
}

TEST(Qber, RotationChannelLaws) {
  for (int k = 0; k <= 40; ++k) {
    const double theta = k * M_PI / 40.0;
    const auto s = apply_to_bob(rotation_channel(theta), bell_state(Bell::PhiPlus));
    const double s2 = std::sin(theta) * std::sin(theta);
    const auto d4 = joint_distribution(s, Protocol::four_state());
    const auto d6 = joint_distribution(s, Protocol::six_state());
    EXPECT_NEAR(basis_error(d4, Basis::Z), s2, 1e-12);
    EXPECT_NEAR(qber(d4), s2, 1e-12);
    EXPECT_NEAR(qber(d6), 2.0 / 3.0 * s2, 1e-12);
  }
}

TEST(Qber, WernerFourState) {
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    const auto s = werner(p);
    // Conditional error from the table: (1 - t_ii * sign) / 2, averaged.
    const double oracle = 0.5 * ((1.0 - s.pauli()[1][1]) / 2.0 + (1.0 - s.pauli()[3][3]) / 2.0);
    const double e = qber(joint_distribution(s, Protocol::four_state()));
    EXPECT_NEAR(e, oracle, 1e-12);
    EXPECT_NEAR(e, (1.0 - p) / 2.0, 1e-12);
  }
}

TEST(Qber, ZeroOnlyForAlignedCorrelations) {
  EXPECT_EQ(qber(joint_distribution(bell_state(Bell::PhiPlus), Protocol::six_state())), 0.0);
  EXPECT_GT(qber(joint_distribution(bell_state(Bell::PsiMinus), Protocol::six_state())), 0.5);
}

TEST(MakeDistribution, MassOnMismatchedPairsOnlyRejected) {
  // Pair weights are fixed at 1/n^2, so a table without sifted mass never
  // validates and qber never has to condition on an empty event.
  JointDistribution::Table t{};
  t[JointDistribution::index(Basis::X, 1, Basis::Z, 1)] = 1.0;
  EXPECT_THROW(make_distribution(Protocol::four_state(), t), Error);
}

TEST(MakeDistribution, Validation) {
  auto base = joint_distribution(werner(0.4), Protocol::four_state()).table();
  EXPECT_NO_THROW(make_distribution(Protocol::four_state(), base));

  auto negative = base;
  const auto lo = JointDistribution::index(Basis::X, 1, Basis::X, -1);
  negative[JointDistribution::index(Basis::X, 1, Basis::X, 1)] += base[lo] + 0.001;
  negative[lo] = -0.001;
  try {
    make_distribution(Protocol::four_state(), negative);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }

  auto off_protocol = base;
  off_protocol[JointDistribution::index(Basis::Y, 1, Basis::Y, 1)] = 1e-3;
  EXPECT_THROW(make_distribution(Protocol::four_state(), off_protocol), Error);

  auto scaled = base;
  for (auto& p : scaled) p *= 1.01;
  EXPECT_THROW(make_distribution(Protocol::four_state(), scaled), Error);
}

TEST(ObservedPauliTable, FourStatePhiPlus) {
  const auto t = observed_pauli_table(joint_distribution(bell_state(Bell::PhiPlus),
                                                         Protocol::four_state()));
  EXPECT_NEAR(*t[1][1], 1.0, 1e-14);
  EXPECT_NEAR(*t[3][3], 1.0, 1e-14);
  EXPECT_NEAR(*t[1][3], 0.0, 1e-14);
  EXPECT_NEAR(*t[3][1], 0.0, 1e-14);
  for (int k : {1, 3}) {
    EXPECT_NEAR(*t[0][static_cast<std::size_t>(k)], 0.0, 1e-14);
    EXPECT_NEAR(*t[static_cast<std::size_t>(k)][0], 0.0, 1e-14);
  }
  EXPECT_EQ(*t[0][0], 1.0);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_FALSE(t[2][k].has_value());
    EXPECT_FALSE(t[k][2].has_value());
  }
  EXPECT_THROW(require_complete(t), Error);
}

TEST(ObservedPauliTable, FourStateMaximallyMixed) {
  const auto t = observed_pauli_table(joint_distribution(maximally_mixed(), Protocol::four_state()));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (t[i][j] && !(i == 0 && j == 0)) {
        EXPECT_NEAR(*t[i][j], 0.0, 1e-15);
      }
}

TEST(ObservedPauliTable, SixStateIsTomographicallyComplete) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = rng.state();
    const auto full = require_complete(
        observed_pauli_table(joint_distribution(s, Protocol::six_state())));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(full[i][j], s.pauli()[i][j], 1e-9);
  }
}

TEST(ObservedPauliTable, MarginalsIndependentOfPartnerBasis) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = joint_distribution(rng.state(), Protocol::six_state());
    for (Basis i : kAllBases) {
      std::vector<double> alice;
      std::vector<double> bob;
      for (Basis j : kAllBases) {
        double ta = 0.0;
        double tb = 0.0;
        for (int a : {1, -1})
          for (int b : {1, -1}) {
            ta += a * d.conditional(i, a, j, b);
            tb += b * d.conditional(j, a, i, b);
          }
        alice.push_back(ta);
        bob.push_back(tb);
      }
      for (std::size_t k = 1; k < alice.size(); ++k) {
        EXPECT_NEAR(alice[k], alice[0], 1e-9);
        EXPECT_NEAR(bob[k], bob[0], 1e-9);
      }
    }
  }
}

TEST(ProtocolSource, ReproducesMaximallyMixedAlice) {
  for (const auto& proto : {Protocol::four_state(), Protocol::six_state()}) {
    const auto src = protocol_source(proto);
    EXPECT_EQ(src.signals.size(), 2 * proto.bases.size());
    EXPECT_LT(testing::max_diff(src.alice_reduced(), 0.5 * Mat2::identity()), 1e-12);
    EXPECT_LT(testing::max_diff(src.signal_average(), 0.5 * Mat2::identity()), 1e-12);
  }
}

}  // namespace
}  // namespace entqkd
