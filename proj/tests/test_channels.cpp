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
#include "test_support.hpp"

namespace entqkd {
namespace {

using testing::max_diff;
using testing::Rng;

// sum_m (1 (x) K) rho (1 (x) K)^dagger with the Kronecker product written out.
Mat4 oracle_apply(const std::vector<Mat2>& kraus, const Mat4& rho) {
  Mat4 out{};
  for (const auto& k : kraus) {
    Mat4 lifted{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        lifted(r, c) = testing::oracle_kron_entry(Mat2::identity(), k, r, c);
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

TEST(Rotation, Matrices) {
  EXPECT_EQ(rotation_channel(0.0).kraus.at(0), Mat2::identity());
  const Mat2 u = rotation_channel(M_PI / 2).kraus.at(0);
  const Vec2 zero = u * Vec2{1.0, 0.0};
  const Vec2 one = u * Vec2{0.0, 1.0};
  EXPECT_NEAR(std::abs(zero[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(zero[1] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(one[0] + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(one[1]), 0.0, 1e-15);
  for (int k = 0; k < 50; ++k) {
    const Mat2 v = rotation_channel(0.137 * k).kraus.at(0);
    EXPECT_LT(max_diff(v * v.adjoint(), Mat2::identity()), 1e-15);
  }
}

TEST(Rotation, OnPhiPlusGivesRotatedBellVector) {
  for (int k = 0; k <= 24; ++k) {
    const double t = k * M_PI / 24.0;
    const auto out = apply_to_bob(rotation_channel(t), bell_state(Bell::PhiPlus));
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Vec4 psi{c, s, -s, c};
    EXPECT_LT(max_diff(out.rho(), 0.5 * Mat4::projector(psi)), 1e-14);
  }
}

TEST(Depolarizing, KrausSetAndLimits) {
  EXPECT_LT(max_diff(apply_to_bob(depolarizing_channel(0.0), werner(0.6)).rho(), werner(0.6).rho()),
            1e-15);
  for (double p : {0.0, 0.2, 0.5, 1.0}) {
    const auto ch = depolarizing_channel(p);
    EXPECT_EQ(ch.kraus.size(), 4u);
    EXPECT_NO_THROW(validate_channel(ch));
    const auto out = apply_to_bob(ch, bell_state(Bell::PhiPlus));
    EXPECT_LT(max_diff(out.rho(), werner(1.0 - p).rho()), 1e-14);
  }
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto out = apply_to_bob(depolarizing_channel(1.0), rng.state());
    EXPECT_LT(max_diff(out.reduced_b(), 0.5 * Mat2::identity()), 1e-14);
  }
  EXPECT_THROW(depolarizing_channel(-0.1), Error);
  EXPECT_THROW(depolarizing_channel(1.5), Error);
}

TEST(ApplyToBob, MatchesKrausOracleAndFixesAlice) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = rng.state();
    const Channel ch = trial % 2 ? rotation_channel(rng.uniform(0.0, 6.3))
                                 : depolarizing_channel(rng.uniform());
    const auto out = apply_to_bob(ch, s);
    EXPECT_LT(max_diff(out.rho(), oracle_apply(ch.kraus, s.rho())), 1e-14);
    EXPECT_LT(max_diff(out.reduced_a(), s.reduced_a()), 1e-10);
  }
}

TEST(ApplyToBob, RejectsNonTracePreserving) {
  const Channel bad{{0.5 * Mat2::identity()}};
  try {
    apply_to_bob(bad, maximally_mixed());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }
}

TEST(InterceptResend, FourStateQuarterError) {
  const auto rec = intercept_resend({Basis::X, Basis::Z}, bell_state(Bell::PhiPlus));
  EXPECT_NEAR(qber(joint_distribution(rec.post_state, Protocol::four_state())), 0.25, 1e-14);
  EXPECT_EQ(is_ppt(rec.post_state).verdict, PptVerdict::PPT);
  EXPECT_EQ(rec.eve_outcomes, (std::vector<std::string>{"x,+1", "x,-1", "z,+1", "z,-1"}));
}

TEST(InterceptResend, SixStateThirdError) {
  const auto rec = intercept_resend({Basis::Z, Basis::Y, Basis::X}, bell_state(Bell::PhiPlus));
  EXPECT_NEAR(qber(joint_distribution(rec.post_state, Protocol::six_state())), 1.0 / 3.0, 1e-14);
  EXPECT_EQ(is_ppt(rec.post_state).verdict, PptVerdict::PPT);
  EXPECT_EQ(rec.eve_outcomes.size(), 6u);
}

TEST(InterceptResend, ZOnlyEnumeration) {
  const auto rec = intercept_resend({Basis::Z}, bell_state(Bell::PhiPlus));
  const auto d = joint_distribution(rec.post_state, Protocol::four_state());
  EXPECT_NEAR(basis_error(d, Basis::Z), 0.0, 1e-15);
  EXPECT_NEAR(basis_error(d, Basis::X), 0.5, 1e-15);

  // Hand enumeration: Eve sees z,r with prob 1/2; Alice's z outcome equals r,
  // Bob receives |r> and measures it faithfully.
  const auto& zz = rec.tables.at({Basis::Z, Basis::Z});
  ASSERT_EQ(zz.alphabet_e.size(), 2u);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t e = 0; e < 2; ++e)
        EXPECT_NEAR(zz(a, b, e), (a == b && b == e) ? 0.5 : 0.0, 1e-15);
  const auto& xx = rec.tables.at({Basis::X, Basis::X});
  for (double p : xx.probs) EXPECT_NEAR(p, 0.125, 1e-15);
}

TEST(InterceptResend, TablesMarginaliseToDistribution) {
  Rng rng(43);
  const std::vector<std::vector<Basis>> subsets{
      {Basis::X}, {Basis::X, Basis::Z}, {Basis::X, Basis::Y, Basis::Z}, {Basis::Y}};
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = rng.state();
    const auto rec = intercept_resend(subsets[static_cast<std::size_t>(trial) % subsets.size()], s);
    const auto d = joint_distribution(rec.post_state, Protocol::six_state());
    for (const auto& [pair, table] : rec.tables) {
      EXPECT_NO_THROW(validate(table));
      const auto ab = marginal_ab(table);
      for (int a : {1, -1})
        for (int b : {1, -1})
          EXPECT_NEAR(ab(outcome_index(a), outcome_index(b)),
                      d.conditional(pair.first, a, pair.second, b), 1e-12);
      EXPECT_NEAR(conditional_mutual_information(table), 0.0, 1e-12);
    }
    // The stored decomposition is an explicit separable form of the output.
    EXPECT_LT(max_diff(testing::mixture_matrix(rec.mixture), rec.post_state.rho()), 1e-12);
  }
}

TEST(InterceptResend, AttackTableMatchesProtocolData) {
  const auto rec = intercept_resend({Basis::X, Basis::Z}, bell_state(Bell::PhiPlus));
  const auto t = attack_table(rec, Protocol::four_state());
  EXPECT_NO_THROW(validate(t));
  EXPECT_EQ(t.alphabet_a, (std::vector<std::string>{"x,+1", "x,-1", "z,+1", "z,-1"}));
  const auto d = joint_distribution(rec.post_state, Protocol::four_state());
  const auto ab = marginal_ab(t);
  const Basis order[] = {Basis::X, Basis::Z};
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ib = 0; ib < 2; ++ib)
      for (int a : {1, -1})
        for (int b : {1, -1})
          EXPECT_NEAR(ab(2 * ia + outcome_index(a), 2 * ib + outcome_index(b)),
                      d.prob(order[ia], a, order[ib], b), 1e-12);
  EXPECT_NEAR(conditional_mutual_information(t), 0.0, 1e-12);
}

TEST(InterceptResend, EmptyBasisSetIsUsageError) {
  try {
    intercept_resend({}, maximally_mixed());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Usage);
  }
}

}  // namespace
}  // namespace entqkd
