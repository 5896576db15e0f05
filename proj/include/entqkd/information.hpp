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

#include <span>
#include <string>
#include <vector>

#include "entqkd/linalg.hpp"
#include "entqkd/measurements.hpp"

namespace entqkd {

inline constexpr double kTableTol = 1e-12;

// Finite joint distribution P(a, b), stored row-major over (a, b).
struct BipartiteTable {
  std::vector<std::string> alphabet_a;
  std::vector<std::string> alphabet_b;
  std::vector<double> probs;

  double operator()(std::size_t a, std::size_t b) const {
    return probs[a * alphabet_b.size() + b];
  }
};

// Finite joint distribution P(a, b, e), stored row-major over (a, b, e).
struct TripartiteTable {
  std::vector<std::string> alphabet_a;
  std::vector<std::string> alphabet_b;
  std::vector<std::string> alphabet_e;
  std::vector<double> probs;

  double operator()(std::size_t a, std::size_t b, std::size_t e) const {
    return probs[(a * alphabet_b.size() + b) * alphabet_e.size() + e];
  }
  double& operator()(std::size_t a, std::size_t b, std::size_t e) {
    return probs[(a * alphabet_b.size() + b) * alphabet_e.size() + e];
  }
};

// Shape, nonnegativity and normalisation checks; validation error on failure.
void validate(const BipartiteTable& t, double tol = kTableTol);
void validate(const TripartiteTable& t, double tol = kTableTol);

BipartiteTable marginal_ab(const TripartiteTable& t);

// Bits; 0 log 0 = 0.
double mutual_information(const BipartiteTable& p);
double conditional_mutual_information(const TripartiteTable& p);

// True when every slice P(a, b | e) with P(e) > 0 equals the product of its
// marginals within tol.
bool conditionally_independent(const TripartiteTable& p, double tol = 1e-10);

// Binary entropy in bits.
double binary_entropy(double p);

struct ProductTerm {
  double weight = 0.0;
  Vec2 a{};
  Vec2 b{};
};

// Extension of the protocol statistics of the separable state
// sum_k q_k |a_k><a_k| (x) |b_k><b_k| in which Eve holds the mixture index.
// A and B labels are "<basis>,<outcome>" (e.g. "z,+1") and include the
// uniform basis choice, so marginalising E gives the joint distribution of
// the mixed state.
TripartiteTable separable_extension(std::span<const ProductTerm> mixture,
                                    const Protocol& protocol);

// Restricts a table with "<basis>,<outcome>" labels to one basis pair and
// renormalises. Labels of the result are the bare outcomes "+1" / "-1".
TripartiteTable sift(const TripartiteTable& t, Basis basis_a, Basis basis_b);

// Minimum of I(A;B|E) over the candidates. This is an upper bound on the
// intrinsic information of their common P(A, B), never its value. Usage error
// when candidates disagree on alphabets or on P(A, B) beyond 1e-9.
double intrinsic_info_upper_bound(std::span<const TripartiteTable> candidates);

}  // namespace entqkd
