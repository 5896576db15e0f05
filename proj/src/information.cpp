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

#include "entqkd/information.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

namespace {

void check_probs(const std::vector<double>& probs, std::size_t expected, double tol,
                 const char* what) {
  if (expected == 0) throw_validation(std::string(what) + ": empty alphabet");
  if (probs.size() != expected)
    throw_validation(std::string(what) + ": probability count does not match alphabets");
  double total = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0)
      throw_validation(std::string(what) + ": negative or non-finite probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol)
    throw_validation(std::string(what) + ": probabilities sum to " + std::to_string(total));
}

double plogp_ratio(double pab, double pa, double pb) {
  if (pab <= 0.0) return 0.0;
  return pab * std::log2(pab / (pa * pb));
}

std::string outcome_label(Basis b, int outcome) {
  return std::string(1, basis_letter(b)) + (outcome > 0 ? ",+1" : ",-1");
}

}  // namespace

void validate(const BipartiteTable& t, double tol) {
  check_probs(t.probs, t.alphabet_a.size() * t.alphabet_b.size(), tol, "bipartite table");
}

void validate(const TripartiteTable& t, double tol) {
  check_probs(t.probs, t.alphabet_a.size() * t.alphabet_b.size() * t.alphabet_e.size(), tol,
              "tripartite table");
}

BipartiteTable marginal_ab(const TripartiteTable& t) {
  BipartiteTable out{t.alphabet_a, t.alphabet_b,
                     std::vector<double>(t.alphabet_a.size() * t.alphabet_b.size(), 0.0)};
  for (std::size_t a = 0; a < t.alphabet_a.size(); ++a)
    for (std::size_t b = 0; b < t.alphabet_b.size(); ++b)
      for (std::size_t e = 0; e < t.alphabet_e.size(); ++e)
        out.probs[a * t.alphabet_b.size() + b] += t(a, b, e);
  return out;
}

double mutual_information(const BipartiteTable& p) {
  validate(p, 1e-9);
  const std::size_t na = p.alphabet_a.size();
  const std::size_t nb = p.alphabet_b.size();
  std::vector<double> pa(na, 0.0), pb(nb, 0.0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      pa[a] += p(a, b);
      pb[b] += p(a, b);
    }
  double mi = 0.0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) mi += plogp_ratio(p(a, b), pa[a], pb[b]);
  return std::max(0.0, mi);
}

double conditional_mutual_information(const TripartiteTable& p) {
  validate(p, 1e-9);
  const std::size_t na = p.alphabet_a.size();
  const std::size_t nb = p.alphabet_b.size();
  const std::size_t ne = p.alphabet_e.size();
  double cmi = 0.0;
  for (std::size_t e = 0; e < ne; ++e) {
    double pe = 0.0;
    std::vector<double> pae(na, 0.0), pbe(nb, 0.0);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        pe += p(a, b, e);
        pae[a] += p(a, b, e);
        pbe[b] += p(a, b, e);
      }
    if (pe <= 0.0) continue;
    // P(e) I(A;B|E=e) = sum_ab P(a,b,e) log[P(a,b,e) P(e) / (P(a,e) P(b,e))]
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        const double pabe = p(a, b, e);
        if (pabe > 0.0) cmi += pabe * std::log2(pabe * pe / (pae[a] * pbe[b]));
      }
  }
  return std::max(0.0, cmi);
}

bool conditionally_independent(const TripartiteTable& p, double tol) {
  const std::size_t na = p.alphabet_a.size();
  const std::size_t nb = p.alphabet_b.size();
  for (std::size_t e = 0; e < p.alphabet_e.size(); ++e) {
    double pe = 0.0;
    std::vector<double> pae(na, 0.0), pbe(nb, 0.0);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        pe += p(a, b, e);
        pae[a] += p(a, b, e);
        pbe[b] += p(a, b, e);
      }
    if (pe <= 0.0) continue;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b)
        if (std::abs(p(a, b, e) / pe - (pae[a] / pe) * (pbe[b] / pe)) > tol) return false;
  }
  return true;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

TripartiteTable separable_extension(std::span<const ProductTerm> mixture,
                                    const Protocol& protocol) {
  validate_protocol(protocol);
  if (mixture.empty()) throw_usage("separable_extension: empty mixture");
  double total = 0.0;
  for (const auto& term : mixture) {
    if (!(term.weight >= 0.0)) throw_usage("separable_extension: negative weight");
    if (std::abs(norm(term.a) - 1.0) > 1e-10 || std::abs(norm(term.b) - 1.0) > 1e-10)
      throw_usage("separable_extension: local vectors must be normalised");
    total += term.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw_usage("separable_extension: weights do not sum to 1");

  TripartiteTable out;
  for (Basis b : protocol.bases)
    for (int o : {1, -1}) {
      out.alphabet_a.push_back(outcome_label(b, o));
      out.alphabet_b.push_back(outcome_label(b, o));
    }
  for (std::size_t k = 0; k < mixture.size(); ++k) out.alphabet_e.push_back("k" + std::to_string(k));
  out.probs.assign(out.alphabet_a.size() * out.alphabet_b.size() * out.alphabet_e.size(), 0.0);

  // Eve's label fixes the product state, so P(A, B | e) factorises.
  const double q = protocol.basis_probability();
  const std::size_t nlab = out.alphabet_a.size();
  for (std::size_t k = 0; k < mixture.size(); ++k) {
    std::vector<double> pa(nlab), pb(nlab);
    std::size_t idx = 0;
    for (Basis b : protocol.bases)
      for (int o : {1, -1}) {
        pa[idx] = q * std::norm(dot(basis_vector(b, o), mixture[k].a));
        pb[idx] = q * std::norm(dot(basis_vector(b, o), mixture[k].b));
        ++idx;
      }
    for (std::size_t a = 0; a < nlab; ++a)
      for (std::size_t b = 0; b < nlab; ++b) out(a, b, k) = mixture[k].weight * pa[a] * pb[b];
  }
  validate(out, 1e-9);
  return out;
}

TripartiteTable sift(const TripartiteTable& t, Basis basis_a, Basis basis_b) {
  auto keep = [](const std::vector<std::string>& labels, Basis basis) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k].size() > 2 && labels[k][0] == basis_letter(basis) && labels[k][1] == ',')
        idx.push_back(k);
    return idx;
  };
  const auto ia = keep(t.alphabet_a, basis_a);
  const auto ib = keep(t.alphabet_b, basis_b);
  if (ia.empty() || ib.empty()) throw_usage("sift: basis not present in table labels");

  TripartiteTable out;
  for (auto a : ia) out.alphabet_a.push_back(t.alphabet_a[a].substr(2));
  for (auto b : ib) out.alphabet_b.push_back(t.alphabet_b[b].substr(2));
  out.alphabet_e = t.alphabet_e;
  out.probs.reserve(ia.size() * ib.size() * t.alphabet_e.size());
  double total = 0.0;
  for (auto a : ia)
    for (auto b : ib)
      for (std::size_t e = 0; e < t.alphabet_e.size(); ++e) {
        out.probs.push_back(t(a, b, e));
        total += t(a, b, e);
      }
  if (total <= 0.0) throw_usage("sift: basis pair has no weight");
  for (auto& p : out.probs) p /= total;
  return out;
}

double intrinsic_info_upper_bound(std::span<const TripartiteTable> candidates) {
  if (candidates.empty()) throw_usage("intrinsic_info_upper_bound: no candidates");
  const BipartiteTable ref = marginal_ab(candidates.front());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    validate(c, 1e-9);
    if (c.alphabet_a != ref.alphabet_a || c.alphabet_b != ref.alphabet_b)
      throw_usage("intrinsic_info_upper_bound: candidates use different alphabets");
    const BipartiteTable m = marginal_ab(c);
    for (std::size_t k = 0; k < m.probs.size(); ++k)
      if (std::abs(m.probs[k] - ref.probs[k]) > 1e-9)
        throw_usage("intrinsic_info_upper_bound: candidates extend different P(A,B)");
    best = std::min(best, conditional_mutual_information(c));
  }
  return best;
}

}  // namespace entqkd
