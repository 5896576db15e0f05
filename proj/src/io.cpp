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

#include "entqkd/io.hpp"

#include <cmath>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

using nlohmann::json;

namespace {

std::string outcome_text(int o) { return o > 0 ? "+1" : "-1"; }

std::string prob_key(Basis ba, int a, Basis bb, int b) {
  return std::string(1, basis_letter(ba)) + ',' + outcome_text(a) + ',' + basis_letter(bb) + ',' +
         outcome_text(b);
}

[[noreturn]] void schema_error(const std::string& what) { throw_validation("schema: " + what); }

const json& require_field(const json& doc, const char* name) {
  if (!doc.is_object()) schema_error("document must be a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) schema_error(std::string("missing field '") + name + "'");
  return *it;
}

json vec_to_json(const Vec4& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back({x.real(), x.imag()});
  return out;
}

std::vector<std::string> string_list(const json& j, const char* name) {
  if (!j.is_array()) schema_error(std::string("'") + name + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) schema_error(std::string("'") + name + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

std::string witness_index_label(std::size_t i, std::size_t j) {
  static const char* names = "0xyz";
  return std::string{names[i], names[j]};
}

json distribution_to_json(const JointDistribution& dist) {
  json probs = json::object();
  for (Basis ba : dist.protocol().bases)
    for (int a : {1, -1})
      for (Basis bb : dist.protocol().bases)
        for (int b : {1, -1}) probs[prob_key(ba, a, bb, b)] = dist.prob(ba, a, bb, b);
  return json{{"protocol", dist.protocol().name()},
              {"basis_probs", "uniform"},
              {"probs", probs},
              {"qber", qber(dist)}};
}

JointDistribution distribution_from_json(const json& doc) {
  const json& proto = require_field(doc, "protocol");
  if (!proto.is_string()) schema_error("'protocol' must be a string");
  const std::string name = proto.get<std::string>();
  Protocol protocol;
  if (name == "four-state")
    protocol = Protocol::four_state();
  else if (name == "six-state")
    protocol = Protocol::six_state();
  else
    schema_error("unknown protocol '" + name + "'");

  const json& basis_probs = require_field(doc, "basis_probs");
  if (!basis_probs.is_string() || basis_probs.get<std::string>() != "uniform")
    schema_error("'basis_probs' must be \"uniform\"");

  const json& probs = require_field(doc, "probs");
  if (!probs.is_object()) schema_error("'probs' must be an object");

  JointDistribution::Table table{};
  std::size_t expected = 0;
  for (Basis ba : protocol.bases)
    for (int a : {1, -1})
      for (Basis bb : protocol.bases)
        for (int b : {1, -1}) {
          const std::string key = prob_key(ba, a, bb, b);
          const auto it = probs.find(key);
          if (it == probs.end()) schema_error("missing probability '" + key + "'");
          if (!it->is_number()) schema_error("probability '" + key + "' is not a number");
          table[JointDistribution::index(ba, a, bb, b)] = it->get<double>();
          ++expected;
        }
  if (probs.size() != expected)
    schema_error("'probs' has keys outside the " + name + " protocol");
  return make_distribution(protocol, table, kSumTolerance);
}

JointDistribution distribution_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  return distribution_from_json(doc);
}

json witness_to_json(const Witness& w) {
  json coeffs = json::object();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) coeffs[witness_index_label(i, j)] = w.coefficients[i][j];
  const char* cls = w.class_tag == WitnessClass::EW4   ? "EW4"
                    : w.class_tag == WitnessClass::OEW ? "OEW"
                                                       : "General";
  json out{{"class", cls}, {"coefficients", coeffs}, {"trace", w.trace()}};
  out["generator"] = w.generator ? vec_to_json(*w.generator) : json(nullptr);
  return out;
}

json detection_to_json(const DetectionResult& result, const JointDistribution& dist, double tol,
                       bool emit_pseudo_mixture) {
  json out{{"protocol", dist.protocol().name()},
           {"verdict", result.verdict == Verdict::Detected ? "Detected" : "NotDetected"},
           {"value", result.value},
           {"margin", result.margin},
           {"min_eigenvalue", result.min_eigenvalue},
           {"qber", qber(dist)},
           {"tolerance", tol}};
  out["witness"] = result.witness ? witness_to_json(*result.witness) : json(nullptr);
  if (emit_pseudo_mixture) {
    if (result.witness && result.witness->class_tag == WitnessClass::EW4) {
      const PseudoMixture pm = pseudo_mixture(*result.witness);
      json terms = json::array();
      for (const auto& t : pm.terms)
        terms.push_back({{"coefficient", t.coefficient},
                         {"a", std::string(1, basis_letter(t.basis_a)) + ',' +
                                   outcome_text(t.outcome_a)},
                         {"b", std::string(1, basis_letter(t.basis_b)) + ',' +
                                   outcome_text(t.outcome_b)}});
      out["pseudo_mixture"] = {{"terms", terms},
                               {"coefficient_sum", pm.coefficient_sum()},
                               {"value_from_data", evaluate_pseudo_mixture(pm, dist)}};
    } else {
      out["pseudo_mixture"] = nullptr;
    }
  }
  return out;
}

json tripartite_to_json(const TripartiteTable& t) {
  json probs = json::array();
  for (std::size_t a = 0; a < t.alphabet_a.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < t.alphabet_b.size(); ++b) {
      json cell = json::array();
      for (std::size_t e = 0; e < t.alphabet_e.size(); ++e) cell.push_back(t(a, b, e));
      row.push_back(cell);
    }
    probs.push_back(row);
  }
  return json{{"alphabet_a", t.alphabet_a},
              {"alphabet_b", t.alphabet_b},
              {"alphabet_e", t.alphabet_e},
              {"probs", probs}};
}

TripartiteTable tripartite_from_json(const json& doc) {
  TripartiteTable t;
  t.alphabet_a = string_list(require_field(doc, "alphabet_a"), "alphabet_a");
  t.alphabet_b = string_list(require_field(doc, "alphabet_b"), "alphabet_b");
  t.alphabet_e = string_list(require_field(doc, "alphabet_e"), "alphabet_e");
  const json& probs = require_field(doc, "probs");
  auto shape_error = [] { schema_error("'probs' must have shape [|A|][|B|][|E|]"); };
  if (!probs.is_array() || probs.size() != t.alphabet_a.size()) shape_error();
  for (const auto& row : probs) {
    if (!row.is_array() || row.size() != t.alphabet_b.size()) shape_error();
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != t.alphabet_e.size()) shape_error();
      for (const auto& p : cell) {
        if (!p.is_number()) schema_error("'probs' entries must be numbers");
        t.probs.push_back(p.get<double>());
      }
    }
  }
  validate(t, kSumTolerance);
  return t;
}

TripartiteTable tripartite_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  return tripartite_from_json(doc);
}

json info_report(std::span<const TripartiteTable> candidates) {
  if (candidates.empty()) throw_usage("info: no tables");
  json per = json::array();
  for (const auto& c : candidates) per.push_back(conditional_mutual_information(c));
  return json{{"mutual_information_ab", mutual_information(marginal_ab(candidates.front()))},
              {"conditional_mutual_information", per},
              {"intrinsic_information_upper_bound", intrinsic_info_upper_bound(candidates)},
              {"candidates", candidates.size()},
              {"units", "bits"}};
}

json tomography_report(const JointDistribution& dist, double tol) {
  const TwoQubitState rho = reconstruct_state(dist, std::max(tol, 1e-9));
  const PptResult ppt = is_ppt(rho, tol);
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json rr = json::array();
    json ri = json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rr.push_back(rho.rho()(r, c).real());
      ri.push_back(rho.rho()(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  json pauli_json = json::object();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) pauli_json[witness_index_label(i, j)] = rho.pauli()[i][j];
  json out{{"rho_real", re},
           {"rho_imag", im},
           {"pauli", pauli_json},
           {"min_pt_eigenvalue", ppt.min_eigenvalue},
           {"ppt", ppt.verdict == PptVerdict::PPT ? "PPT" : "NPT"},
           {"entangled", ppt.verdict == PptVerdict::NPT},
           {"tolerance", tol}};
  out["neg_eigenvector"] = ppt.neg_eigenvector ? vec_to_json(*ppt.neg_eigenvector) : json(nullptr);
  return out;
}

}  // namespace entqkd
