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

#include "entqkd/entqkd.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "entqkd/errors.hpp"
#include "entqkd/io.hpp"
#include "entqkd/simulation.hpp"

struct eqkd_distribution {
  entqkd::JointDistribution dist;
};

struct eqkd_detection {
  entqkd::DetectionResult result;
  double tol;
};

struct eqkd_tripartite {
  entqkd::TripartiteTable table;
};

namespace {

thread_local std::string g_last_error;

eqkd_status fail(eqkd_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename F>
eqkd_status guarded(F&& body) {
  try {
    body();
    return EQKD_OK;
  } catch (const entqkd::Error& e) {
    switch (e.kind()) {
      case entqkd::ErrorKind::Usage: return fail(EQKD_ERR_USAGE, e.what());
      case entqkd::ErrorKind::Validation: return fail(EQKD_ERR_VALIDATION, e.what());
      case entqkd::ErrorKind::Numeric: return fail(EQKD_ERR_NUMERIC, e.what());
    }
    return fail(EQKD_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EQKD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EQKD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EQKD_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) entqkd::throw_usage(std::string(what) + " must not be NULL");
}

entqkd::Basis basis_arg(char c) {
  const auto b = entqkd::basis_from_letter(c);
  if (!b) entqkd::throw_usage("basis must be one of 'x', 'y', 'z'");
  return *b;
}

}  // namespace

extern "C" {

const char* eqkd_version(void) { return "0.1.0"; }

const char* eqkd_last_error(void) { return g_last_error.c_str(); }

void eqkd_string_free(char* s) { std::free(s); }

eqkd_status eqkd_simulate(const char* protocol, const char* source, const char* channel,
                          const char* attack, eqkd_distribution** out_dist,
                          eqkd_tripartite** out_eve) {
  return guarded([&] {
    require(protocol, "protocol");
    require(out_dist, "out_dist");
    *out_dist = nullptr;
    if (out_eve) *out_eve = nullptr;
    const auto proto = entqkd::parse_protocol(protocol);
    const auto sim = entqkd::simulate(proto, entqkd::parse_source(source ? source : "phi-plus"),
                                      entqkd::parse_channel(channel ? channel : "identity"),
                                      entqkd::parse_attack(attack ? attack : "none"));
    auto dist = std::make_unique<eqkd_distribution>(eqkd_distribution{sim.distribution});
    if (out_eve && sim.attack)
      *out_eve = new eqkd_tripartite{entqkd::attack_table(*sim.attack, proto)};
    *out_dist = dist.release();
  });
}

eqkd_status eqkd_distribution_from_json(const char* text, eqkd_distribution** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new eqkd_distribution{entqkd::distribution_from_json_text(text)};
  });
}

eqkd_status eqkd_distribution_to_json(const eqkd_distribution* dist, char** out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    *out = copy_string(entqkd::distribution_to_json(dist->dist).dump(2) + "\n");
  });
}

eqkd_status eqkd_distribution_is_six_state(const eqkd_distribution* dist, int* out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    *out = dist->dist.protocol().kind == entqkd::ProtocolKind::SixState ? 1 : 0;
  });
}

eqkd_status eqkd_distribution_probability(const eqkd_distribution* dist, char basis_a, int a,
                                          char basis_b, int b, double* out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    if ((a != 1 && a != -1) || (b != 1 && b != -1))
      entqkd::throw_usage("outcomes must be +1 or -1");
    *out = dist->dist.prob(basis_arg(basis_a), a, basis_arg(basis_b), b);
  });
}

eqkd_status eqkd_distribution_qber(const eqkd_distribution* dist, double* out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    *out = entqkd::qber(dist->dist);
  });
}

void eqkd_distribution_free(eqkd_distribution* dist) { delete dist; }

eqkd_status eqkd_detect(const eqkd_distribution* dist, double tol, eqkd_detection** out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    if (!(tol >= 0.0)) entqkd::throw_usage("tol must be nonnegative");
    const auto result = dist->dist.protocol().kind == entqkd::ProtocolKind::FourState
                            ? entqkd::detect_4state(dist->dist, tol)
                            : entqkd::detect_6state(dist->dist, tol);
    *out = new eqkd_detection{result, tol};
  });
}

eqkd_status eqkd_grid_search(const eqkd_distribution* dist, int resolution, double tol,
                             eqkd_detection** out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    if (!(tol >= 0.0)) entqkd::throw_usage("tol must be nonnegative");
    *out = new eqkd_detection{entqkd::grid_search_family(dist->dist, resolution, tol), tol};
  });
}

eqkd_verdict eqkd_detection_verdict(const eqkd_detection* det) {
  return det && det->result.verdict == entqkd::Verdict::Detected ? EQKD_DETECTED
                                                                 : EQKD_NOT_DETECTED;
}

double eqkd_detection_value(const eqkd_detection* det) { return det ? det->result.value : 0.0; }

double eqkd_detection_margin(const eqkd_detection* det) { return det ? det->result.margin : 0.0; }

double eqkd_detection_min_eigenvalue(const eqkd_detection* det) {
  return det ? det->result.min_eigenvalue : 0.0;
}

eqkd_status eqkd_detection_witness_coefficients(const eqkd_detection* det, double out[16]) {
  return guarded([&] {
    require(det, "det");
    require(out, "out");
    if (!det->result.witness) entqkd::throw_usage("detection carries no witness");
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out[4 * i + j] = det->result.witness->coefficients[i][j];
  });
}

eqkd_status eqkd_detection_report_json(const eqkd_detection* det, const eqkd_distribution* dist,
                                       int emit_pseudo_mixture, char** out) {
  return guarded([&] {
    require(det, "det");
    require(dist, "dist");
    require(out, "out");
    const auto doc =
        entqkd::detection_to_json(det->result, dist->dist, det->tol, emit_pseudo_mixture != 0);
    *out = copy_string(doc.dump(2) + "\n");
  });
}

void eqkd_detection_free(eqkd_detection* det) { delete det; }

eqkd_status eqkd_tomography_json(const eqkd_distribution* dist, double tol, int* entangled,
                                 char** out) {
  return guarded([&] {
    require(dist, "dist");
    require(out, "out");
    const auto doc = entqkd::tomography_report(dist->dist, tol);
    if (entangled) *entangled = doc.at("entangled").get<bool>() ? 1 : 0;
    *out = copy_string(doc.dump(2) + "\n");
  });
}

eqkd_status eqkd_parse_angle(const char* text, double* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = entqkd::parse_angle(text);
  });
}

eqkd_status eqkd_scan_csv(double theta_from, double theta_to, int points, double tol,
                          char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(
        entqkd::scan_csv(entqkd::scan_rotation(theta_from, theta_to, points, tol)));
  });
}

eqkd_status eqkd_tripartite_from_json(const char* text, eqkd_tripartite** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new eqkd_tripartite{entqkd::tripartite_from_json_text(text)};
  });
}

eqkd_status eqkd_tripartite_to_json(const eqkd_tripartite* t, char** out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    *out = copy_string(entqkd::tripartite_to_json(t->table).dump(2) + "\n");
  });
}

eqkd_status eqkd_tripartite_mutual_information(const eqkd_tripartite* t, double* out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    *out = entqkd::mutual_information(entqkd::marginal_ab(t->table));
  });
}

eqkd_status eqkd_tripartite_cmi(const eqkd_tripartite* t, double* out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    *out = entqkd::conditional_mutual_information(t->table);
  });
}

eqkd_status eqkd_info_report_json(const eqkd_tripartite* const* candidates, size_t count,
                                  char** out) {
  return guarded([&] {
    require(candidates, "candidates");
    require(out, "out");
    std::vector<entqkd::TripartiteTable> tables;
    for (size_t k = 0; k < count; ++k) {
      require(candidates[k], "candidate");
      tables.push_back(candidates[k]->table);
    }
    *out = copy_string(entqkd::info_report(tables).dump(2) + "\n");
  });
}

void eqkd_tripartite_free(eqkd_tripartite* t) { delete t; }

}  // extern "C"
