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

// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success / entanglement detected, 3 not detected, 2 input or
// usage error, 4 numeric or internal failure, 1 output file not writable.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entqkd/entqkd.h"
#include "json.hpp"

namespace {

constexpr int kExitDetected = 0;
constexpr int kExitWriteFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotDetected = 3;
constexpr int kExitNumeric = 4;

struct CliError {
  int code;
  std::string message;
};

void check(eqkd_status status) {
  if (status == EQKD_OK) return;
  const int code = (status == EQKD_ERR_USAGE || status == EQKD_ERR_VALIDATION) ? kExitInput
                                                                               : kExitNumeric;
  throw CliError{code, eqkd_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { eqkd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct DistDeleter {
  void operator()(eqkd_distribution* d) const { eqkd_distribution_free(d); }
};
struct DetDeleter {
  void operator()(eqkd_detection* d) const { eqkd_detection_free(d); }
};
struct TableDeleter {
  void operator()(eqkd_tripartite* t) const { eqkd_tripartite_free(t); }
};
using Distribution = std::unique_ptr<eqkd_distribution, DistDeleter>;
using Detection = std::unique_ptr<eqkd_detection, DetDeleter>;
using Table = std::unique_ptr<eqkd_tripartite, TableDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitInput, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw CliError{kExitWriteFailed, "cannot write '" + path + "'"};
}

Distribution load_distribution(const std::string& path) {
  const std::string text = read_file(path);
  eqkd_distribution* raw = nullptr;
  check(eqkd_distribution_from_json(text.c_str(), &raw));
  return Distribution(raw);
}

double angle(const std::string& text) {
  double v = 0.0;
  check(eqkd_parse_angle(text.c_str(), &v));
  return v;
}

struct Options {
  std::string protocol = "four-state";
  std::string source = "phi-plus";
  std::string channel = "identity";
  std::string attack = "none";
  std::string output;
  std::string tripartite_output;
  std::string input;
  std::vector<std::string> inputs;
  double tol = 1e-9;
  int resolution = 0;
  bool emit_pseudo_mixture = false;
  std::string from = "0";
  std::string to = "pi/2";
  int points = 181;
};

int run_simulate(const Options& o) {
  eqkd_distribution* raw = nullptr;
  eqkd_tripartite* eve_raw = nullptr;
  check(eqkd_simulate(o.protocol.c_str(), o.source.c_str(), o.channel.c_str(), o.attack.c_str(),
                      &raw, o.tripartite_output.empty() ? nullptr : &eve_raw));
  Distribution dist(raw);
  Table eve(eve_raw);

  char* json = nullptr;
  check(eqkd_distribution_to_json(dist.get(), &json));
  OwnedString text(json);
  write_output(o.output, text.get());

  if (!o.tripartite_output.empty()) {
    if (!eve) throw CliError{kExitInput, "--emit-tripartite needs an --attack"};
    char* tj = nullptr;
    check(eqkd_tripartite_to_json(eve.get(), &tj));
    OwnedString ttext(tj);
    write_output(o.tripartite_output, ttext.get());
  }
  return 0;
}

int run_detect(const Options& o) {
  Distribution dist = load_distribution(o.input);
  eqkd_detection* raw = nullptr;
  check(eqkd_detect(dist.get(), o.tol, &raw));
  Detection det(raw);

  char* json = nullptr;
  check(eqkd_detection_report_json(det.get(), dist.get(), o.emit_pseudo_mixture ? 1 : 0, &json));
  OwnedString text(json);
  std::string report = text.get();

  if (o.resolution > 0) {
    int six = 0;
    check(eqkd_distribution_is_six_state(dist.get(), &six));
    if (six) throw CliError{kExitInput, "--resolution applies to four-state data only"};
    eqkd_detection* graw = nullptr;
    check(eqkd_grid_search(dist.get(), o.resolution, o.tol, &graw));
    Detection grid(graw);
    auto doc = nlohmann::json::parse(report);
    doc["grid_search"] = {
        {"resolution", o.resolution},
        {"verdict",
         eqkd_detection_verdict(grid.get()) == EQKD_DETECTED ? "Detected" : "NotDetected"},
        {"value", eqkd_detection_value(grid.get())}};
    report = doc.dump(2) + "\n";
  }
  write_output(o.output, report);
  return eqkd_detection_verdict(det.get()) == EQKD_DETECTED ? kExitDetected : kExitNotDetected;
}

int run_tomo(const Options& o) {
  Distribution dist = load_distribution(o.input);
  int entangled = 0;
  char* json = nullptr;
  check(eqkd_tomography_json(dist.get(), o.tol, &entangled, &json));
  OwnedString text(json);
  write_output(o.output, text.get());
  return entangled ? kExitDetected : kExitNotDetected;
}

int run_scan(const Options& o) {
  char* csv = nullptr;
  check(eqkd_scan_csv(angle(o.from), angle(o.to), o.points, o.tol, &csv));
  OwnedString text(csv);
  write_output(o.output, text.get());
  return 0;
}

int run_info(const Options& o) {
  std::vector<Table> tables;
  std::vector<const eqkd_tripartite*> views;
  for (const auto& path : o.inputs) {
    const std::string text = read_file(path);
    eqkd_tripartite* raw = nullptr;
    check(eqkd_tripartite_from_json(text.c_str(), &raw));
    tables.emplace_back(raw);
    views.push_back(raw);
  }
  char* json = nullptr;
  check(eqkd_info_report_json(views.data(), views.size(), &json));
  OwnedString text(json);
  write_output(o.output, text.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement verification for 4-state and 6-state QKD correlations"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Write the exact joint outcome distribution");
  simulate->add_option("--protocol", o.protocol, "four-state | six-state")
      ->check(CLI::IsMember({"four-state", "six-state"}));
  simulate->add_option("--source", o.source,
                       "phi-plus | phi-minus | psi-plus | psi-minus | mixed | werner:<p>");
  simulate->add_option("--channel", o.channel,
                       "identity | rotation:<angle>[:deg] | depolarizing:<p>");
  simulate->add_option("--attack", o.attack, "none | intercept-resend:<bases>, e.g. xz");
  simulate->add_option("--output", o.output, "Output file (default stdout)");
  simulate->add_option("--emit-tripartite", o.tripartite_output,
                       "Also write Eve's P(A,B,E) table for the attack");

  auto* detect = app.add_subcommand("detect", "Search for an entanglement witness in the data");
  detect->add_option("input", o.input, "Distribution JSON")->required();
  detect->add_option("--tol", o.tol, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  detect->add_option("--output", o.output, "Report file (default stdout)");
  detect->add_flag("--emit-pseudo-mixture", o.emit_pseudo_mixture,
                   "Include the witness as a pseudo-mixture of measured projectors");
  detect->add_option("--resolution", o.resolution,
                     "Also run the grid search over the witness family at this resolution")
      ->check(CLI::Range(8, 512));

  auto* tomo = app.add_subcommand("tomo", "Reconstruct the state from six-state data");
  tomo->add_option("input", o.input, "Distribution JSON")->required();
  tomo->add_option("--tol", o.tol, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  tomo->add_option("--output", o.output, "Report file (default stdout)");

  auto* scan = app.add_subcommand("scan", "Sweep the rotation channel angle and write CSV");
  scan->add_option("--from", o.from, "First angle (radians, pi/n forms, or <x>:deg)");
  scan->add_option("--to", o.to, "Last angle, inclusive");
  scan->add_option("--points", o.points, "Number of angles")->check(CLI::Range(1, 1000000));
  scan->add_option("--tol", o.tol, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  scan->add_option("--output", o.output, "CSV file (default stdout)");

  auto* info = app.add_subcommand("info", "Mutual information of tripartite tables");
  info->add_option("inputs", o.inputs, "Tripartite JSON tables extending one P(A,B)")
      ->required();
  info->add_option("--output", o.output, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (simulate->parsed()) return run_simulate(o);
    if (detect->parsed()) return run_detect(o);
    if (tomo->parsed()) return run_tomo(o);
    if (scan->parsed()) return run_scan(o);
    if (info->parsed()) return run_info(o);
  } catch (const CliError& e) {
    std::cerr << "entqkd: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "entqkd: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}
