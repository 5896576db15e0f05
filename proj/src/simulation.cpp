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

#include "entqkd/simulation.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, const char* what) {
  text = trim(text);
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw_usage(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  return v;
}

// Splits "kind:rest" at the first colon.
std::pair<std::string_view, std::string_view> split_kind(std::string_view text) {
  const auto pos = text.find(':');
  if (pos == std::string_view::npos) return {trim(text), {}};
  return {trim(text.substr(0, pos)), text.substr(pos + 1)};
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

Protocol parse_protocol(std::string_view text) {
  text = trim(text);
  if (text == "four-state") return Protocol::four_state();
  if (text == "six-state") return Protocol::six_state();
  throw_usage("unknown protocol '" + std::string(text) + "' (four-state | six-state)");
}

double parse_angle(std::string_view text) {
  text = trim(text);
  bool degrees = false;
  constexpr std::string_view kDeg = ":deg";
  if (text.size() > kDeg.size() && text.substr(text.size() - kDeg.size()) == kDeg) {
    degrees = true;
    text = trim(text.substr(0, text.size() - kDeg.size()));
  }
  double value = 0.0;
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    value = parse_number(text, "angle");
  } else {
    if (degrees) throw_usage("angle: 'pi' cannot be combined with ':deg'");
    double factor = 1.0;
    std::string_view head = trim(text.substr(0, pi_pos));
    if (!head.empty()) {
      if (head == "-") {
        factor = -1.0;
      } else {
        if (head.back() != '*') throw_usage("angle: expected '<k>*pi'");
        factor = parse_number(head.substr(0, head.size() - 1), "angle factor");
      }
    }
    std::string_view tail = trim(text.substr(pi_pos + 2));
    double divisor = 1.0;
    if (!tail.empty()) {
      if (tail.front() != '/') throw_usage("angle: expected 'pi/<n>'");
      divisor = parse_number(tail.substr(1), "angle divisor");
      if (divisor == 0.0) throw_usage("angle: division by zero");
    }
    value = factor * std::numbers::pi / divisor;
  }
  return degrees ? value * std::numbers::pi / 180.0 : value;
}

TwoQubitState parse_source(std::string_view text) {
  const auto [kind, rest] = split_kind(text);
  if (kind == "phi-plus") return bell_state(Bell::PhiPlus);
  if (kind == "phi-minus") return bell_state(Bell::PhiMinus);
  if (kind == "psi-plus") return bell_state(Bell::PsiPlus);
  if (kind == "psi-minus") return bell_state(Bell::PsiMinus);
  if (kind == "mixed") return maximally_mixed();
  if (kind == "werner") return werner(parse_number(rest, "werner weight"));
  throw_usage("unknown source '" + std::string(text) + "'");
}

Channel parse_channel(std::string_view text) {
  const auto [kind, rest] = split_kind(text);
  if (kind == "identity") return identity_channel();
  if (kind == "rotation") return rotation_channel(parse_angle(rest));
  if (kind == "depolarizing") return depolarizing_channel(parse_number(rest, "depolarizing p"));
  throw_usage("unknown channel '" + std::string(text) + "'");
}

std::optional<std::vector<Basis>> parse_attack(std::string_view text) {
  const auto [kind, rest] = split_kind(text);
  if (kind == "none" || kind.empty()) return std::nullopt;
  if (kind != "intercept-resend") throw_usage("unknown attack '" + std::string(text) + "'");
  std::vector<Basis> bases;
  for (char c : trim(rest)) {
    const auto b = basis_from_letter(c);
    if (!b) throw_usage(std::string("intercept-resend: unknown basis '") + c + "'");
    bases.push_back(*b);
  }
  if (bases.empty()) throw_usage("intercept-resend: empty basis set");
  return bases;
}

Simulation simulate(const Protocol& protocol, const TwoQubitState& source, const Channel& channel,
                    const std::optional<std::vector<Basis>>& attack) {
  TwoQubitState state = apply_to_bob(channel, source);
  std::optional<AttackRecord> record;
  if (attack) {
    record = intercept_resend(*attack, state);
    state = record->post_state;
  }
  JointDistribution dist = joint_distribution(state, protocol);
  return Simulation{state, std::move(dist), std::move(record)};
}

std::vector<ScanRow> scan_rotation(double from, double to, int points, double tol) {
  if (points < 1) throw_usage("scan: need at least one point");
  if (!std::isfinite(from) || !std::isfinite(to)) throw_usage("scan: non-finite range");
  const Protocol four = Protocol::four_state();
  const Protocol six = Protocol::six_state();
  const TwoQubitState source = bell_state(Bell::PhiPlus);

  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double theta = points == 1 ? from : from + (to - from) * k / (points - 1);
    const TwoQubitState state = apply_to_bob(rotation_channel(theta), source);
    const JointDistribution d4 = joint_distribution(state, four);
    const JointDistribution d6 = joint_distribution(state, six);
    const DetectionResult r4 = detect_4state(d4, tol);
    const DetectionResult r6 = detect_6state(d6, tol);
    rows.push_back({theta, qber(d4), qber(d6), r4.value, r4.verdict == Verdict::Detected,
                    r6.min_eigenvalue, r6.verdict == Verdict::Detected});
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out =
      "theta,qber_4state,qber_6state,witness_value_4state,detected_4state,"
      "min_pt_eigenvalue_6state,detected_6state\n";
  for (const auto& r : rows) {
    append_number(out, r.theta);
    out += ',';
    append_number(out, r.qber_4state);
    out += ',';
    append_number(out, r.qber_6state);
    out += ',';
    append_number(out, r.witness_value_4state);
    out += r.detected_4state ? ",true," : ",false,";
    append_number(out, r.min_pt_eigenvalue_6state);
    out += r.detected_6state ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace entqkd
