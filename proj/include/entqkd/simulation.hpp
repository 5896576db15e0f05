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

#include <optional>
#include <string_view>
#include <vector>

#include "entqkd/channels.hpp"
#include "entqkd/measurements.hpp"
#include "entqkd/states.hpp"
#include "entqkd/witnesses.hpp"

namespace entqkd {

// Text specs used by the command line and the C API:
//   protocol  four-state | six-state
//   source    phi-plus | phi-minus | psi-plus | psi-minus | mixed | werner:<p>
//   channel   identity | rotation:<angle> | depolarizing:<p>
//   attack    none | intercept-resend:<bases>   (bases from "xyz", e.g. xz)
//   angle     <number> | pi | pi/<n> | <k>*pi | <k>*pi/<n>, optional ":deg"
Protocol parse_protocol(std::string_view text);
TwoQubitState parse_source(std::string_view text);
Channel parse_channel(std::string_view text);
std::optional<std::vector<Basis>> parse_attack(std::string_view text);
double parse_angle(std::string_view text);

struct Simulation {
  TwoQubitState state;
  JointDistribution distribution;
  std::optional<AttackRecord> attack;
};

// Source -> channel on Bob's qubit -> optional intercept-resend -> statistics.
Simulation simulate(const Protocol& protocol, const TwoQubitState& source, const Channel& channel,
                    const std::optional<std::vector<Basis>>& attack);

struct ScanRow {
  double theta = 0.0;
  double qber_4state = 0.0;
  double qber_6state = 0.0;
  double witness_value_4state = 0.0;
  bool detected_4state = false;
  double min_pt_eigenvalue_6state = 0.0;
  bool detected_6state = false;
};

// Rotation-channel sweep over `points` angles from `from` to `to` inclusive
// (a single point uses `from`).
std::vector<ScanRow> scan_rotation(double from, double to, int points,
                                   double tol = kDefaultVerdictTol);

// LF line endings, '.' decimal separator, shortest round-trip numbers.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace entqkd
