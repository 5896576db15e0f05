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

#include <stdexcept>
#include <string>

namespace entqkd {

enum class ErrorKind {
  Usage,       // caller passed arguments outside the documented domain
  Validation,  // a value failed an invariant check (state, channel, table)
  Numeric,     // an iterative routine did not converge
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& what) {
  throw Error(ErrorKind::Usage, what);
}

[[noreturn]] inline void throw_validation(const std::string& what) {
  throw Error(ErrorKind::Validation, what);
}

[[noreturn]] inline void throw_numeric(const std::string& what) {
  throw Error(ErrorKind::Numeric, what);
}

}  // namespace entqkd
