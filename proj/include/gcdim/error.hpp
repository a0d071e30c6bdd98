/*
 * Copyright (c) 2026, the gcdim authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcdim {

enum class ErrorKind {
  ZeroInverse,
  NotHomogeneous,
  UnitIdeal,
  BadOrder,
  BadArgument,
  RankMismatch,
  RingMismatch,
  NotExact,
  UncertifiedDualizer,
  ABViolation,
  ZeroModule,
  Parse,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::UncertifiedDualizer: return "UncertifiedDualizer";
    case ErrorKind::ABViolation: return "ABViolation";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the machine-readable tag
/// that the CLI reports; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gcdim
