/*
 * Copyright 2026 The knnbv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
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

namespace knnbv {

// Machine-readable failure categories surfaced by the CLI exit path.
enum class ErrorCategory {
  invalid_argument,  // bad parameter combination or out-of-range value
  cap_exceeded,      // exponential-cost oracle invoked above its safety cap
  parse_error,       // malformed input file (row/column named in message)
  io_error,          // filesystem failure
  budget_exceeded,   // cooperative time budget ran out
  unsupported,       // operation undefined for this game (e.g. weighted where unit weights required)
};

inline const char* error_category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::invalid_argument: return "invalid_argument";
    case ErrorCategory::cap_exceeded: return "cap_exceeded";
    case ErrorCategory::parse_error: return "parse_error";
    case ErrorCategory::io_error: return "io_error";
    case ErrorCategory::budget_exceeded: return "budget_exceeded";
    case ErrorCategory::unsupported: return "unsupported";
  }
  return "unknown";
}

class KnnbvError : public std::runtime_error {
 public:
  KnnbvError(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace knnbv
