// Copyright 2026 The ntilde Authors
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

#ifndef NTILDE_ERRORS_H_
#define NTILDE_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntilde {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An intermediate value grew past the configured bit budget.
class SizeGuardExceeded : public Error {
 public:
  explicit SizeGuardExceeded(std::uint64_t guard_bits)
      : Error("value exceeds size guard of " + std::to_string(guard_bits) +
              " bits"),
        guard_bits_(guard_bits) {}
  std::uint64_t guard_bits() const { return guard_bits_; }

 private:
  std::uint64_t guard_bits_;
};

// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {})
      : Error(Format(line, column, message, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string Format(std::size_t line, std::size_t column,
                            const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

// An operator is not part of the language selected by the domain header.
class DomainMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

class VariableCapExceeded : public Error {
 public:
  using Error::Error;
};

// A witness value lies outside the carrier of the system's domain.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class MissingVariable : public Error {
 public:
  using Error::Error;
};

class WitnessLiftFailure : public Error {
 public:
  using Error::Error;
};

class NotEncoderShaped : public Error {
 public:
  using Error::Error;
};

}  // namespace ntilde

#endif  // NTILDE_ERRORS_H_
