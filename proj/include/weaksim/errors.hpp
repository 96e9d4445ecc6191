// Copyright 2026 The weaksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEAKSIM_ERRORS_HPP
#define WEAKSIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weaksim {

/// Malformed or unsupported OpenQASM input. `line` is 1-based.
class ParseError : public std::invalid_argument {
  public:
    ParseError(std::size_t line, std::string token, const std::string &message)
        : std::invalid_argument("line " + std::to_string(line) + ": " + message + " ('" + token + "')"),
          line_(line),
          token_(std::move(token)) {
    }

    std::size_t line() const noexcept {
        return line_;
    }
    const std::string &token() const noexcept {
        return token_;
    }

  private:
    std::size_t line_;
    std::string token_;
};

/// A backend (or exporter) was handed an operation it cannot act on.
class UnsupportedOp : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Circuit or generator arguments violate a precondition.
class InvalidSpec : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// emit_qasm was given a channel or explicit-matrix op.
class UnsupportedExport : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Every candidate bitstring of a sampling step had vanishing probability.
class NumericalUnderflow : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace weaksim

#endif
