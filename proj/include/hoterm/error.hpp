// Copyright 2026 The hoterm Authors
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

#ifndef HOTERM_ERROR_HPP
#define HOTERM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hoterm {

// Root of all exceptions thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A type, term, or rule falls outside the order-2 fragment the
// interpretation machinery supports.
struct UnsupportedOrderError : Error {
  explicit UnsupportedOrderError(const std::string& msg) : Error(msg) {}
};

// Environment shapes disagree (substitution application, composition).
struct EnvMismatchError : Error {
  explicit EnvMismatchError(const std::string& msg) : Error(msg) {}
};

// Malformed polynomial arithmetic: context mismatch, arity mismatch,
// valuation of the wrong shape.
struct PolyError : Error {
  explicit PolyError(const std::string& msg) : Error(msg) {}
};

// Text input that does not parse. Positions are 1-based.
struct SyntaxError : Error {
  int line;
  int col;
  SyntaxError(int line_, int col_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace hoterm

#endif  // HOTERM_ERROR_HPP
