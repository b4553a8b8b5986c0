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

#ifndef HOTERM_PARSER_HPP
#define HOTERM_PARSER_HPP

#include <string>
#include <utility>
#include <vector>

#include "hoterm/rewrite.hpp"

namespace hoterm {

// A parsed system together with its surface VARS declarations (needed to
// print it back in the same shape).
struct AfsFile {
  Afs afs;
  std::vector<std::pair<std::string, SimpleType>> vars;
};

// Well-formedness violations found after parsing, with rule line numbers
// folded into the message.
struct AfsError : Error {
  std::vector<Violation> violations;
  AfsError(const std::string& msg, std::vector<Violation> v)
      : Error(msg), violations(std::move(v)) {}
};

// Parse the SIG/VARS/RULES text format. Throws SyntaxError for malformed
// input and AfsError when the parsed system fails check_afs.
//
//   # comment
//   SIG
//     cons : nat -> list -> list
//   VARS
//     x : nat
//   RULES
//     lhs => rhs
//
// Identifiers are ASCII [A-Za-z0-9_']+; lambdas are written \x:type. body
// and application is juxtaposition. Rule variables are indexed in order
// of first occurrence. Base sorts are collected from the mentioned types.
AfsFile parse_afs(const std::string& text);

// Parse one closed term (lambda binders allowed) over a signature.
Term parse_term(const std::string& text, const Signature& sig);

}  // namespace hoterm

#endif  // HOTERM_PARSER_HPP
