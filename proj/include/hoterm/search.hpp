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

#ifndef HOTERM_SEARCH_HPP
#define HOTERM_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hoterm/interpret.hpp"

namespace hoterm {

struct SearchConfig {
  unsigned max_coeff = 3;
  unsigned degree = 2;  // 1 or 2
  // When false the template family contains no F(...) atoms, so symbols
  // with higher-order arguments have no strongly monotone candidates and
  // systems using them come out Exhausted.
  bool allow_fun_args = true;
  double timeout_seconds = 10.0;
  unsigned parallelism = 0;  // 0 picks the hardware concurrency
};

// Per-symbol template family, instantiated: every strongly monotone
// candidate with coefficients in 0..max_coeff, in enumeration order (lex
// over the coefficient vector: constant, linear base coefficients,
// per-function-variable application coefficient and linear argument
// coefficients, then at degree 2 base products and base-times-application
// products). The search picks candidates in exactly this order.
std::vector<HOPoly> templates_for_symbol(const Signature& sig,
                                         const std::string& symbol,
                                         const SearchConfig& cfg);

// The pinned interpretation for symbols no rule mentions: sum of base
// arguments plus F(sum of base arguments) per function argument.
HOPoly minimal_interpretation(const Signature& sig, const std::string& symbol);

// A termination certificate: textual polynomial per symbol, plus the
// search configuration that produced it. Kept textual so verification
// re-parses from scratch.
struct Certificate {
  struct Entry {
    std::string symbol;
    std::string params_text;  // "" when the symbol takes no arguments
    std::string poly_text;
  };
  std::vector<Entry> entries;  // signature declaration order
  unsigned degree = 2;
  unsigned max_coeff = 3;
  std::string tool;  // optional tool/version tag
};

std::string certificate_to_string(const Certificate& cert);

// Inverse of certificate_to_string, line oriented. Throws SyntaxError.
Certificate parse_certificate(const std::string& text);

struct SearchStats {
  unsigned long long candidates_tried = 0;
  unsigned long long rule_checks = 0;
};

enum class SearchFailure { Exhausted, Timeout };

struct SearchOutcome {
  std::optional<Certificate> certificate;
  SearchFailure failure = SearchFailure::Exhausted;  // when no certificate
  SearchStats stats;
  // Rules that failed orientation at least once; diagnostic only.
  std::vector<std::size_t> hard_rules;
};

// Enumerate assignments of template candidates to the symbols occurring
// in rules (signature declaration order, depth-first, lexicographically
// least first) and return the first algebra orienting every rule. Rules
// are checked as soon as all their symbols are assigned, pruning the
// subtree on failure. Symbols outside every rule are pinned to
// minimal_interpretation. The outcome is deterministic for a given input
// and config, independent of parallelism, whenever the search finishes
// before the deadline; hitting the deadline returns a certificate only if
// one was already found (still sound, possibly not the least one).
SearchOutcome find_interpretation(const Afs& afs, const SearchConfig& cfg);

enum class VerifyStatus {
  Accept,
  ParseError,
  SignatureMismatch,
  NotStronglyMonotone,
  RuleNotOriented,
};

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Accept;
  std::string detail;
  bool accepted() const { return status == VerifyStatus::Accept; }
};

// Independent check of a certificate against a system: parses the text,
// matches it against the signature, and re-establishes strong
// monotonicity and the orientation of every rule. Shares no state with
// the search.
VerifyResult verify_certificate(const Afs& afs, const std::string& cert_text);

// The parsed algebra of a certificate (also used by verification).
Algebra certificate_algebra(const Signature& sig, const Certificate& cert);

}  // namespace hoterm

#endif  // HOTERM_SEARCH_HPP
