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

#ifndef HOTERM_REWRITE_HPP
#define HOTERM_REWRITE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hoterm/subst.hpp"
#include "hoterm/term.hpp"

namespace hoterm {

// A rewrite rule lhs => rhs over a shared rule environment. var_names, if
// nonempty, holds the surface name of each rule variable (index i of env
// is var_names[i]); used only for printing.
struct RewriteRule {
  VarEnv env;
  Term lhs = Term::var(0);
  Term rhs = Term::var(0);
  SimpleType type = SimpleType::base("");
  std::vector<std::string> var_names;
};

struct Afs {
  Signature sig;
  std::vector<RewriteRule> rules;
};

using Position = TermPath;

struct RuleStep {
  std::size_t rule_index;
  Substitution match;
};
struct BetaStep {};

// One rewrite step on a fixed subject term: where, by what, and the full
// rewritten term.
struct RewriteStep {
  Position position;
  std::variant<RuleStep, BetaStep> kind;
  Term result;
};

// First-order syntactic matching of a rule lhs against a subject at the
// same environment. A rule variable only matches a subterm with no
// occurrences of lhs-bound variables (the image must make sense in the
// rule environment). Nonlinear rules require syntactically equal images.
// Returns the total matched substitution rule_env -> subject_env, or
// nullopt.
std::optional<Substitution> match_lhs(const RewriteRule& rule,
                                      const Term& subject,
                                      const VarEnv& subject_env);

// All single steps out of t, in deterministic order: positions in
// pre-order (node before subterms, fn before arg), rule steps before the
// beta step at the same position, rules in declaration order.
std::vector<RewriteStep> redexes(const Afs& afs, const Term& t,
                                 const VarEnv& env = {});

struct NormalizeResult {
  Term term;
  std::vector<RewriteStep> trace;
  bool fuel_exhausted = false;
};

// Leftmost-outermost normalization: repeatedly take the first redex.
NormalizeResult normalize(const Afs& afs, const Term& t, std::size_t fuel,
                          const VarEnv& env = {});

enum class ViolationKind {
  UnknownBaseType,     // a symbol's type mentions an undeclared sort
  IllTypedRule,        // lhs or rhs does not typecheck
  RuleTypeMismatch,    // lhs and rhs typecheck at different types
  LambdaHeadedLhs,     // the lhs spine head is a lambda
  VariableHeadedLhs,   // the lhs spine head is a variable
  VariableNotInLhs,    // a rule variable does not occur in the lhs
};

struct Violation {
  ViolationKind kind;
  // Rule index or SIZE_MAX for signature-level problems.
  std::size_t rule_index;
  std::string message;
};

// Static well-formedness of the whole system. Empty result means the
// rewrite relation is well-defined and matching is total on rule
// variables.
std::vector<Violation> check_afs(const Afs& afs);

}  // namespace hoterm

#endif  // HOTERM_REWRITE_HPP
