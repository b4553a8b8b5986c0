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

#ifndef HOTERM_INTERPRET_HPP
#define HOTERM_INTERPRET_HPP

#include <map>
#include <string>
#include <vector>

#include "hoterm/order.hpp"
#include "hoterm/poly.hpp"
#include "hoterm/rewrite.hpp"

namespace hoterm {

// Interpretation of every symbol: J(f) is a polynomial over the uncurried
// argument context of ar(f) (one variable per argument, in order).
struct Algebra {
  std::map<std::string, HOPoly> interp;

  const HOPoly& of(const std::string& symbol) const;
};

// Argument context of a symbol type: poly_var_for each argument of the
// decomposition. Throws UnsupportedOrderError when ar(f) has order > 2.
PolyContext symbol_context(const SimpleType& type);

// Interpretation of an open term: a polynomial over the reversed
// environment followed by the uncurried arguments of the term's type.
// Reversal puts the outermost binder first, so extending the environment
// appends on the semantic side.
struct OpenInterp {
  VarEnv env;
  SimpleType type;
  HOPoly body;
};

PolyContext open_context(const VarEnv& env, const SimpleType& type);

// Application with the built-in penalty: the result of @(f, x) is f at x
// plus nu(x) + 1 at the base result. Makes every beta step strictly
// decreasing under any strongly monotone algebra.
OpenInterp app_interp(const OpenInterp& fn, const OpenInterp& arg);

// Compositional interpretation of a well-typed term of the order-2
// fragment. Environment entries must have order <= 1.
OpenInterp interp_term(const Algebra& alg, const Signature& sig,
                       const VarEnv& env, const Term& t);

// Closed base-typed terms evaluate to a number under an algebra.
Nat interp_value(const Algebra& alg, const Signature& sig, const Term& t);

enum class Orientation { Oriented, Inconclusive };

// Conservative: Oriented means the lhs interpretation strictly dominates
// the rhs everywhere; Inconclusive decides nothing.
Orientation check_rule_oriented(const Algebra& alg, const Signature& sig,
                                const RewriteRule& rule);

// Every J(f) present, of the right shape, and strongly monotone in all
// argument positions. Failing symbols reported through `why` if nonnull.
bool algebra_strongly_monotone(const Signature& sig, const Algebra& alg,
                               std::vector<std::string>* why = nullptr);

struct Verdict {
  bool terminating = false;  // YES when true, MAYBE otherwise
  std::vector<std::size_t> unoriented_rules;
};

// The whole-system criterion: a strongly monotone algebra orienting every
// rule proves termination of rules + beta.
Verdict sn_verdict(const Afs& afs, const Algebra& alg);

}  // namespace hoterm

#endif  // HOTERM_INTERPRET_HPP
