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

#ifndef HOTERM_TESTS_TESTUTIL_HPP
#define HOTERM_TESTS_TESTUTIL_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hoterm/rewrite.hpp"

namespace hoterm::testutil {

inline SimpleType bt(const std::string& name) { return SimpleType::base(name); }

inline SimpleType arrow(SimpleType a, SimpleType b) {
  return SimpleType::fun(std::move(a), std::move(b));
}

// nil/cons/s/map over nat and list; the running example everywhere.
Signature map_signature();
Afs map_afs();

// Random well-typed term generation, used by the property tests. All
// shapes (symbols, variables, lambdas, applications) are reachable.
struct TermGen {
  std::mt19937 rng;
  const Signature& sig;

  explicit TermGen(const Signature& s, unsigned seed) : rng(seed), sig(s) {}

  // A term of the requested type under env, roughly bounded by `size`
  // constructors; nullopt when nothing fits (rare, retried by callers).
  std::optional<Term> term_of(const SimpleType& type, const VarEnv& env,
                              int size, int depth = 0);

  // Any inhabited type reachable from the signature's base sorts.
  SimpleType random_type(int max_order);

  std::optional<Term> closed_term(int size);
};

// Independent named-term substitution oracle: converts to a named
// representation, substitutes with explicit fresh renaming, converts
// back. Used to cross-check apply_sub.
Term named_subst_oracle(const Substitution& gamma, const Term& t);

}  // namespace hoterm::testutil

#endif  // HOTERM_TESTS_TESTUTIL_HPP
