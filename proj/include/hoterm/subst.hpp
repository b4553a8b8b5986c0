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

#ifndef HOTERM_SUBST_HPP
#define HOTERM_SUBST_HPP

#include <optional>
#include <vector>

#include "hoterm/term.hpp"

namespace hoterm {

// A simultaneous substitution gamma : source -> target. Index i of the
// source environment is sent to terms[i], a term over the target
// environment. Applying gamma to a term over source yields a term over
// target.
class Substitution {
 public:
  Substitution(VarEnv source, VarEnv target, std::vector<Term> terms);

  const VarEnv& source() const { return source_; }
  const VarEnv& target() const { return target_; }
  const Term& at(std::size_t i) const;
  std::size_t size() const { return terms_.size(); }

 private:
  VarEnv source_;
  VarEnv target_;
  std::vector<Term> terms_;
};

// Identity substitution on env.
Substitution id_sub(const VarEnv& env);

// Shift free indices >= cutoff up by k.
Term lift_term(const Term& t, std::size_t k, std::size_t cutoff);

// Inverse of lift_term(., k, 0): shift free indices down by k; nullopt
// when any free index below k occurs (the term mentions a variable that
// would be dropped).
std::optional<Term> strengthen_term(const Term& t, std::size_t k);

// Capture-avoiding application. t must be well-formed over gamma.source().
Term apply_sub(const Substitution& gamma, const Term& t);

// Typed variant: checks t.env == gamma.source() and rechecks the result.
// Throws EnvMismatchError on shape disagreement.
TypedTerm apply_sub(const Signature& sig, const Substitution& gamma,
                    const TypedTerm& t);

// delta after gamma: (compose(delta, gamma))(t) == delta(gamma(t)).
// Requires gamma.target() == delta.source().
Substitution compose(const Substitution& delta, const Substitution& gamma);

// One-step beta: body over (A ,, env), arg over env; result over env.
Term beta_subst(const Term& body, const Term& arg);

}  // namespace hoterm

#endif  // HOTERM_SUBST_HPP
