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

#include "hoterm/subst.hpp"

namespace hoterm {

Substitution::Substitution(VarEnv source, VarEnv target,
                           std::vector<Term> terms)
    : source_(std::move(source)),
      target_(std::move(target)),
      terms_(std::move(terms)) {
  if (source_.size() != terms_.size()) {
    throw EnvMismatchError("substitution: " + std::to_string(terms_.size()) +
                           " terms for " + std::to_string(source_.size()) +
                           " source variables");
  }
}

const Term& Substitution::at(std::size_t i) const {
  if (i >= terms_.size()) {
    throw EnvMismatchError("substitution: index " + std::to_string(i) +
                           " out of range");
  }
  return terms_[i];
}

Substitution id_sub(const VarEnv& env) {
  std::vector<Term> terms;
  terms.reserve(env.size());
  for (std::size_t i = 0; i < env.size(); ++i) terms.push_back(Term::var(i));
  return Substitution(env, env, std::move(terms));
}

Term lift_term(const Term& t, std::size_t k, std::size_t cutoff) {
  if (k == 0) return t;
  switch (t.kind()) {
    case TermKind::Sym:
      return t;
    case TermKind::Var:
      return t.var_index() >= cutoff ? Term::var(t.var_index() + k) : t;
    case TermKind::Lam:
      return Term::lam(t.lam_dom(), lift_term(t.lam_body(), k, cutoff + 1));
    case TermKind::App:
      return Term::app(lift_term(t.app_fn(), k, cutoff),
                       lift_term(t.app_arg(), k, cutoff));
  }
  throw Error("lift_term: bad kind");
}

namespace {

std::optional<Term> strengthen_go(const Term& t, std::size_t k,
                                  std::size_t depth) {
  switch (t.kind()) {
    case TermKind::Sym:
      return t;
    case TermKind::Var: {
      std::size_t i = t.var_index();
      if (i < depth) return t;
      if (i < depth + k) return std::nullopt;
      return Term::var(i - k);
    }
    case TermKind::Lam: {
      auto b = strengthen_go(t.lam_body(), k, depth + 1);
      if (!b) return std::nullopt;
      return Term::lam(t.lam_dom(), std::move(*b));
    }
    case TermKind::App: {
      auto f = strengthen_go(t.app_fn(), k, depth);
      if (!f) return std::nullopt;
      auto a = strengthen_go(t.app_arg(), k, depth);
      if (!a) return std::nullopt;
      return Term::app(std::move(*f), std::move(*a));
    }
  }
  throw Error("strengthen_term: bad kind");
}

// Apply gamma below `depth` lambda binders: indices < depth are bound and
// untouched, index depth+i is sent to gamma(i) lifted by depth.
Term apply_go(const Substitution& gamma, const Term& t, std::size_t depth) {
  switch (t.kind()) {
    case TermKind::Sym:
      return t;
    case TermKind::Var: {
      std::size_t i = t.var_index();
      if (i < depth) return t;
      return lift_term(gamma.at(i - depth), depth, 0);
    }
    case TermKind::Lam:
      return Term::lam(t.lam_dom(), apply_go(gamma, t.lam_body(), depth + 1));
    case TermKind::App:
      return Term::app(apply_go(gamma, t.app_fn(), depth),
                       apply_go(gamma, t.app_arg(), depth));
  }
  throw Error("apply_sub: bad kind");
}

}  // namespace

std::optional<Term> strengthen_term(const Term& t, std::size_t k) {
  if (k == 0) return t;
  return strengthen_go(t, k, 0);
}

Term apply_sub(const Substitution& gamma, const Term& t) {
  return apply_go(gamma, t, 0);
}

TypedTerm apply_sub(const Signature& sig, const Substitution& gamma,
                    const TypedTerm& t) {
  if (t.env != gamma.source()) {
    throw EnvMismatchError("apply_sub: term environment differs from "
                           "substitution source");
  }
  Term out = apply_sub(gamma, t.term);
  TypedTerm result = TypedTerm::make(sig, gamma.target(), std::move(out));
  if (result.type != t.type) {
    throw EnvMismatchError("apply_sub: substitution changed the type from " +
                           t.type.to_string() + " to " +
                           result.type.to_string());
  }
  return result;
}

Substitution compose(const Substitution& delta, const Substitution& gamma) {
  if (gamma.target() != delta.source()) {
    throw EnvMismatchError("compose: inner target differs from outer source");
  }
  std::vector<Term> terms;
  terms.reserve(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    terms.push_back(apply_sub(delta, gamma.at(i)));
  }
  return Substitution(gamma.source(), delta.target(), std::move(terms));
}

namespace {

Term beta_go(const Term& t, const Term& arg, std::size_t depth) {
  switch (t.kind()) {
    case TermKind::Sym:
      return t;
    case TermKind::Var: {
      std::size_t i = t.var_index();
      if (i == depth) return lift_term(arg, depth, 0);
      if (i > depth) return Term::var(i - 1);
      return t;
    }
    case TermKind::Lam:
      return Term::lam(t.lam_dom(), beta_go(t.lam_body(), arg, depth + 1));
    case TermKind::App:
      return Term::app(beta_go(t.app_fn(), arg, depth),
                       beta_go(t.app_arg(), arg, depth));
  }
  throw Error("beta_subst: bad kind");
}

}  // namespace

Term beta_subst(const Term& body, const Term& arg) {
  return beta_go(body, arg, 0);
}

}  // namespace hoterm
