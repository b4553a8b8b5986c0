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

#include "hoterm/rewrite.hpp"

#include <cstdint>

namespace hoterm {

namespace {

// depth = number of lhs binders crossed so far. Rule variable j matches a
// subject subterm only if that subterm can be strengthened past those
// binders; bindings live in the subject's top environment.
bool match_go(const Term& pat, const Term& sub, std::size_t depth,
              std::vector<std::optional<Term>>& binding) {
  switch (pat.kind()) {
    case TermKind::Sym:
      return sub.kind() == TermKind::Sym && sub.sym_name() == pat.sym_name();
    case TermKind::Var: {
      std::size_t i = pat.var_index();
      if (i < depth) {
        return sub.kind() == TermKind::Var && sub.var_index() == i;
      }
      std::size_t j = i - depth;
      if (j >= binding.size()) return false;
      auto image = strengthen_term(sub, depth);
      if (!image) return false;
      if (binding[j]) return term_eq(*binding[j], *image);
      binding[j] = std::move(*image);
      return true;
    }
    case TermKind::Lam:
      return sub.kind() == TermKind::Lam && sub.lam_dom() == pat.lam_dom() &&
             match_go(pat.lam_body(), sub.lam_body(), depth + 1, binding);
    case TermKind::App:
      return sub.kind() == TermKind::App &&
             match_go(pat.app_fn(), sub.app_fn(), depth, binding) &&
             match_go(pat.app_arg(), sub.app_arg(), depth, binding);
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_lhs(const RewriteRule& rule,
                                      const Term& subject,
                                      const VarEnv& subject_env) {
  std::vector<std::optional<Term>> binding(rule.env.size());
  if (!match_go(rule.lhs, subject, 0, binding)) return std::nullopt;
  std::vector<Term> terms;
  terms.reserve(binding.size());
  for (auto& b : binding) {
    if (!b) return std::nullopt;  // rule variable absent from the lhs
    terms.push_back(std::move(*b));
  }
  return Substitution(rule.env, subject_env, std::move(terms));
}

namespace {

struct Found {
  Position position;
  std::variant<RuleStep, BetaStep> kind;
  Term local_result;  // rewritten subterm, at the redex position
};

void collect_go(const Afs& afs, const Term& t, const VarEnv& env,
                Position& here, std::vector<Found>& out) {
  for (std::size_t r = 0; r < afs.rules.size(); ++r) {
    if (auto gamma = match_lhs(afs.rules[r], t, env)) {
      Term result = apply_sub(*gamma, afs.rules[r].rhs);
      out.push_back(Found{here, RuleStep{r, std::move(*gamma)},
                          std::move(result)});
    }
  }
  if (t.kind() == TermKind::App && t.app_fn().kind() == TermKind::Lam) {
    out.push_back(Found{here, BetaStep{},
                        beta_subst(t.app_fn().lam_body(), t.app_arg())});
  }
  switch (t.kind()) {
    case TermKind::App:
      here.push_back(PathStep::Fn);
      collect_go(afs, t.app_fn(), env, here, out);
      here.back() = PathStep::Arg;
      collect_go(afs, t.app_arg(), env, here, out);
      here.pop_back();
      break;
    case TermKind::Lam: {
      here.push_back(PathStep::Body);
      VarEnv inner = extend(t.lam_dom(), env);
      collect_go(afs, t.lam_body(), inner, here, out);
      here.pop_back();
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::vector<RewriteStep> redexes(const Afs& afs, const Term& t,
                                 const VarEnv& env) {
  Position here;
  std::vector<Found> found;
  collect_go(afs, t, env, here, found);
  std::vector<RewriteStep> steps;
  steps.reserve(found.size());
  for (auto& f : found) {
    Term result = replace_at(t, f.position, f.local_result);
    steps.push_back(RewriteStep{std::move(f.position), std::move(f.kind),
                                std::move(result)});
  }
  return steps;
}

NormalizeResult normalize(const Afs& afs, const Term& t, std::size_t fuel,
                          const VarEnv& env) {
  NormalizeResult res{t, {}, false};
  for (std::size_t step = 0; step < fuel; ++step) {
    auto steps = redexes(afs, res.term, env);
    if (steps.empty()) return res;
    res.term = steps.front().result;
    res.trace.push_back(std::move(steps.front()));
  }
  if (!redexes(afs, res.term, env).empty()) res.fuel_exhausted = true;
  return res;
}

namespace {

// Spine head of a term: strip applications.
const Term& spine_head(const Term& t) {
  const Term* cur = &t;
  while (cur->kind() == TermKind::App) cur = &cur->app_fn();
  return *cur;
}

bool type_bases_known(const Signature& sig, const SimpleType& t) {
  if (t.is_base()) return sig.has_base_type(t.base_name());
  return type_bases_known(sig, t.dom()) && type_bases_known(sig, t.cod());
}

}  // namespace

std::vector<Violation> check_afs(const Afs& afs) {
  std::vector<Violation> out;
  for (const auto& f : afs.sig.symbols()) {
    if (!type_bases_known(afs.sig, afs.sig.symbol_type(f))) {
      out.push_back(Violation{ViolationKind::UnknownBaseType, SIZE_MAX,
                              "symbol " + f + " uses an undeclared sort in " +
                                  afs.sig.symbol_type(f).to_string()});
    }
  }
  for (std::size_t r = 0; r < afs.rules.size(); ++r) {
    const RewriteRule& rule = afs.rules[r];
    SimpleType lhs_ty = SimpleType::base("");
    SimpleType rhs_ty = SimpleType::base("");
    bool typed = true;
    try {
      lhs_ty = infer(afs.sig, rule.env, rule.lhs);
      rhs_ty = infer(afs.sig, rule.env, rule.rhs);
    } catch (const TypeError& e) {
      typed = false;
      out.push_back(Violation{ViolationKind::IllTypedRule, r,
                              std::string("rule does not typecheck: ") +
                                  e.what()});
    }
    if (typed && (lhs_ty != rhs_ty || lhs_ty != rule.type)) {
      out.push_back(
          Violation{ViolationKind::RuleTypeMismatch, r,
                    "lhs : " + lhs_ty.to_string() + " vs rhs : " +
                        rhs_ty.to_string() + " (declared " +
                        rule.type.to_string() + ")"});
    }
    const Term& head = spine_head(rule.lhs);
    if (head.kind() == TermKind::Lam) {
      out.push_back(Violation{ViolationKind::LambdaHeadedLhs, r,
                              "lhs head is a lambda"});
    } else if (head.kind() == TermKind::Var) {
      out.push_back(Violation{ViolationKind::VariableHeadedLhs, r,
                              "lhs head is a variable"});
    }
    auto lhs_free = free_vars(rule.lhs);
    for (std::size_t j = 0; j < rule.env.size(); ++j) {
      if (!lhs_free.count(j)) {
        std::string name = j < rule.var_names.size()
                               ? rule.var_names[j]
                               : "#" + std::to_string(j);
        out.push_back(Violation{ViolationKind::VariableNotInLhs, r,
                                "rule variable " + name +
                                    " does not occur in the lhs"});
      }
    }
  }
  return out;
}

}  // namespace hoterm
