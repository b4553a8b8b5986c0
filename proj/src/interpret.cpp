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

#include "hoterm/interpret.hpp"

namespace hoterm {

const HOPoly& Algebra::of(const std::string& symbol) const {
  auto it = interp.find(symbol);
  if (it == interp.end()) {
    throw Error("algebra has no interpretation for " + symbol);
  }
  return it->second;
}

PolyContext symbol_context(const SimpleType& type) {
  TypeDecomp d = arity_decompose(type);
  PolyContext ctx;
  ctx.reserve(d.args.size());
  for (const auto& a : d.args) ctx.push_back(poly_var_for(a));
  return ctx;
}

PolyContext open_context(const VarEnv& env, const SimpleType& type) {
  PolyContext ctx;
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    ctx.push_back(poly_var_for(*it));
  }
  TypeDecomp d = arity_decompose(type);
  for (const auto& a : d.args) ctx.push_back(poly_var_for(a));
  return ctx;
}

namespace {

// Identity abstraction for position pos of target.
PolyAbstraction identity_entry(const PolyContext& target, std::size_t pos) {
  if (!target[pos].is_fun()) {
    return PolyAbstraction{0, var_poly(target, pos)};
  }
  std::size_t a = target[pos].arity;
  PolyContext inner = target;
  for (std::size_t j = 0; j < a; ++j) inner.push_back(PolyVar{0});
  std::vector<HOPoly> args;
  args.reserve(a);
  for (std::size_t j = 0; j < a; ++j) {
    args.push_back(var_poly(inner, target.size() + j));
  }
  return PolyAbstraction{a, fun_var_poly(inner, pos, std::move(args))};
}

// nu of an argument interpretation: plug bottoms (zero) into its own
// argument variables, leaving a polynomial over the environment context.
HOPoly nu_open(const OpenInterp& x, std::size_t env_vars) {
  PolyContext env_ctx(x.body.context.begin(),
                      x.body.context.begin() + env_vars);
  PolySubst sigma;
  sigma.source = x.body.context;
  sigma.target = env_ctx;
  for (std::size_t i = 0; i < env_vars; ++i) {
    sigma.entries.push_back(identity_entry(env_ctx, i));
  }
  for (std::size_t i = env_vars; i < x.body.context.size(); ++i) {
    sigma.entries.push_back(PolyAbstraction{0, zero_poly(env_ctx)});
  }
  return subst_poly(x.body, sigma);
}

}  // namespace

OpenInterp app_interp(const OpenInterp& fn, const OpenInterp& arg) {
  if (fn.env != arg.env) throw EnvMismatchError("app_interp: env mismatch");
  if (!fn.type.is_fun() || fn.type.dom() != arg.type) {
    throw PolyError("app_interp: function type " + fn.type.to_string() +
                    " does not take " + arg.type.to_string());
  }
  std::size_t n = fn.env.size();
  SimpleType result_type = fn.type.cod();
  PolyContext result_ctx = open_context(fn.env, result_type);

  PolySubst sigma;
  sigma.source = fn.body.context;
  sigma.target = result_ctx;
  for (std::size_t i = 0; i < n; ++i) {
    sigma.entries.push_back(identity_entry(result_ctx, i));
  }
  PolyVar domain_var = poly_var_for(fn.type.dom());
  if (domain_var.arity == 0) {
    sigma.entries.push_back(PolyAbstraction{0, weaken(arg.body, result_ctx)});
  } else {
    PolyContext abs_ctx = result_ctx;
    for (std::size_t j = 0; j < domain_var.arity; ++j) {
      abs_ctx.push_back(PolyVar{0});
    }
    std::vector<std::size_t> var_map(arg.body.context.size());
    for (std::size_t i = 0; i < n; ++i) var_map[i] = i;
    for (std::size_t j = 0; j < domain_var.arity; ++j) {
      var_map[n + j] = result_ctx.size() + j;
    }
    sigma.entries.push_back(PolyAbstraction{
        domain_var.arity, reindex(arg.body, var_map, abs_ctx)});
  }
  for (std::size_t i = n + 1; i < fn.body.context.size(); ++i) {
    sigma.entries.push_back(identity_entry(result_ctx, i - 1));
  }

  HOPoly applied = subst_poly(fn.body, sigma);
  HOPoly penalty = weaken(nu_open(arg, n), result_ctx);
  return OpenInterp{fn.env, std::move(result_type),
                    add_const(add(applied, penalty), 1)};
}

OpenInterp interp_term(const Algebra& alg, const Signature& sig,
                       const VarEnv& env, const Term& t) {
  std::size_t n = env.size();
  switch (t.kind()) {
    case TermKind::Sym: {
      const SimpleType& ty = sig.symbol_type(t.sym_name());
      const HOPoly& j = alg.of(t.sym_name());
      PolyContext want = symbol_context(ty);
      if (j.context != want) {
        throw PolyError("interpretation of " + t.sym_name() +
                        " has the wrong context");
      }
      PolyContext ctx = open_context(env, ty);
      std::vector<std::size_t> var_map(want.size());
      for (std::size_t i = 0; i < want.size(); ++i) var_map[i] = n + i;
      return OpenInterp{env, ty, reindex(j, var_map, ctx)};
    }
    case TermKind::Var: {
      std::size_t i = t.var_index();
      if (i >= n) throw Error("interp_term: unbound variable");
      const SimpleType& ty = env[i];
      PolyContext ctx = open_context(env, ty);
      std::size_t pos = n - 1 - i;
      if (ty.is_base()) {
        return OpenInterp{env, ty, var_poly(ctx, pos)};
      }
      PolyVar pv = poly_var_for(ty);
      std::vector<HOPoly> args;
      args.reserve(pv.arity);
      for (std::size_t j = 0; j < pv.arity; ++j) {
        args.push_back(var_poly(ctx, n + j));
      }
      return OpenInterp{env, ty, fun_var_poly(ctx, pos, std::move(args))};
    }
    case TermKind::Lam: {
      VarEnv inner = extend(t.lam_dom(), env);
      OpenInterp body = interp_term(alg, sig, inner, t.lam_body());
      SimpleType ty = SimpleType::fun(t.lam_dom(), body.type);
      // rev(A ,, env) ++ args(C)  ==  rev(env) ++ [A] ++ args(C): the body
      // polynomial already lives over the abstraction's context.
      return OpenInterp{env, std::move(ty), std::move(body.body)};
    }
    case TermKind::App: {
      OpenInterp fn = interp_term(alg, sig, env, t.app_fn());
      OpenInterp arg = interp_term(alg, sig, env, t.app_arg());
      return app_interp(fn, arg);
    }
  }
  throw Error("interp_term: bad kind");
}

Nat interp_value(const Algebra& alg, const Signature& sig, const Term& t) {
  OpenInterp oi = interp_term(alg, sig, {}, t);
  if (!oi.type.is_base()) {
    throw PolyError("interp_value needs a base-typed term");
  }
  return eval(oi.body, {});
}

Orientation check_rule_oriented(const Algebra& alg, const Signature& sig,
                                const RewriteRule& rule) {
  OpenInterp lhs = interp_term(alg, sig, rule.env, rule.lhs);
  OpenInterp rhs = interp_term(alg, sig, rule.env, rule.rhs);
  return poly_gt(lhs.body, rhs.body) ? Orientation::Oriented
                                     : Orientation::Inconclusive;
}

bool algebra_strongly_monotone(const Signature& sig, const Algebra& alg,
                               std::vector<std::string>* why) {
  bool ok = true;
  for (const auto& f : sig.symbols()) {
    auto it = alg.interp.find(f);
    if (it == alg.interp.end()) {
      ok = false;
      if (why) why->push_back("no interpretation for " + f);
      continue;
    }
    PolyContext want = symbol_context(sig.symbol_type(f));
    if (it->second.context != want) {
      ok = false;
      if (why) why->push_back("interpretation of " + f + " has wrong context");
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!strongly_monotone(it->second, {i})) {
        ok = false;
        if (why) {
          why->push_back("interpretation of " + f +
                         " is not strictly monotone in argument " +
                         std::to_string(i));
        }
      }
    }
  }
  return ok;
}

Verdict sn_verdict(const Afs& afs, const Algebra& alg) {
  std::vector<std::string> why;
  if (!algebra_strongly_monotone(afs.sig, alg, &why)) {
    throw Error("sn_verdict: algebra is not strongly monotone: " +
                (why.empty() ? std::string("?") : why.front()));
  }
  Verdict v;
  v.terminating = true;
  for (std::size_t r = 0; r < afs.rules.size(); ++r) {
    if (check_rule_oriented(alg, afs.sig, afs.rules[r]) !=
        Orientation::Oriented) {
      v.terminating = false;
      v.unoriented_rules.push_back(r);
    }
  }
  return v;
}

}  // namespace hoterm
