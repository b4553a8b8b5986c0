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

#include "hoterm/term.hpp"

#include <sstream>

namespace hoterm {

void Signature::add_base_type(const std::string& name) {
  if (bases_.insert(name).second) base_order_.push_back(name);
}

bool Signature::has_base_type(const std::string& name) const {
  return bases_.count(name) > 0;
}

bool Signature::add_symbol(const std::string& name, SimpleType type) {
  if (syms_.count(name)) return false;
  syms_.emplace(name, std::move(type));
  sym_order_.push_back(name);
  return true;
}

bool Signature::has_symbol(const std::string& name) const {
  return syms_.count(name) > 0;
}

const SimpleType& Signature::symbol_type(const std::string& name) const {
  auto it = syms_.find(name);
  if (it == syms_.end()) throw Error("unknown symbol: " + name);
  return it->second;
}

Term Term::sym(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Sym;
  n->name = std::move(name);
  Term t;
  t.node_ = std::move(n);
  return t;
}

Term Term::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->index = index;
  Term t;
  t.node_ = std::move(n);
  return t;
}

Term Term::lam(SimpleType dom, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Lam;
  n->dom = std::move(dom);
  n->body_or_fn = std::move(body);
  Term t;
  t.node_ = std::move(n);
  return t;
}

Term Term::app(Term fn, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->body_or_fn = std::move(fn);
  n->arg = std::move(arg);
  Term t;
  t.node_ = std::move(n);
  return t;
}

const std::string& Term::sym_name() const {
  if (kind() != TermKind::Sym) throw Error("sym_name on non-symbol");
  return node_->name;
}

std::size_t Term::var_index() const {
  if (kind() != TermKind::Var) throw Error("var_index on non-variable");
  return node_->index;
}

const SimpleType& Term::lam_dom() const {
  if (kind() != TermKind::Lam) throw Error("lam_dom on non-lambda");
  return node_->dom;
}

const Term& Term::lam_body() const {
  if (kind() != TermKind::Lam) throw Error("lam_body on non-lambda");
  return node_->body_or_fn;
}

const Term& Term::app_fn() const {
  if (kind() != TermKind::App) throw Error("app_fn on non-application");
  return node_->body_or_fn;
}

const Term& Term::app_arg() const {
  if (kind() != TermKind::App) throw Error("app_arg on non-application");
  return node_->arg;
}

bool term_eq(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Sym:
      return a.sym_name() == b.sym_name();
    case TermKind::Var:
      return a.var_index() == b.var_index();
    case TermKind::Lam:
      return a.lam_dom() == b.lam_dom() && term_eq(a.lam_body(), b.lam_body());
    case TermKind::App:
      return term_eq(a.app_fn(), b.app_fn()) &&
             term_eq(a.app_arg(), b.app_arg());
  }
  return false;
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case TermKind::Sym:
    case TermKind::Var:
      return 1;
    case TermKind::Lam:
      return 1 + term_size(t.lam_body());
    case TermKind::App:
      return 1 + term_size(t.app_fn()) + term_size(t.app_arg());
  }
  return 0;
}

namespace {

void free_vars_go(const Term& t, std::size_t depth, std::set<std::size_t>& out) {
  switch (t.kind()) {
    case TermKind::Sym:
      return;
    case TermKind::Var:
      if (t.var_index() >= depth) out.insert(t.var_index() - depth);
      return;
    case TermKind::Lam:
      free_vars_go(t.lam_body(), depth + 1, out);
      return;
    case TermKind::App:
      free_vars_go(t.app_fn(), depth, out);
      free_vars_go(t.app_arg(), depth, out);
      return;
  }
}

}  // namespace

std::set<std::size_t> free_vars(const Term& t) {
  std::set<std::size_t> out;
  free_vars_go(t, 0, out);
  return out;
}

std::string path_to_string(const TermPath& p) {
  if (p.empty()) return "root";
  std::ostringstream os;
  bool first = true;
  for (PathStep s : p) {
    if (!first) os << '.';
    first = false;
    switch (s) {
      case PathStep::Fn: os << "fn"; break;
      case PathStep::Arg: os << "arg"; break;
      case PathStep::Body: os << "body"; break;
    }
  }
  return os.str();
}

std::optional<Term> subterm_at(const Term& t, const TermPath& p) {
  Term cur = t;
  for (PathStep s : p) {
    switch (s) {
      case PathStep::Fn:
        if (cur.kind() != TermKind::App) return std::nullopt;
        cur = cur.app_fn();
        break;
      case PathStep::Arg:
        if (cur.kind() != TermKind::App) return std::nullopt;
        cur = cur.app_arg();
        break;
      case PathStep::Body:
        if (cur.kind() != TermKind::Lam) return std::nullopt;
        cur = cur.lam_body();
        break;
    }
  }
  return cur;
}

namespace {

Term replace_go(const Term& t, const TermPath& p, std::size_t i,
                const Term& replacement) {
  if (i == p.size()) return replacement;
  switch (p[i]) {
    case PathStep::Fn:
      if (t.kind() != TermKind::App) throw Error("replace_at: bad path");
      return Term::app(replace_go(t.app_fn(), p, i + 1, replacement),
                       t.app_arg());
    case PathStep::Arg:
      if (t.kind() != TermKind::App) throw Error("replace_at: bad path");
      return Term::app(t.app_fn(),
                       replace_go(t.app_arg(), p, i + 1, replacement));
    case PathStep::Body:
      if (t.kind() != TermKind::Lam) throw Error("replace_at: bad path");
      return Term::lam(t.lam_dom(),
                       replace_go(t.lam_body(), p, i + 1, replacement));
  }
  throw Error("replace_at: bad step");
}

}  // namespace

Term replace_at(const Term& t, const TermPath& p, const Term& replacement) {
  return replace_go(t, p, 0, replacement);
}

VarEnv env_at(const Term& t, const TermPath& p, const VarEnv& outer) {
  Term cur = t;
  VarEnv env = outer;
  for (PathStep s : p) {
    switch (s) {
      case PathStep::Fn:
        if (cur.kind() != TermKind::App) throw Error("env_at: bad path");
        cur = cur.app_fn();
        break;
      case PathStep::Arg:
        if (cur.kind() != TermKind::App) throw Error("env_at: bad path");
        cur = cur.app_arg();
        break;
      case PathStep::Body:
        if (cur.kind() != TermKind::Lam) throw Error("env_at: bad path");
        env = extend(cur.lam_dom(), env);
        cur = cur.lam_body();
        break;
    }
  }
  return env;
}

namespace {

SimpleType infer_go(const Signature& sig, const VarEnv& env, const Term& t,
                    TermPath& path) {
  switch (t.kind()) {
    case TermKind::Sym: {
      if (!sig.has_symbol(t.sym_name())) {
        throw TypeError(TypeErrorKind::UnknownSymbol, path,
                        "unknown symbol " + t.sym_name());
      }
      return sig.symbol_type(t.sym_name());
    }
    case TermKind::Var: {
      if (t.var_index() >= env.size()) {
        throw TypeError(TypeErrorKind::UnboundVariable, path,
                        "unbound variable " + std::to_string(t.var_index()) +
                            " in environment of size " +
                            std::to_string(env.size()));
      }
      return env[t.var_index()];
    }
    case TermKind::Lam: {
      path.push_back(PathStep::Body);
      VarEnv inner = extend(t.lam_dom(), env);
      SimpleType body = infer_go(sig, inner, t.lam_body(), path);
      path.pop_back();
      return SimpleType::fun(t.lam_dom(), body);
    }
    case TermKind::App: {
      path.push_back(PathStep::Fn);
      SimpleType fn = infer_go(sig, env, t.app_fn(), path);
      path.pop_back();
      path.push_back(PathStep::Arg);
      SimpleType arg = infer_go(sig, env, t.app_arg(), path);
      path.pop_back();
      if (!fn.is_fun()) {
        throw TypeError(TypeErrorKind::IllTypedApplication, path,
                        "applied term of base type " + fn.to_string());
      }
      if (fn.dom() != arg) {
        throw TypeError(TypeErrorKind::IllTypedApplication, path,
                        "argument type " + arg.to_string() +
                            " does not match domain " + fn.dom().to_string());
      }
      return fn.cod();
    }
  }
  throw Error("infer: bad kind");
}

}  // namespace

SimpleType infer(const Signature& sig, const VarEnv& env, const Term& t) {
  TermPath path;
  return infer_go(sig, env, t, path);
}

TypedTerm TypedTerm::make(const Signature& sig, VarEnv env, Term term) {
  SimpleType ty = infer(sig, env, term);
  return TypedTerm{std::move(env), std::move(term), std::move(ty)};
}

}  // namespace hoterm
