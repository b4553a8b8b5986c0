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

#ifndef HOTERM_TERM_HPP
#define HOTERM_TERM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hoterm/error.hpp"
#include "hoterm/types.hpp"

namespace hoterm {

// Typing environment for De Bruijn indices: env[0] is the most recently
// bound variable. Extending under a lambda prepends.
using VarEnv = std::vector<SimpleType>;

inline VarEnv extend(const SimpleType& t, const VarEnv& env) {
  VarEnv out;
  out.reserve(env.size() + 1);
  out.push_back(t);
  out.insert(out.end(), env.begin(), env.end());
  return out;
}

// Function symbols with their declared types, in declaration order.
class Signature {
 public:
  void add_base_type(const std::string& name);
  bool has_base_type(const std::string& name) const;
  const std::vector<std::string>& base_types() const { return base_order_; }

  // Returns false (and changes nothing) when the name is already taken.
  bool add_symbol(const std::string& name, SimpleType type);
  bool has_symbol(const std::string& name) const;
  const SimpleType& symbol_type(const std::string& name) const;
  const std::vector<std::string>& symbols() const { return sym_order_; }

 private:
  std::vector<std::string> base_order_;
  std::set<std::string> bases_;
  std::vector<std::string> sym_order_;
  std::map<std::string, SimpleType> syms_;
};

enum class TermKind { Sym, Var, Lam, App };

// Terms in nameless form: symbols, De Bruijn variables, typed lambda
// abstractions, binary applications. Immutable with shared subtrees.
class Term {
 public:
  static Term sym(std::string name);
  static Term var(std::size_t index);
  static Term lam(SimpleType dom, Term body);
  static Term app(Term fn, Term arg);

  TermKind kind() const;
  const std::string& sym_name() const;
  std::size_t var_index() const;
  const SimpleType& lam_dom() const;
  const Term& lam_body() const;
  const Term& app_fn() const;
  const Term& app_arg() const;

 private:
  struct Node;
  Term() = default;
  std::shared_ptr<const Node> node_;
};

// Defined after the class so Node can hold Terms by value.
struct Term::Node {
  TermKind kind = TermKind::Sym;
  std::string name;                        // Sym
  std::size_t index = 0;                   // Var
  SimpleType dom = SimpleType::base("");   // Lam
  Term body_or_fn;                         // Lam body / App fn
  Term arg;                                // App
};

inline TermKind Term::kind() const { return node_->kind; }

// Structural equality; on nameless terms this is exactly alpha-equivalence.
bool term_eq(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return term_eq(a, b); }
inline bool operator!=(const Term& a, const Term& b) { return !term_eq(a, b); }

// Number of constructors in the term tree.
std::size_t term_size(const Term& t);

// Free De Bruijn indices of t, relative to its own top level.
std::set<std::size_t> free_vars(const Term& t);

// Paths into the term tree. An empty path is the root.
enum class PathStep : unsigned char { Fn, Arg, Body };
using TermPath = std::vector<PathStep>;

std::string path_to_string(const TermPath& p);

// Subterm at a path; nullopt when the path does not exist in t.
std::optional<Term> subterm_at(const Term& t, const TermPath& p);

// Replace the subterm at a valid path. Throws Error for invalid paths.
Term replace_at(const Term& t, const TermPath& p, const Term& replacement);

// Environment in force at a valid path: outer extended by each lambda
// the path descends through.
VarEnv env_at(const Term& t, const TermPath& p, const VarEnv& outer);

enum class TypeErrorKind { UnboundVariable, UnknownSymbol, IllTypedApplication };

struct TypeError : Error {
  TypeErrorKind kind;
  TermPath path;
  TypeError(TypeErrorKind k, TermPath p, const std::string& msg)
      : Error(msg + " (at " + path_to_string(p) + ")"),
        kind(k),
        path(std::move(p)) {}
};

// Type of t under sig and env. Throws TypeError with the offending path.
SimpleType infer(const Signature& sig, const VarEnv& env, const Term& t);

// A term bundled with the environment and type it was checked against.
struct TypedTerm {
  VarEnv env;
  Term term;
  SimpleType type;

  static TypedTerm make(const Signature& sig, VarEnv env, Term term);
};

}  // namespace hoterm

#endif  // HOTERM_TERM_HPP
