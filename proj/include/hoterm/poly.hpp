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

#ifndef HOTERM_POLY_HPP
#define HOTERM_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "hoterm/error.hpp"
#include "hoterm/types.hpp"

namespace hoterm {

// Coefficients are arbitrary-precision and nonnegative by construction.
using Nat = boost::multiprecision::cpp_int;

// A polynomial context variable. arity 0 is a numeric variable; arity
// k >= 1 is a weakly monotone function variable over k numeric arguments.
struct PolyVar {
  std::size_t arity = 0;
  bool is_fun() const { return arity > 0; }
  friend bool operator==(const PolyVar& a, const PolyVar& b) {
    return a.arity == b.arity;
  }
  friend bool operator!=(const PolyVar& a, const PolyVar& b) {
    return !(a == b);
  }
};

using PolyContext = std::vector<PolyVar>;

// Context variable shape for a type of order <= 1: base types become
// numeric variables, arrows over base become function variables of the
// matching arity. Throws UnsupportedOrderError above order 1.
PolyVar poly_var_for(const SimpleType& t);

struct HOPoly;

// One multiplicand: a numeric variable, or a function variable applied to
// polynomial arguments (args.size() == arity of var).
struct Factor {
  std::size_t var = 0;
  std::vector<HOPoly> args;
};

struct Monomial {
  Nat coeff;
  std::vector<Factor> factors;  // sorted in the canonical factor order
};

// Higher-order polynomial in canonical form: monomials sorted by the
// canonical key, like keys merged, zero coefficients dropped. The zero
// polynomial has no monomials.
struct HOPoly {
  PolyContext context;
  std::vector<Monomial> monomials;
};

// Canonical total orders used for normal forms. Factors sort numeric
// before function applications, then by variable, then by arguments;
// monomials sort by factor count, then lexicographically on factors.
int factor_cmp(const Factor& a, const Factor& b);
int monomial_key_cmp(const Monomial& a, const Monomial& b);
int poly_cmp(const HOPoly& a, const HOPoly& b);

bool operator==(const HOPoly& a, const HOPoly& b);
inline bool operator!=(const HOPoly& a, const HOPoly& b) { return !(a == b); }

// Canonicalize an arbitrarily ordered monomial list. Idempotent.
HOPoly normalize_poly(PolyContext ctx, std::vector<Monomial> monomials);

HOPoly zero_poly(PolyContext ctx);
HOPoly const_poly(PolyContext ctx, Nat c);
HOPoly var_poly(PolyContext ctx, std::size_t var);
HOPoly fun_var_poly(PolyContext ctx, std::size_t var, std::vector<HOPoly> args);

HOPoly add(const HOPoly& p, const HOPoly& q);
HOPoly mul(const HOPoly& p, const HOPoly& q);
HOPoly add_const(const HOPoly& p, const Nat& c);

// Coefficient of the constant monomial (0 when absent).
Nat constant_coeff(const HOPoly& p);

// Rename variables: var i becomes var_map[i] in the target context, which
// must assign it the same arity.
HOPoly reindex(const HOPoly& p, const std::vector<std::size_t>& var_map,
               PolyContext target);

// Weaken into a larger context that keeps existing positions (appended
// variables only).
HOPoly weaken(const HOPoly& p, const PolyContext& target);

// lambda(k numeric parameters). body: the parameters occupy the last k
// positions of the body context.
struct PolyAbstraction {
  std::size_t params = 0;
  HOPoly body;
};

// Substitution of polynomial abstractions for context variables; entry i
// replaces source variable i and must have params == source[i].arity and
// body context == target ++ params numeric variables.
struct PolySubst {
  PolyContext source;
  PolyContext target;
  std::vector<PolyAbstraction> entries;
};

// Capture-free substitution; the homomorphic extension of the entries.
HOPoly subst_poly(const HOPoly& p, const PolySubst& sigma);

// p is strictly monotone in every listed context variable: a numeric
// variable v needs a bare monomial c*v with c >= 1; a function variable F
// needs a standalone monomial d*F(...) with d >= 1.
bool strongly_monotone(const HOPoly& p, const std::vector<std::size_t>& vars);

// Conservative symbolic comparisons, sound for every valuation over the
// naturals: true means p >= q (resp. p > q) pointwise; false only means
// the check is inconclusive. Non-constant monomials of q must be covered
// by capacity of dominating monomials of p (splitting allowed), constants
// compare separately.
bool poly_ge(const HOPoly& p, const HOPoly& q);
bool poly_gt(const HOPoly& p, const HOPoly& q);

// Textual form, e.g. "3 + 2*x0 + x1*F0(x1)". Variables are named by
// context position: x<i> numeric, F<i> function.
std::string poly_to_string(const HOPoly& p);

// Parse against a known context. Throws PolyError on malformed input or
// variables that do not fit the context.
HOPoly parse_poly(const std::string& text, const PolyContext& ctx);

}  // namespace hoterm

#endif  // HOTERM_POLY_HPP
