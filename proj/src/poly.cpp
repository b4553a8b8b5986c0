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

#include "hoterm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hoterm {

PolyVar poly_var_for(const SimpleType& t) {
  if (t.is_base()) return PolyVar{0};
  TypeDecomp d = arity_decompose(t);
  for (const auto& a : d.args) {
    if (!a.is_base()) {
      throw UnsupportedOrderError("type " + t.to_string() +
                                  " has order above 1");
    }
  }
  return PolyVar{d.args.size()};
}

int factor_cmp(const Factor& a, const Factor& b) {
  bool af = !a.args.empty();
  bool bf = !b.args.empty();
  if (af != bf) return af ? 1 : -1;
  if (a.var != b.var) return a.var < b.var ? -1 : 1;
  if (a.args.size() != b.args.size()) {
    return a.args.size() < b.args.size() ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    int c = poly_cmp(a.args[i], b.args[i]);
    if (c != 0) return c;
  }
  return 0;
}

int monomial_key_cmp(const Monomial& a, const Monomial& b) {
  if (a.factors.size() != b.factors.size()) {
    return a.factors.size() < b.factors.size() ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    int c = factor_cmp(a.factors[i], b.factors[i]);
    if (c != 0) return c;
  }
  return 0;
}

int poly_cmp(const HOPoly& a, const HOPoly& b) {
  std::size_t n = std::min(a.monomials.size(), b.monomials.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = monomial_key_cmp(a.monomials[i], b.monomials[i]);
    if (c != 0) return c;
    const Nat& ca = a.monomials[i].coeff;
    const Nat& cb = b.monomials[i].coeff;
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (a.monomials.size() != b.monomials.size()) {
    return a.monomials.size() < b.monomials.size() ? -1 : 1;
  }
  return 0;
}

bool operator==(const HOPoly& a, const HOPoly& b) {
  return a.context == b.context && poly_cmp(a, b) == 0;
}

namespace {

void check_factor(const PolyContext& ctx, const Factor& f) {
  if (f.var >= ctx.size()) {
    throw PolyError("factor variable " + std::to_string(f.var) +
                    " out of context");
  }
  if (ctx[f.var].arity != f.args.size()) {
    throw PolyError("factor variable " + std::to_string(f.var) + " expects " +
                    std::to_string(ctx[f.var].arity) + " arguments, got " +
                    std::to_string(f.args.size()));
  }
  for (const auto& a : f.args) {
    if (a.context != ctx) {
      throw PolyError("factor argument has a different context");
    }
  }
}

Factor normalize_factor(const PolyContext& ctx, Factor f);

Monomial normalize_monomial(const PolyContext& ctx, Monomial m) {
  for (auto& f : m.factors) f = normalize_factor(ctx, f);
  std::sort(m.factors.begin(), m.factors.end(),
            [](const Factor& a, const Factor& b) {
              return factor_cmp(a, b) < 0;
            });
  return m;
}

Factor normalize_factor(const PolyContext& ctx, Factor f) {
  check_factor(ctx, f);
  for (auto& a : f.args) {
    a = normalize_poly(a.context, std::move(a.monomials));
  }
  return f;
}

}  // namespace

HOPoly normalize_poly(PolyContext ctx, std::vector<Monomial> monomials) {
  for (auto& m : monomials) {
    if (m.coeff < 0) throw PolyError("negative coefficient");
    m = normalize_monomial(ctx, std::move(m));
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) {
              return monomial_key_cmp(a, b) < 0;
            });
  std::vector<Monomial> merged;
  for (auto& m : monomials) {
    if (m.coeff == 0) continue;
    if (!merged.empty() && monomial_key_cmp(merged.back(), m) == 0) {
      merged.back().coeff += m.coeff;
    } else {
      merged.push_back(std::move(m));
    }
  }
  return HOPoly{std::move(ctx), std::move(merged)};
}

HOPoly zero_poly(PolyContext ctx) { return HOPoly{std::move(ctx), {}}; }

HOPoly const_poly(PolyContext ctx, Nat c) {
  if (c < 0) throw PolyError("negative constant");
  if (c == 0) return zero_poly(std::move(ctx));
  return HOPoly{std::move(ctx), {Monomial{std::move(c), {}}}};
}

HOPoly var_poly(PolyContext ctx, std::size_t var) {
  Factor f{var, {}};
  check_factor(ctx, f);
  return HOPoly{std::move(ctx), {Monomial{1, {std::move(f)}}}};
}

HOPoly fun_var_poly(PolyContext ctx, std::size_t var,
                    std::vector<HOPoly> args) {
  Factor f{var, std::move(args)};
  check_factor(ctx, f);
  return HOPoly{std::move(ctx), {Monomial{1, {std::move(f)}}}};
}

HOPoly add(const HOPoly& p, const HOPoly& q) {
  if (p.context != q.context) throw PolyError("add: context mismatch");
  std::vector<Monomial> ms = p.monomials;
  ms.insert(ms.end(), q.monomials.begin(), q.monomials.end());
  return normalize_poly(p.context, std::move(ms));
}

HOPoly mul(const HOPoly& p, const HOPoly& q) {
  if (p.context != q.context) throw PolyError("mul: context mismatch");
  std::vector<Monomial> ms;
  ms.reserve(p.monomials.size() * q.monomials.size());
  for (const auto& a : p.monomials) {
    for (const auto& b : q.monomials) {
      Monomial m{a.coeff * b.coeff, a.factors};
      m.factors.insert(m.factors.end(), b.factors.begin(), b.factors.end());
      ms.push_back(std::move(m));
    }
  }
  return normalize_poly(p.context, std::move(ms));
}

HOPoly add_const(const HOPoly& p, const Nat& c) {
  return add(p, const_poly(p.context, c));
}

Nat constant_coeff(const HOPoly& p) {
  if (!p.monomials.empty() && p.monomials.front().factors.empty()) {
    return p.monomials.front().coeff;
  }
  return 0;
}

namespace {

Factor reindex_factor(const Factor& f, const std::vector<std::size_t>& var_map,
                      const PolyContext& target) {
  Factor out;
  out.var = var_map.at(f.var);
  out.args.reserve(f.args.size());
  for (const auto& a : f.args) out.args.push_back(reindex(a, var_map, target));
  return out;
}

}  // namespace

HOPoly reindex(const HOPoly& p, const std::vector<std::size_t>& var_map,
               PolyContext target) {
  if (var_map.size() != p.context.size()) {
    throw PolyError("reindex: map size differs from context size");
  }
  for (std::size_t i = 0; i < var_map.size(); ++i) {
    if (var_map[i] >= target.size() ||
        target[var_map[i]].arity != p.context[i].arity) {
      throw PolyError("reindex: variable " + std::to_string(i) +
                      " maps to an incompatible slot");
    }
  }
  std::vector<Monomial> ms;
  ms.reserve(p.monomials.size());
  for (const auto& m : p.monomials) {
    Monomial out{m.coeff, {}};
    out.factors.reserve(m.factors.size());
    for (const auto& f : m.factors) {
      out.factors.push_back(reindex_factor(f, var_map, target));
    }
    ms.push_back(std::move(out));
  }
  return normalize_poly(std::move(target), std::move(ms));
}

HOPoly weaken(const HOPoly& p, const PolyContext& target) {
  if (target.size() < p.context.size()) {
    throw PolyError("weaken: target context is smaller");
  }
  std::vector<std::size_t> var_map(p.context.size());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i;
  return reindex(p, var_map, target);
}

namespace {

void check_subst(const PolySubst& sigma) {
  if (sigma.entries.size() != sigma.source.size()) {
    throw PolyError("subst: entry count differs from source context");
  }
  for (std::size_t i = 0; i < sigma.entries.size(); ++i) {
    const PolyAbstraction& e = sigma.entries[i];
    if (e.params != sigma.source[i].arity) {
      throw PolyError("subst: entry " + std::to_string(i) +
                      " has wrong parameter count");
    }
    if (e.body.context.size() != sigma.target.size() + e.params) {
      throw PolyError("subst: entry " + std::to_string(i) +
                      " body context has wrong size");
    }
    for (std::size_t j = 0; j < sigma.target.size(); ++j) {
      if (e.body.context[j] != sigma.target[j]) {
        throw PolyError("subst: entry body context does not extend target");
      }
    }
    for (std::size_t j = 0; j < e.params; ++j) {
      if (e.body.context[sigma.target.size() + j].arity != 0) {
        throw PolyError("subst: abstraction parameters must be numeric");
      }
    }
  }
}

// Replace the last `params.size()` (numeric) variables of body by the
// given polynomials over the prefix context; prefix variables stay put.
// Structural recursion, so it terminates even on applied function variables.
HOPoly plug_params(const HOPoly& body, const PolyContext& prefix,
                   const std::vector<HOPoly>& params) {
  if (body.context.size() != prefix.size() + params.size()) {
    throw PolyError("plug_params: context size mismatch");
  }
  for (const auto& p : params) {
    if (p.context != prefix) {
      throw PolyError("plug_params: argument context differs from prefix");
    }
  }
  HOPoly acc = zero_poly(prefix);
  for (const auto& m : body.monomials) {
    HOPoly term = const_poly(prefix, m.coeff);
    for (const auto& f : m.factors) {
      HOPoly value = zero_poly(prefix);
      if (f.var < prefix.size()) {
        if (f.args.empty()) {
          value = var_poly(prefix, f.var);
        } else {
          std::vector<HOPoly> args;
          args.reserve(f.args.size());
          for (const auto& a : f.args) {
            args.push_back(plug_params(a, prefix, params));
          }
          value = fun_var_poly(prefix, f.var, std::move(args));
        }
      } else {
        value = params[f.var - prefix.size()];
      }
      term = mul(term, value);
    }
    acc = add(acc, term);
  }
  return acc;
}

}  // namespace

HOPoly subst_poly(const HOPoly& p, const PolySubst& sigma) {
  check_subst(sigma);
  if (p.context != sigma.source) {
    throw PolyError("subst: polynomial context differs from source");
  }
  HOPoly acc = zero_poly(sigma.target);
  for (const auto& m : p.monomials) {
    HOPoly term = const_poly(sigma.target, m.coeff);
    for (const auto& f : m.factors) {
      const PolyAbstraction& e = sigma.entries[f.var];
      HOPoly value = e.body;
      if (e.params == 0) {
        // body already lives over the target context
      } else {
        std::vector<HOPoly> args;
        args.reserve(f.args.size());
        for (const auto& a : f.args) args.push_back(subst_poly(a, sigma));
        value = plug_params(e.body, sigma.target, args);
      }
      term = mul(term, value);
    }
    acc = add(acc, term);
  }
  return acc;
}

bool strongly_monotone(const HOPoly& p, const std::vector<std::size_t>& vars) {
  for (std::size_t v : vars) {
    if (v >= p.context.size()) throw PolyError("strongly_monotone: bad var");
    bool found = false;
    for (const auto& m : p.monomials) {
      if (m.factors.size() == 1 && m.factors[0].var == v && m.coeff >= 1) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

// Pointwise domination of single factors: numeric factors must be the
// same variable; applications of the same function variable dominate when
// arguments dominate pairwise.
bool factor_dominates(const Factor& a, const Factor& b) {
  if (a.var != b.var || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!poly_ge(a.args[i], b.args[i])) return false;
  }
  return true;
}

bool monomial_dominates(const Monomial& a, const Monomial& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (!factor_dominates(a.factors[i], b.factors[i])) return false;
  }
  return true;
}

// Cover every non-constant monomial of q by remaining capacity of
// dominating non-constant monomials of p, greedily in canonical order.
bool covers(const HOPoly& p, const HOPoly& q) {
  std::vector<Nat> capacity;
  std::vector<const Monomial*> supply;
  for (const auto& m : p.monomials) {
    if (m.factors.empty()) continue;
    supply.push_back(&m);
    capacity.push_back(m.coeff);
  }
  for (const auto& d : q.monomials) {
    if (d.factors.empty()) continue;
    Nat need = d.coeff;
    for (std::size_t i = 0; i < supply.size() && need > 0; ++i) {
      if (capacity[i] == 0) continue;
      if (!monomial_dominates(*supply[i], d)) continue;
      Nat take = capacity[i] < need ? capacity[i] : need;
      capacity[i] -= take;
      need -= take;
    }
    if (need > 0) return false;
  }
  return true;
}

}  // namespace

bool poly_ge(const HOPoly& p, const HOPoly& q) {
  if (p.context != q.context) throw PolyError("poly_ge: context mismatch");
  return covers(p, q) && constant_coeff(p) >= constant_coeff(q);
}

bool poly_gt(const HOPoly& p, const HOPoly& q) {
  if (p.context != q.context) throw PolyError("poly_gt: context mismatch");
  return covers(p, q) && constant_coeff(p) > constant_coeff(q);
}

namespace {

void print_poly(std::ostream& os, const HOPoly& p);

void print_factor(std::ostream& os, const Factor& f) {
  if (f.args.empty()) {
    os << 'x' << f.var;
    return;
  }
  os << 'F' << f.var << '(';
  for (std::size_t i = 0; i < f.args.size(); ++i) {
    if (i) os << ", ";
    print_poly(os, f.args[i]);
  }
  os << ')';
}

void print_poly(std::ostream& os, const HOPoly& p) {
  if (p.monomials.empty()) {
    os << '0';
    return;
  }
  bool first = true;
  for (const auto& m : p.monomials) {
    if (!first) os << " + ";
    first = false;
    if (m.factors.empty()) {
      os << m.coeff;
      continue;
    }
    bool star = false;
    if (m.coeff != 1) {
      os << m.coeff;
      star = true;
    }
    for (const auto& f : m.factors) {
      if (star) os << '*';
      star = true;
      print_factor(os, f);
    }
  }
}

struct PolyParser {
  const std::string& s;
  const PolyContext& ctx;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw PolyError("polynomial syntax: " + msg + " at offset " +
                    std::to_string(i) + " in \"" + s + "\"");
  }

  Nat number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail("expected a number");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return Nat(s.substr(start, i - start));
  }

  std::size_t var_index() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a variable index");
    return static_cast<std::size_t>(std::stoull(s.substr(start, i - start)));
  }

  Factor factor() {
    skip_ws();
    if (i >= s.size()) fail("expected a factor");
    char c = s[i];
    if (c == 'x') {
      ++i;
      std::size_t v = var_index();
      if (v >= ctx.size() || ctx[v].is_fun()) {
        fail("x" + std::to_string(v) + " is not a numeric variable here");
      }
      return Factor{v, {}};
    }
    if (c == 'F') {
      ++i;
      std::size_t v = var_index();
      if (v >= ctx.size() || !ctx[v].is_fun()) {
        fail("F" + std::to_string(v) + " is not a function variable here");
      }
      if (!eat('(')) fail("expected '('");
      std::vector<HOPoly> args;
      args.push_back(poly());
      while (eat(',')) args.push_back(poly());
      if (!eat(')')) fail("expected ')'");
      if (args.size() != ctx[v].arity) {
        fail("F" + std::to_string(v) + " expects " +
             std::to_string(ctx[v].arity) + " arguments");
      }
      return Factor{v, std::move(args)};
    }
    fail("expected a variable");
  }

  Monomial monomial() {
    skip_ws();
    Monomial m{1, {}};
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      m.coeff = number();
      saw_coeff = true;
    }
    if (saw_coeff && !peek('*')) return m;
    if (saw_coeff) eat('*');
    m.factors.push_back(factor());
    while (eat('*')) m.factors.push_back(factor());
    return m;
  }

  HOPoly poly() {
    std::vector<Monomial> ms;
    ms.push_back(monomial());
    while (eat('+')) ms.push_back(monomial());
    return normalize_poly(ctx, std::move(ms));
  }

  HOPoly parse_all() {
    HOPoly p = poly();
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return p;
  }
};

}  // namespace

std::string poly_to_string(const HOPoly& p) {
  std::ostringstream os;
  print_poly(os, p);
  return os.str();
}

HOPoly parse_poly(const std::string& text, const PolyContext& ctx) {
  PolyParser parser{text, ctx};
  return parser.parse_all();
}

}  // namespace hoterm
