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

#include "hoterm/order.hpp"

#include <sstream>

namespace hoterm {

SemValue SemValue::number(Nat n) {
  if (n < 0) throw PolyError("semantic values are naturals");
  SemValue v;
  v.number_ = true;
  v.value_ = std::move(n);
  return v;
}

SemValue SemValue::functional(SimpleType type, HOPoly body) {
  if (type.is_base()) throw PolyError("functional needs an arrow type");
  TypeDecomp d = arity_decompose(type);
  if (body.context.size() != d.args.size()) {
    throw PolyError("functional body context does not match the type");
  }
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (body.context[i] != poly_var_for(d.args[i])) {
      throw PolyError("functional body context does not match the type");
    }
  }
  SemValue v;
  v.number_ = false;
  v.type_ = std::move(type);
  v.body_ = std::move(body);
  return v;
}

const Nat& SemValue::value() const {
  if (!number_) throw PolyError("value() on a functional");
  return value_;
}

const SimpleType& SemValue::type() const {
  if (number_) throw PolyError("type() on a number");
  return type_;
}

const HOPoly& SemValue::body() const {
  if (number_) throw PolyError("body() on a number");
  return body_;
}

namespace {

void check_valuation(const PolyContext& ctx, const Valuation& theta) {
  if (theta.size() != ctx.size()) {
    throw PolyError("valuation size differs from context size");
  }
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx[i].arity == 0) {
      if (!theta[i].is_number()) {
        throw PolyError("valuation: variable " + std::to_string(i) +
                        " needs a number");
      }
    } else {
      if (theta[i].is_number()) {
        throw PolyError("valuation: variable " + std::to_string(i) +
                        " needs a functional");
      }
      if (theta[i].body().context.size() != ctx[i].arity) {
        throw PolyError("valuation: variable " + std::to_string(i) +
                        " has the wrong arity");
      }
    }
  }
}

}  // namespace

Nat eval(const HOPoly& p, const Valuation& theta) {
  check_valuation(p.context, theta);
  Nat total = 0;
  for (const auto& m : p.monomials) {
    Nat term = m.coeff;
    for (const auto& f : m.factors) {
      if (term == 0) break;
      const SemValue& v = theta[f.var];
      if (f.args.empty()) {
        term *= v.value();
      } else {
        Valuation args;
        args.reserve(f.args.size());
        for (const auto& a : f.args) {
          args.push_back(SemValue::number(eval(a, theta)));
        }
        term *= apply_value(v, args);
      }
    }
    total += term;
  }
  return total;
}

Nat apply_value(const SemValue& f, const Valuation& args) {
  if (f.is_number()) {
    if (!args.empty()) throw PolyError("applying a number to arguments");
    return f.value();
  }
  return eval(f.body(), args);
}

SemValue bottom(const SimpleType& t) {
  if (t.is_base()) return SemValue::number(0);
  TypeDecomp d = arity_decompose(t);
  PolyContext ctx;
  ctx.reserve(d.args.size());
  for (const auto& a : d.args) ctx.push_back(poly_var_for(a));
  return SemValue::functional(t, zero_poly(std::move(ctx)));
}

Nat nu(const SemValue& v) {
  if (v.is_number()) return v.value();
  TypeDecomp d = arity_decompose(v.type());
  Valuation bottoms;
  bottoms.reserve(d.args.size());
  for (const auto& a : d.args) bottoms.push_back(bottom(a));
  return apply_value(v, bottoms);
}

namespace {

enum class Cmp { Ge, Gt };

bool sem_cmp(const SemValue& a, const SemValue& b, const ProbeSet& probes,
             Cmp mode) {
  if (a.is_number() != b.is_number()) {
    throw PolyError("comparing values of different kinds");
  }
  if (a.is_number()) {
    return mode == Cmp::Ge ? a.value() >= b.value() : a.value() > b.value();
  }
  if (probes.tuples.empty()) {
    throw PolyError("comparing functionals needs a nonempty probe set");
  }
  for (const auto& t : probes.tuples) {
    Nat va = apply_value(a, t);
    Nat vb = apply_value(b, t);
    if (mode == Cmp::Ge ? !(va >= vb) : !(va > vb)) return false;
  }
  return true;
}

}  // namespace

bool sem_ge(const SemValue& a, const SemValue& b, const ProbeSet& probes) {
  return sem_cmp(a, b, probes, Cmp::Ge);
}

bool sem_gt(const SemValue& a, const SemValue& b, const ProbeSet& probes) {
  return sem_cmp(a, b, probes, Cmp::Gt);
}

OrderAxiomReport check_order_axioms(const std::vector<SemValue>& samples,
                                    const ProbeSet& probes) {
  OrderAxiomReport report;
  auto note = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  std::size_t n = samples.size();
  auto name = [](std::size_t i) { return "#" + std::to_string(i); };
  // Evaluate each pair once; the cubic mixing checks then cost lookups.
  std::vector<std::vector<bool>> ge(n, std::vector<bool>(n));
  std::vector<std::vector<bool>> gt(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ge[i][j] = sem_ge(samples[i], samples[j], probes);
      gt[i][j] = sem_gt(samples[i], samples[j], probes);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ge[i][i]) note("ge not reflexive at " + name(i));
    if (gt[i][i]) note("gt not irreflexive at " + name(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gt[i][j] && !ge[i][j]) {
        note("gt not included in ge at (" + name(i) + ", " + name(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ge[i][j] && ge[j][k] && !ge[i][k]) {
          note("ge not transitive at (" + name(i) + ", " + name(j) + ", " +
               name(k) + ")");
        }
        if (gt[i][j] && ge[j][k] && !gt[i][k]) {
          note("gt.ge escapes gt at (" + name(i) + ", " + name(j) + ", " +
               name(k) + ")");
        }
        if (ge[i][j] && gt[j][k] && !gt[i][k]) {
          note("ge.gt escapes gt at (" + name(i) + ", " + name(j) + ", " +
               name(k) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace hoterm
