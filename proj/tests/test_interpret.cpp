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

#include <random>
#include <vector>

#include "doctest.h"
#include "hoterm/interpret.hpp"
#include "hoterm/subst.hpp"
#include "testutil.hpp"

using namespace hoterm;
using testutil::arrow;
using testutil::bt;

namespace {

// The reference algebra for the map signature: orients both map rules.
Algebra good_algebra() {
  Signature sig = testutil::map_signature();
  Algebra alg;
  alg.interp["nil"] = parse_poly("0", symbol_context(sig.symbol_type("nil")));
  alg.interp["cons"] =
      parse_poly("x0 + x1", symbol_context(sig.symbol_type("cons")));
  alg.interp["s"] = parse_poly("x0", symbol_context(sig.symbol_type("s")));
  alg.interp["0"] = parse_poly("0", symbol_context(sig.symbol_type("0")));
  alg.interp["map"] =
      parse_poly("3*x1 + F0(x1) + 2*x1*F0(x1)",
                 symbol_context(sig.symbol_type("map")));
  return alg;
}

Term app2(const std::string& f, Term a, Term b) {
  return Term::app(Term::app(Term::sym(f), std::move(a)), std::move(b));
}

}  // namespace

TEST_CASE("symbol_context uncurries the symbol type") {
  Signature sig = testutil::map_signature();
  CHECK(symbol_context(sig.symbol_type("nil")).empty());
  PolyContext cons_ctx = symbol_context(sig.symbol_type("cons"));
  REQUIRE(cons_ctx.size() == 2);
  CHECK(cons_ctx[0].arity == 0);
  CHECK(cons_ctx[1].arity == 0);
  PolyContext map_ctx = symbol_context(sig.symbol_type("map"));
  REQUIRE(map_ctx.size() == 2);
  CHECK(map_ctx[0].arity == 1);
  CHECK(map_ctx[1].arity == 0);
  // Order-3 symbol types are outside the fragment.
  SimpleType order3 =
      arrow(arrow(arrow(bt("nat"), bt("nat")), bt("nat")), bt("nat"));
  CHECK_THROWS_AS(symbol_context(order3), UnsupportedOrderError);
}

TEST_CASE("open_context reverses the environment then appends arguments") {
  VarEnv env = {arrow(bt("nat"), bt("nat")), bt("nat"), bt("list")};
  PolyContext ctx = open_context(env, bt("list"));
  REQUIRE(ctx.size() == 3);
  CHECK(ctx[0].arity == 0);  // q, the outermost entry, comes first
  CHECK(ctx[1].arity == 0);
  CHECK(ctx[2].arity == 1);
  PolyContext ctx2 = open_context(env, arrow(bt("list"), bt("list")));
  REQUIRE(ctx2.size() == 4);
  CHECK(ctx2[3].arity == 0);
}

TEST_CASE("open_context commutes with environment extension") {
  // The lambda case of the interpretation relies on this identity.
  std::mt19937 rng(11);
  Signature sig = testutil::map_signature();
  testutil::TermGen gen(sig, 11);
  for (int i = 0; i < 50; ++i) {
    VarEnv env;
    int n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int j = 0; j < n; ++j) env.push_back(gen.random_type(1));
    SimpleType a = gen.random_type(1);
    SimpleType c = gen.random_type(1);
    CHECK(open_context(extend(a, env), c) == open_context(env, arrow(a, c)));
  }
}

TEST_CASE("variables interpret as their context position") {
  Algebra alg = good_algebra();
  Signature sig = testutil::map_signature();

  VarEnv env = {bt("nat"), bt("list")};
  OpenInterp v0 = interp_term(alg, sig, env, Term::var(0));
  CHECK(v0.type == bt("nat"));
  CHECK(poly_to_string(v0.body) == "x1");  // innermost binder sits last
  OpenInterp v1 = interp_term(alg, sig, env, Term::var(1));
  CHECK(poly_to_string(v1.body) == "x0");

  VarEnv fenv = {arrow(bt("nat"), bt("nat"))};
  OpenInterp f = interp_term(alg, sig, fenv, Term::var(0));
  CHECK(f.type == arrow(bt("nat"), bt("nat")));
  CHECK(poly_to_string(f.body) == "F0(x1)");
}

TEST_CASE("symbols interpret as J shifted past the environment") {
  Algebra alg = good_algebra();
  Signature sig = testutil::map_signature();
  OpenInterp closed = interp_term(alg, sig, {}, Term::sym("map"));
  CHECK(poly_to_string(closed.body) == "3*x1 + F0(x1) + 2*x1*F0(x1)");
  OpenInterp shifted = interp_term(alg, sig, {bt("nat")}, Term::sym("map"));
  CHECK(poly_to_string(shifted.body) == "3*x2 + F1(x2) + 2*x2*F1(x2)");
}

TEST_CASE("application adds the argument penalty") {
  Algebra alg = good_algebra();
  Signature sig = testutil::map_signature();
  // s X at base with J(s) = x: J(s)(x) + nu(x) + 1 = 2x + 1.
  VarEnv env = {bt("nat")};
  OpenInterp sx = interp_term(alg, sig, env,
                              Term::app(Term::sym("s"), Term::var(0)));
  CHECK(poly_to_string(sx.body) == "1 + 2*x0");

  // Closed values chain the penalty: each s leads to 2v + 1.
  CHECK(interp_value(alg, sig, Term::sym("0")) == 0);
  Term one = Term::app(Term::sym("s"), Term::sym("0"));
  Term two = Term::app(Term::sym("s"), one);
  CHECK(interp_value(alg, sig, one) == 1);
  CHECK(interp_value(alg, sig, two) == 3);
  // cons X Y = (x + y) + (x + 1) + (y + 1).
  CHECK(interp_value(alg, sig, app2("cons", Term::sym("0"),
                                    Term::sym("nil"))) == 2);
}

TEST_CASE("beta redexes cost strictly more than their reducts") {
  Algebra alg = good_algebra();
  Signature sig = testutil::map_signature();
  // (\x:nat. x) 0 evaluates to nu(0) + 1 = 1.
  Term idz = Term::app(Term::lam(bt("nat"), Term::var(0)), Term::sym("0"));
  CHECK(interp_value(alg, sig, idz) == 1);

  // With J(s) = x + 1 the successor term s X costs 2x + 2, so the
  // argument s 0 is worth 2, and applying \v. s v to it costs
  // f(2) + nu(2) + 1 = 6 + 2 + 1 = 9 while the reduct s (s 0) costs 6.
  Algebra alg1 = alg;
  alg1.interp["s"] =
      parse_poly("1 + x0", symbol_context(sig.symbol_type("s")));
  Term one = Term::app(Term::sym("s"), Term::sym("0"));
  Term lam_s = Term::lam(bt("nat"), Term::app(Term::sym("s"), Term::var(0)));
  Term redex = Term::app(lam_s, one);
  CHECK(interp_value(alg1, sig, one) == 2);
  CHECK(interp_value(alg1, sig, redex) == 9);
  Term reduct = beta_subst(lam_s.lam_body(), one);
  CHECK(interp_value(alg1, sig, reduct) == 6);
}

TEST_CASE("random beta steps decrease the closed value") {
  Algebra alg = good_algebra();
  Signature sig = testutil::map_signature();
  testutil::TermGen gen(sig, 12);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 120; ++i) {
    SimpleType a = gen.random_type(1);
    SimpleType res = i % 2 ? bt("nat") : bt("list");
    auto body = gen.term_of(res, {a}, 6);
    auto arg = gen.term_of(a, {}, 5);
    if (!body || !arg) continue;
    ++checked;
    Term redex = Term::app(Term::lam(a, *body), *arg);
    Nat before = interp_value(alg, sig, redex);
    Nat after = interp_value(alg, sig, beta_subst(*body, *arg));
    CHECK(before > after);
    // The polynomial comparison also certifies the step symbolically.
    OpenInterp pr = interp_term(alg, sig, {}, redex);
    OpenInterp pd = interp_term(alg, sig, {}, beta_subst(*body, *arg));
    CHECK(poly_gt(pr.body, pd.body));
  }
  CHECK(checked == 120);
}

TEST_CASE("interpretation commutes with closed substitution") {
  Algebra alg = good_algebra();
  Signature sig = testutil::map_signature();
  testutil::TermGen gen(sig, 13);
  VarEnv env = {bt("nat"), arrow(bt("nat"), bt("nat")), bt("list")};
  int checked = 0;
  for (int i = 0; i < 200 && checked < 80; ++i) {
    auto g0 = gen.term_of(env[0], {}, 5);
    auto g1 = gen.term_of(env[1], {}, 5);
    auto g2 = gen.term_of(env[2], {}, 5);
    auto t = gen.term_of(bt("nat"), env, 7);
    if (!g0 || !g1 || !g2 || !t) continue;
    ++checked;
    Substitution gamma(env, {}, {*g0, *g1, *g2});

    // theta values the reversed environment with the images' semantics.
    OpenInterp f1 = interp_term(alg, sig, {}, *g1);
    Valuation theta = {
        SemValue::number(interp_value(alg, sig, *g2)),
        SemValue::functional(env[1], f1.body),
        SemValue::number(interp_value(alg, sig, *g0)),
    };
    OpenInterp open_t = interp_term(alg, sig, env, *t);
    CHECK(eval(open_t.body, theta) == interp_value(alg, sig,
                                                   apply_sub(gamma, *t)));
  }
  CHECK(checked == 80);
}

TEST_CASE("check_rule_oriented on one-step rules") {
  Signature sig;
  sig.add_base_type("nat");
  sig.add_symbol("f", arrow(bt("nat"), bt("nat")));
  sig.add_symbol("s", arrow(bt("nat"), bt("nat")));
  PolyContext unary = {PolyVar{0}};

  RewriteRule drop;
  drop.env = {bt("nat")};
  drop.lhs = Term::app(Term::sym("f"), Term::var(0));
  drop.rhs = Term::var(0);
  drop.type = bt("nat");

  Algebra alg;
  alg.interp["f"] = parse_poly("x0", unary);
  alg.interp["s"] = parse_poly("x0", unary);
  // lhs = 2x + 1 vs rhs = x: oriented by the application penalty alone.
  CHECK(check_rule_oriented(alg, sig, drop) == Orientation::Oriented);

  RewriteRule step = drop;
  step.rhs = Term::app(Term::sym("s"), Term::var(0));
  // lhs = 2x + 1 vs rhs = 2x + 1: not strictly greater.
  CHECK(check_rule_oriented(alg, sig, step) == Orientation::Inconclusive);

  Algebra bigger;
  bigger.interp["f"] = parse_poly("2*x0 + 1", unary);
  bigger.interp["s"] = parse_poly("x0", unary);
  // lhs = 3x + 2 vs rhs = 2x + 1.
  CHECK(check_rule_oriented(bigger, sig, step) == Orientation::Oriented);
}

TEST_CASE("map rules are oriented by the reference algebra") {
  Algebra alg = good_algebra();
  Afs afs = testutil::map_afs();
  CHECK(check_rule_oriented(alg, afs.sig, afs.rules[0]) ==
        Orientation::Oriented);
  CHECK(check_rule_oriented(alg, afs.sig, afs.rules[1]) ==
        Orientation::Oriented);

  Algebra weak = alg;
  weak.interp["map"] = parse_poly(
      "x1 + F0(x1)", symbol_context(afs.sig.symbol_type("map")));
  CHECK(check_rule_oriented(weak, afs.sig, afs.rules[1]) ==
        Orientation::Inconclusive);
}

TEST_CASE("algebra_strongly_monotone accepts and explains") {
  Signature sig = testutil::map_signature();
  Algebra alg = good_algebra();
  std::vector<std::string> why;
  CHECK(algebra_strongly_monotone(sig, alg, &why));
  CHECK(why.empty());

  SUBCASE("missing symbol") {
    alg.interp.erase("cons");
    CHECK_FALSE(algebra_strongly_monotone(sig, alg, &why));
    REQUIRE_FALSE(why.empty());
    CHECK(why.front().find("cons") != std::string::npos);
  }
  SUBCASE("wrong context shape") {
    alg.interp["cons"] = parse_poly("x0", PolyContext{PolyVar{0}});
    CHECK_FALSE(algebra_strongly_monotone(sig, alg, &why));
  }
  SUBCASE("not monotone in every argument") {
    alg.interp["cons"] =
        parse_poly("x0", symbol_context(sig.symbol_type("cons")));
    CHECK_FALSE(algebra_strongly_monotone(sig, alg, &why));
    REQUIRE_FALSE(why.empty());
    CHECK(why.front().find("cons") != std::string::npos);
  }
}

TEST_CASE("sn_verdict sums up the criterion") {
  Afs afs = testutil::map_afs();
  Verdict good = sn_verdict(afs, good_algebra());
  CHECK(good.terminating);
  CHECK(good.unoriented_rules.empty());

  Algebra weak = good_algebra();
  weak.interp["map"] = parse_poly(
      "x1 + F0(x1)", symbol_context(afs.sig.symbol_type("map")));
  Verdict bad = sn_verdict(afs, weak);
  CHECK_FALSE(bad.terminating);
  CHECK(bad.unoriented_rules == std::vector<std::size_t>{1});

  Algebra broken = good_algebra();
  broken.interp["cons"] =
      parse_poly("x0", symbol_context(afs.sig.symbol_type("cons")));
  CHECK_THROWS_AS(sn_verdict(afs, broken), Error);
}

TEST_CASE("rule steps decrease closed values everywhere in a term") {
  Algebra alg = good_algebra();
  Afs afs = testutil::map_afs();
  testutil::TermGen gen(afs.sig, 14);
  int steps_seen = 0;
  for (int i = 0; i < 250; ++i) {
    // interp_value is only defined at base type.
    auto t = gen.term_of(i % 2 ? bt("nat") : bt("list"), {}, 10);
    if (!t) continue;
    Nat before = interp_value(alg, afs.sig, *t);
    for (const auto& step : redexes(afs, *t)) {
      ++steps_seen;
      CHECK(before > interp_value(alg, afs.sig, step.result));
    }
  }
  CHECK(steps_seen > 50);
}
