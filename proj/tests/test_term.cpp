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

#include "doctest.h"
#include "hoterm/term.hpp"
#include "testutil.hpp"

using namespace hoterm;
using testutil::arrow;
using testutil::bt;

namespace {

// Independent size oracle: count constructors of the binary tree.
std::size_t size_oracle(const Term& t) {
  switch (t.kind()) {
    case TermKind::Sym:
    case TermKind::Var:
      return 1;
    case TermKind::Lam:
      return 1 + size_oracle(t.lam_body());
    case TermKind::App:
      return 1 + size_oracle(t.app_fn()) + size_oracle(t.app_arg());
  }
  return 0;
}

Term fully_applied_map() {
  // map F (cons x q) with F = Var 0, x = Var 1, q = Var 2.
  return Term::app(
      Term::app(Term::sym("map"), Term::var(0)),
      Term::app(Term::app(Term::sym("cons"), Term::var(1)), Term::var(2)));
}

}  // namespace

TEST_CASE("environment extension prepends") {
  VarEnv env = {bt("nat")};
  VarEnv inner = extend(bt("list"), env);
  REQUIRE(inner.size() == 2);
  CHECK(inner[0] == bt("list"));
  CHECK(inner[1] == bt("nat"));
}

TEST_CASE("signature keeps declaration order and rejects duplicates") {
  Signature sig = testutil::map_signature();
  std::vector<std::string> want = {"nil", "cons", "s", "0", "map"};
  CHECK(sig.symbols() == want);
  CHECK_FALSE(sig.add_symbol("map", bt("nat")));
  CHECK(sig.symbol_type("map") ==
        arrow(arrow(bt("nat"), bt("nat")), arrow(bt("list"), bt("list"))));
  CHECK(sig.has_base_type("nat"));
  CHECK_FALSE(sig.has_base_type("bool"));
}

TEST_CASE("term accessors check the constructor") {
  Term t = Term::app(Term::sym("f"), Term::var(0));
  CHECK(t.kind() == TermKind::App);
  CHECK_THROWS_AS(t.sym_name(), Error);
  CHECK(t.app_fn().sym_name() == "f");
  CHECK(t.app_arg().var_index() == 0);
}

TEST_CASE("term_eq is structural equality") {
  Term a = Term::lam(bt("nat"), Term::var(0));
  Term b = Term::lam(bt("nat"), Term::var(0));
  Term c = Term::lam(bt("list"), Term::var(0));
  CHECK(term_eq(a, b));
  CHECK_FALSE(term_eq(a, c));
  CHECK_FALSE(term_eq(a, Term::var(0)));
}

TEST_CASE("term_size of the fully applied map pattern") {
  Term t = fully_applied_map();
  CHECK(size_oracle(t) == 9);
  CHECK(term_size(t) == size_oracle(t));
  CHECK(term_size(Term::sym("nil")) == 1);
  CHECK(term_size(Term::lam(bt("nat"), Term::var(0))) == 2);
}

TEST_CASE("free_vars sees through binders") {
  // \y:nat. x y with x = Var 1 outside, Var 0 the binder.
  Term t = Term::lam(bt("nat"), Term::app(Term::var(1), Term::var(0)));
  auto fv = free_vars(t);
  CHECK(fv == std::set<std::size_t>{0});
  CHECK(free_vars(Term::sym("nil")).empty());
  CHECK(free_vars(Term::var(3)) == std::set<std::size_t>{3});
}

TEST_CASE("paths address subterms") {
  Term t = fully_applied_map();
  TermPath p = {PathStep::Arg, PathStep::Fn, PathStep::Arg};
  auto sub = subterm_at(t, p);
  REQUIRE(sub.has_value());
  CHECK(term_eq(*sub, Term::var(1)));

  CHECK_FALSE(subterm_at(t, {PathStep::Body}).has_value());

  Term replaced = replace_at(t, p, Term::sym("0"));
  auto back = subterm_at(replaced, p);
  REQUIRE(back.has_value());
  CHECK(term_eq(*back, Term::sym("0")));
  // The rest of the term is untouched.
  CHECK(term_eq(*subterm_at(replaced, {PathStep::Fn}),
                *subterm_at(t, {PathStep::Fn})));
  CHECK_THROWS_AS(replace_at(t, {PathStep::Body}, Term::sym("0")), Error);

  CHECK(path_to_string({}) == "root");
  CHECK(path_to_string(p) == "arg.fn.arg");
}

TEST_CASE("env_at extends across lambda bodies") {
  Term t = Term::lam(bt("nat"), Term::lam(bt("list"), Term::var(0)));
  VarEnv outer = {bt("nat")};
  VarEnv env = env_at(t, {PathStep::Body, PathStep::Body}, outer);
  REQUIRE(env.size() == 3);
  CHECK(env[0] == bt("list"));
  CHECK(env[1] == bt("nat"));
  CHECK(env[2] == bt("nat"));
}

TEST_CASE("infer types the map pattern") {
  Signature sig = testutil::map_signature();
  VarEnv env = {arrow(bt("nat"), bt("nat")), bt("nat"), bt("list")};
  CHECK(infer(sig, env, fully_applied_map()) == bt("list"));
  CHECK(infer(sig, env, Term::sym("map")) ==
        arrow(arrow(bt("nat"), bt("nat")), arrow(bt("list"), bt("list"))));
  CHECK(infer(sig, env, Term::var(0)) == arrow(bt("nat"), bt("nat")));
  CHECK(infer(sig, {}, Term::lam(bt("nat"), Term::var(0))) ==
        arrow(bt("nat"), bt("nat")));
}

TEST_CASE("infer reports the failing path and kind") {
  Signature sig = testutil::map_signature();
  try {
    infer(sig, {}, Term::app(Term::sym("s"), Term::sym("nil")));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == TypeErrorKind::IllTypedApplication);
    CHECK(e.path.empty());
  }
  try {
    infer(sig, {}, Term::app(Term::sym("s"), Term::var(2)));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == TypeErrorKind::UnboundVariable);
    CHECK(e.path == TermPath{PathStep::Arg});
  }
  try {
    infer(sig, {}, Term::sym("ghost"));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == TypeErrorKind::UnknownSymbol);
  }
  // Applying a base-typed term is the same error kind.
  try {
    infer(sig, {}, Term::app(Term::sym("nil"), Term::sym("nil")));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == TypeErrorKind::IllTypedApplication);
  }
}

TEST_CASE("TypedTerm caches a checked type") {
  Signature sig = testutil::map_signature();
  VarEnv env = {bt("nat")};
  TypedTerm t = TypedTerm::make(sig, env, Term::app(Term::sym("s"),
                                                    Term::var(0)));
  CHECK(t.type == bt("nat"));
  CHECK(t.env == env);
}

TEST_CASE("random terms typecheck at their requested type") {
  Signature sig = testutil::map_signature();
  testutil::TermGen gen(sig, 20260814);
  int made = 0;
  for (int i = 0; i < 200; ++i) {
    SimpleType ty = gen.random_type(1);
    VarEnv env = {bt("nat"), bt("list"), arrow(bt("nat"), bt("nat"))};
    auto t = gen.term_of(ty, env, 10);
    if (!t) continue;
    ++made;
    CHECK(infer(sig, env, *t) == ty);
  }
  CHECK(made > 150);  // the generator succeeds almost always on this sig
}
