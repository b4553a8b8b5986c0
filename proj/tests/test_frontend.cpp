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

#include <string>
#include <vector>

#include "doctest.h"
#include "hoterm/parser.hpp"
#include "hoterm/printer.hpp"
#include "testutil.hpp"

using namespace hoterm;
using testutil::arrow;
using testutil::bt;

namespace {

const char* kMapText =
    "# map over cons lists\n"
    "SIG\n"
    "  nil : list\n"
    "  cons : nat -> list -> list\n"
    "  s : nat -> nat\n"
    "  0 : nat\n"
    "  map : (nat -> nat) -> list -> list\n"
    "VARS\n"
    "  F : nat -> nat\n"
    "  x : nat\n"
    "  q : list\n"
    "RULES\n"
    "  map F nil => nil\n"
    "  map F (cons x q) => cons (F x) (map F q)\n";

}  // namespace

TEST_CASE("parse_afs reads the map system back into the reference form") {
  AfsFile file = parse_afs(kMapText);
  Afs expect = testutil::map_afs();

  CHECK(file.afs.sig.symbols() == expect.sig.symbols());
  for (const auto& f : expect.sig.symbols()) {
    CHECK(file.afs.sig.symbol_type(f) == expect.sig.symbol_type(f));
  }
  CHECK(file.afs.sig.has_base_type("nat"));
  CHECK(file.afs.sig.has_base_type("list"));

  REQUIRE(file.afs.rules.size() == expect.rules.size());
  for (std::size_t i = 0; i < expect.rules.size(); ++i) {
    const RewriteRule& got = file.afs.rules[i];
    const RewriteRule& want = expect.rules[i];
    CHECK(got.env == want.env);
    CHECK(term_eq(got.lhs, want.lhs));
    CHECK(term_eq(got.rhs, want.rhs));
    CHECK(got.type == want.type);
    CHECK(got.var_names == want.var_names);
  }

  REQUIRE(file.vars.size() == 3);
  CHECK(file.vars[0].first == "F");
  CHECK(file.vars[0].second == arrow(bt("nat"), bt("nat")));
  CHECK(file.vars[2].first == "q");
}

TEST_CASE("rule variables are numbered by first occurrence") {
  AfsFile file = parse_afs(
      "SIG\n  plus : nat -> nat -> nat\nVARS\n  x : nat\n  y : nat\n"
      "RULES\n  plus x y => plus y x\n");
  REQUIRE(file.afs.rules.size() == 1);
  const RewriteRule& r = file.afs.rules[0];
  CHECK(r.var_names == std::vector<std::string>{"x", "y"});
  Term plus = Term::sym("plus");
  CHECK(term_eq(r.lhs,
                Term::app(Term::app(plus, Term::var(0)), Term::var(1))));
  CHECK(term_eq(r.rhs,
                Term::app(Term::app(plus, Term::var(1)), Term::var(0))));
}

TEST_CASE("empty sections parse") {
  AfsFile file = parse_afs("SIG\nVARS\nRULES\n");
  CHECK(file.afs.sig.symbols().empty());
  CHECK(file.vars.empty());
  CHECK(file.afs.rules.empty());

  // Missing trailing newline is fine too.
  AfsFile f2 = parse_afs("SIG\n  a : o\nVARS\nRULES\n  a => a");
  CHECK(f2.afs.rules.size() == 1);
}

TEST_CASE("lambdas parse inside rules") {
  AfsFile file = parse_afs(
      "SIG\n  ida : nat -> nat\nVARS\n  x : nat\n"
      "RULES\n  ida x => (\\y:nat. y) x\n");
  const RewriteRule& r = file.afs.rules[0];
  CHECK(term_eq(r.rhs, Term::app(Term::lam(bt("nat"), Term::var(0)),
                                 Term::var(0))));
  // A binder named like a rule variable shadows it inside its body.
  AfsFile shadow = parse_afs(
      "SIG\n  f : (nat -> nat) -> nat -> nat\nVARS\n  x : nat\n"
      "RULES\n  f (\\x:nat. x) x => x\n");
  const RewriteRule& sr = shadow.afs.rules[0];
  CHECK(sr.var_names == std::vector<std::string>{"x"});
  CHECK(term_eq(sr.lhs,
                Term::app(Term::app(Term::sym("f"),
                                    Term::lam(bt("nat"), Term::var(0))),
                          Term::var(0))));
}

TEST_CASE("syntax errors carry 1-based positions") {
  try {
    parse_afs("SIG\n  f : nat - nat\nVARS\nRULES\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 11);
    CHECK(std::string(e.what()).find("stray '-'") != std::string::npos);
  }
  try {
    parse_afs("SIG\nVARS\nRULES\n  a = b\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("stray '='") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_afs("SIG\n  f : nat ? nat\nVARS\nRULES\n"),
                  SyntaxError);  // unexpected character
  CHECK_THROWS_AS(parse_afs("RULES\n"), SyntaxError);     // expected SIG
  CHECK_THROWS_AS(parse_afs("SIG\n  f nat\nVARS\nRULES\n"),
                  SyntaxError);  // missing ':'
  CHECK_THROWS_AS(parse_afs("SIG\n  f : nat\nRULES\n"),
                  SyntaxError);  // missing VARS
  CHECK_THROWS_AS(parse_afs(""), SyntaxError);
}

TEST_CASE("name clashes are rejected at parse time") {
  CHECK_THROWS_WITH_AS(
      parse_afs("SIG\n  f : nat\n  f : nat\nVARS\nRULES\n"),
      "line 3, col 3: duplicate symbol f", SyntaxError);
  CHECK_THROWS_WITH_AS(
      parse_afs("SIG\nVARS\n  x : nat\n  x : nat\nRULES\n"),
      "line 4, col 3: duplicate variable x", SyntaxError);
  CHECK_THROWS_WITH_AS(
      parse_afs("SIG\n  f : nat\nVARS\n  f : nat\nRULES\n"),
      "line 4, col 3: variable f collides with a symbol", SyntaxError);
  CHECK_THROWS_WITH_AS(
      parse_afs("SIG\n  f : nat -> nat\nVARS\nRULES\n  f y => y\n"),
      "line 5, col 5: unknown name y", SyntaxError);
}

TEST_CASE("well-formedness violations come back with rule lines") {
  // rhs variable missing from the lhs.
  try {
    parse_afs("SIG\n  f : nat -> nat\nVARS\n  x : nat\n  y : nat\n"
              "RULES\n  f x => y\n");
    FAIL("expected AfsError");
  } catch (const AfsError& e) {
    REQUIRE(e.violations.size() == 1);
    CHECK(e.violations[0].kind == ViolationKind::VariableNotInLhs);
    CHECK(std::string(e.what()).find("line 7:") != std::string::npos);
  }
  // lhs and rhs at different types.
  try {
    parse_afs("SIG\n  f : nat -> list\n  0 : nat\nVARS\n  x : nat\n"
              "RULES\n  f x => 0\n");
    FAIL("expected AfsError");
  } catch (const AfsError& e) {
    REQUIRE(e.violations.size() == 1);
    CHECK(e.violations[0].kind == ViolationKind::RuleTypeMismatch);
    CHECK(std::string(e.what()).find("line 7:") != std::string::npos);
  }
  // Variable-headed lhs.
  try {
    parse_afs("SIG\n  0 : nat\nVARS\n  F : nat -> nat\n"
              "RULES\n  F 0 => 0\n");
    FAIL("expected AfsError");
  } catch (const AfsError& e) {
    REQUIRE(!e.violations.empty());
    CHECK(e.violations[0].kind == ViolationKind::VariableHeadedLhs);
  }
}

TEST_CASE("comments vanish everywhere") {
  AfsFile file = parse_afs(
      "# leading\nSIG # trailing\n  a : o # more\nVARS\nRULES\n"
      "  a => a # done\n# closing\n");
  CHECK(file.afs.sig.symbols() == std::vector<std::string>{"a"});
  CHECK(file.afs.rules.size() == 1);
}

TEST_CASE("print_afs is the parsing inverse") {
  AfsFile file = parse_afs(kMapText);
  std::string printed = print_afs(file);
  CHECK(printed ==
        "SIG\n"
        "  nil : list\n"
        "  cons : nat -> list -> list\n"
        "  s : nat -> nat\n"
        "  0 : nat\n"
        "  map : (nat -> nat) -> list -> list\n"
        "VARS\n"
        "  F : nat -> nat\n"
        "  x : nat\n"
        "  q : list\n"
        "RULES\n"
        "  map F nil => nil\n"
        "  map F (cons x q) => cons (F x) (map F q)\n");
  AfsFile again = parse_afs(printed);
  CHECK(print_afs(again) == printed);
}

TEST_CASE("parse_term handles closed terms only") {
  Signature sig = testutil::map_signature();
  Term t = parse_term("map (\\y:nat. s y) (cons 0 nil)", sig);
  Term want = Term::app(
      Term::app(Term::sym("map"),
                Term::lam(bt("nat"),
                          Term::app(Term::sym("s"), Term::var(0)))),
      Term::app(Term::app(Term::sym("cons"), Term::sym("0")),
                Term::sym("nil")));
  CHECK(term_eq(t, want));
  CHECK_THROWS_AS(parse_term("s 0) extra", sig), SyntaxError);
  CHECK_THROWS_AS(parse_term("s y", sig), SyntaxError);  // unknown name
  CHECK_THROWS_AS(parse_term("", sig), SyntaxError);
}

TEST_CASE("print_term parenthesization") {
  SimpleType nat = bt("nat");
  Term s = Term::sym("s");
  Term zero = Term::sym("0");
  CHECK(print_term(Term::app(s, Term::app(s, zero))) == "s (s 0)");
  CHECK(print_term(Term::app(Term::app(Term::sym("cons"), zero),
                             Term::sym("nil"))) == "cons 0 nil");
  CHECK(print_term(Term::lam(nat, Term::var(0))) == "\\v0:nat. v0");
  CHECK(print_term(Term::app(Term::lam(nat, Term::var(0)), zero)) ==
        "(\\v0:nat. v0) 0");
  CHECK(print_term(Term::app(Term::sym("map"),
                             Term::lam(nat, Term::app(s, Term::var(0))))) ==
        "map (\\v0:nat. s v0)");
  CHECK(print_term(Term::lam(arrow(nat, nat), Term::lam(nat, Term::var(1)))) ==
        "\\v0:nat -> nat. \\v1:nat. v0");
}

TEST_CASE("printed binders avoid used names") {
  // The symbol v0 occurs in the body, so the binder skips to v1.
  Term t = Term::lam(bt("nat"), Term::sym("v0"));
  CHECK(print_term(t) == "\\v1:nat. v0");
  // Free variable names are reserved too.
  Term u = Term::lam(bt("nat"), Term::var(1));
  CHECK(print_term(u, {"v0"}) == "\\v1:nat. v0");
}

TEST_CASE("print_term needs a name for every free variable") {
  CHECK_THROWS_AS(print_term(Term::var(0)), Error);
  CHECK(print_term(Term::var(0), {"x"}) == "x");
}

TEST_CASE("printed terms parse back") {
  Signature sig = testutil::map_signature();
  testutil::TermGen gen(sig, 20260814);
  int round_trips = 0;
  for (int i = 0; i < 200; ++i) {
    auto t = gen.closed_term(10);
    if (!t) continue;
    Term back = parse_term(print_term(*t), sig);
    CHECK(term_eq(back, *t));
    ++round_trips;
  }
  CHECK(round_trips > 100);
}
