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

#include "hoterm/parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>

namespace hoterm {

namespace {

enum class Tok { Ident, Colon, Dot, Lambda, LParen, RParen, Arrow, DArrow,
                 Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s) {
    out.push_back(Token{k, std::move(s), line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      push(Tok::Newline, "\n");
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ident_char(c)) {
      std::size_t start = i;
      int start_col = col;
      while (i < text.size() && ident_char(text[i])) {
        ++i;
        ++col;
      }
      out.push_back(Token{Tok::Ident, text.substr(start, i - start), line,
                          start_col});
      continue;
    }
    switch (c) {
      case ':': push(Tok::Colon, ":"); ++i; ++col; continue;
      case '.': push(Tok::Dot, "."); ++i; ++col; continue;
      case '\\': push(Tok::Lambda, "\\"); ++i; ++col; continue;
      case '(': push(Tok::LParen, "("); ++i; ++col; continue;
      case ')': push(Tok::RParen, ")"); ++i; ++col; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::Arrow, "->");
          i += 2;
          col += 2;
          continue;
        }
        throw SyntaxError(line, col, "stray '-'");
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::DArrow, "=>");
          i += 2;
          col += 2;
          continue;
        }
        throw SyntaxError(line, col, "stray '='");
      default:
        throw SyntaxError(line, col,
                          std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

// Named surface terms, converted to De Bruijn after parsing.
struct NTerm {
  enum Kind { Name, Lam, App } kind;
  std::string name;               // Name / Lam binder
  SimpleType ann;                 // Lam
  std::unique_ptr<NTerm> a, b;    // Lam body in a; App fn in a, arg in b
  int line, col;
  NTerm() : ann(SimpleType::base("")) {}
};

struct Parser {
  const std::vector<Token>& toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw SyntaxError(t.line, t.col, msg);
  }

  bool eat(Tok k) {
    if (peek().kind != k) return false;
    ++at;
    return true;
  }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what);
    return take();
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++at;
  }

  SimpleType type() {
    SimpleType left = type_atom();
    if (eat(Tok::Arrow)) return SimpleType::fun(left, type());
    return left;
  }

  SimpleType type_atom() {
    if (eat(Tok::LParen)) {
      SimpleType t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token t = expect(Tok::Ident, "a type name");
    return SimpleType::base(t.text);
  }

  std::unique_ptr<NTerm> term() {
    if (peek().kind == Tok::Lambda) {
      Token lam = take();
      Token binder = expect(Tok::Ident, "a binder name");
      expect(Tok::Colon, "':'");
      SimpleType ann = type();
      expect(Tok::Dot, "'.'");
      auto body = term();
      auto out = std::make_unique<NTerm>();
      out->kind = NTerm::Lam;
      out->name = binder.text;
      out->ann = ann;
      out->a = std::move(body);
      out->line = lam.line;
      out->col = lam.col;
      return out;
    }
    auto fn = atom();
    if (!fn) fail(peek(), "expected a term");
    while (true) {
      auto arg = atom();
      if (!arg) break;
      auto app = std::make_unique<NTerm>();
      app->kind = NTerm::App;
      app->line = fn->line;
      app->col = fn->col;
      app->a = std::move(fn);
      app->b = std::move(arg);
      fn = std::move(app);
    }
    return fn;
  }

  std::unique_ptr<NTerm> atom() {
    if (peek().kind == Tok::Ident) {
      Token t = take();
      auto out = std::make_unique<NTerm>();
      out->kind = NTerm::Name;
      out->name = t.text;
      out->line = t.line;
      out->col = t.col;
      return out;
    }
    if (peek().kind == Tok::LParen) {
      take();
      auto t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    return nullptr;
  }
};

// Conversion context: rule variables get ranks in order of first use.
struct ToDeBruijn {
  const Signature& sig;
  const std::map<std::string, SimpleType>* rule_var_types;  // null: none
  std::vector<std::string>* rule_var_order;                 // rank -> name
  std::vector<std::string> binders;                         // innermost last

  Term convert(const NTerm& t) {
    switch (t.kind) {
      case NTerm::Name: {
        for (std::size_t i = binders.size(); i > 0; --i) {
          if (binders[i - 1] == t.name) {
            return Term::var(binders.size() - i);
          }
        }
        if (rule_var_types && rule_var_types->count(t.name)) {
          std::size_t rank = rule_var_order->size();
          for (std::size_t i = 0; i < rule_var_order->size(); ++i) {
            if ((*rule_var_order)[i] == t.name) {
              rank = i;
              break;
            }
          }
          if (rank == rule_var_order->size()) {
            rule_var_order->push_back(t.name);
          }
          return Term::var(binders.size() + rank);
        }
        if (sig.has_symbol(t.name)) return Term::sym(t.name);
        throw SyntaxError(t.line, t.col, "unknown name " + t.name);
      }
      case NTerm::Lam: {
        binders.push_back(t.name);
        Term body = convert(*t.a);
        binders.pop_back();
        return Term::lam(t.ann, body);
      }
      case NTerm::App: {
        // Sequence fn before arg so first-occurrence ranks are left-to-right.
        Term fn = convert(*t.a);
        Term arg = convert(*t.b);
        return Term::app(std::move(fn), std::move(arg));
      }
    }
    throw Error("convert: bad kind");
  }
};

void collect_bases(const SimpleType& t, Signature& sig) {
  if (t.is_base()) {
    sig.add_base_type(t.base_name());
    return;
  }
  collect_bases(t.dom(), sig);
  collect_bases(t.cod(), sig);
}

}  // namespace

AfsFile parse_afs(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks};
  AfsFile file;
  Signature& sig = file.afs.sig;

  p.skip_newlines();
  Token sec = p.expect(Tok::Ident, "'SIG'");
  if (sec.text != "SIG") p.fail(sec, "expected 'SIG'");
  p.skip_newlines();

  while (p.peek().kind == Tok::Ident && p.peek().text != "VARS") {
    Token name = p.take();
    p.expect(Tok::Colon, "':'");
    SimpleType ty = p.type();
    if (!sig.add_symbol(name.text, ty)) {
      p.fail(name, "duplicate symbol " + name.text);
    }
    collect_bases(ty, sig);
    if (p.peek().kind != Tok::End) p.expect(Tok::Newline, "end of line");
    p.skip_newlines();
  }

  std::map<std::string, SimpleType> var_types;
  Token vsec = p.expect(Tok::Ident, "'VARS'");
  if (vsec.text != "VARS") p.fail(vsec, "expected 'VARS'");
  p.skip_newlines();
  while (p.peek().kind == Tok::Ident && p.peek().text != "RULES") {
    Token name = p.take();
    p.expect(Tok::Colon, "':'");
    SimpleType ty = p.type();
    if (sig.has_symbol(name.text)) {
      p.fail(name, "variable " + name.text + " collides with a symbol");
    }
    if (!var_types.emplace(name.text, ty).second) {
      p.fail(name, "duplicate variable " + name.text);
    }
    file.vars.emplace_back(name.text, ty);
    collect_bases(ty, sig);
    if (p.peek().kind != Tok::End) p.expect(Tok::Newline, "end of line");
    p.skip_newlines();
  }

  Token rsec = p.expect(Tok::Ident, "'RULES'");
  if (rsec.text != "RULES") p.fail(rsec, "expected 'RULES'");
  p.skip_newlines();

  std::vector<int> rule_lines;
  while (p.peek().kind != Tok::End) {
    int line = p.peek().line;
    auto lhs_n = p.term();
    p.expect(Tok::DArrow, "'=>'");
    auto rhs_n = p.term();
    if (p.peek().kind != Tok::End) p.expect(Tok::Newline, "end of line");
    p.skip_newlines();

    RewriteRule rule{VarEnv{}, Term::sym("?"), Term::sym("?"),
                     SimpleType::base("?"), {}};
    ToDeBruijn conv{sig, &var_types, &rule.var_names, {}};
    rule.lhs = conv.convert(*lhs_n);
    rule.rhs = conv.convert(*rhs_n);
    for (const auto& v : rule.var_names) rule.env.push_back(var_types.at(v));
    try {
      rule.type = infer(sig, rule.env, rule.lhs);
    } catch (const TypeError&) {
      // keep the placeholder; check_afs reports the details
    }
    file.afs.rules.push_back(std::move(rule));
    rule_lines.push_back(line);
  }

  auto violations = check_afs(file.afs);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "ill-formed system:";
    for (const auto& v : violations) {
      os << "\n  ";
      if (v.rule_index != SIZE_MAX && v.rule_index < rule_lines.size()) {
        os << "line " << rule_lines[v.rule_index] << ": ";
      }
      os << v.message;
    }
    throw AfsError(os.str(), std::move(violations));
  }
  return file;
}

Term parse_term(const std::string& text, const Signature& sig) {
  auto toks = lex(text);
  Parser p{toks};
  p.skip_newlines();
  auto nt = p.term();
  p.skip_newlines();
  if (p.peek().kind != Tok::End) p.fail(p.peek(), "trailing input");
  ToDeBruijn conv{sig, nullptr, nullptr, {}};
  return conv.convert(*nt);
}

}  // namespace hoterm
