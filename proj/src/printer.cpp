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

#include "hoterm/printer.hpp"

#include <set>
#include <sstream>

namespace hoterm {

namespace {

enum class Ctx { Top, AppFn, AppArg };

void collect_names(const Term& t, std::set<std::string>& used) {
  switch (t.kind()) {
    case TermKind::Sym:
      used.insert(t.sym_name());
      return;
    case TermKind::Var:
      return;
    case TermKind::Lam:
      collect_names(t.lam_body(), used);
      return;
    case TermKind::App:
      collect_names(t.app_fn(), used);
      collect_names(t.app_arg(), used);
      return;
  }
}

struct TermPrinter {
  const std::vector<std::string>& free_names;
  std::set<std::string> used;
  std::vector<std::string> binders;  // innermost last
  std::size_t fresh_counter = 0;

  std::string fresh_name() {
    while (true) {
      std::string name = "v" + std::to_string(fresh_counter++);
      if (!used.count(name)) return name;
    }
  }

  void print(std::ostream& os, const Term& t, Ctx ctx) {
    switch (t.kind()) {
      case TermKind::Sym:
        os << t.sym_name();
        return;
      case TermKind::Var: {
        std::size_t i = t.var_index();
        if (i < binders.size()) {
          os << binders[binders.size() - 1 - i];
          return;
        }
        std::size_t j = i - binders.size();
        if (j >= free_names.size()) {
          throw Error("print_term: no name for free variable " +
                      std::to_string(j));
        }
        os << free_names[j];
        return;
      }
      case TermKind::Lam: {
        bool parens = ctx != Ctx::Top;
        if (parens) os << '(';
        std::string name = fresh_name();
        used.insert(name);
        os << '\\' << name << ':' << t.lam_dom().to_string() << ". ";
        binders.push_back(name);
        print(os, t.lam_body(), Ctx::Top);
        binders.pop_back();
        used.erase(name);
        if (parens) os << ')';
        return;
      }
      case TermKind::App: {
        bool parens = ctx == Ctx::AppArg;
        if (parens) os << '(';
        print(os, t.app_fn(), Ctx::AppFn);
        os << ' ';
        print(os, t.app_arg(), Ctx::AppArg);
        if (parens) os << ')';
        return;
      }
    }
  }
};

}  // namespace

std::string print_term(const Term& t,
                       const std::vector<std::string>& free_names) {
  TermPrinter printer{free_names, {}, {}, 0};
  collect_names(t, printer.used);
  for (const auto& n : free_names) printer.used.insert(n);
  std::ostringstream os;
  printer.print(os, t, Ctx::Top);
  return os.str();
}

std::string print_afs(const AfsFile& file) {
  std::ostringstream os;
  os << "SIG\n";
  for (const auto& f : file.afs.sig.symbols()) {
    os << "  " << f << " : " << file.afs.sig.symbol_type(f).to_string()
       << "\n";
  }
  os << "VARS\n";
  for (const auto& [name, ty] : file.vars) {
    os << "  " << name << " : " << ty.to_string() << "\n";
  }
  os << "RULES\n";
  for (const auto& rule : file.afs.rules) {
    os << "  " << print_term(rule.lhs, rule.var_names) << " => "
       << print_term(rule.rhs, rule.var_names) << "\n";
  }
  return os.str();
}

}  // namespace hoterm
