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

#include "hoterm/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace hoterm {

namespace {

// Coefficient vector layout of the template family for one symbol:
//   [constant]
//   [linear coefficient per base argument]
//   per function argument j (when fun args are allowed):
//     [coefficient of F_j(L_j)]
//     per argument slot of F_j: [constant of L, coefficient per base arg]
//   at degree 2:
//     [coefficient per unordered pair of base arguments, squares included]
//     [coefficient of x_b * F_j(L_j) per function argument and base arg]
// Enumeration is lexicographic over this vector, earlier entries more
// significant, each in 0..max_coeff.
struct TemplateShape {
  PolyContext ctx;
  std::vector<std::size_t> base_pos;
  std::vector<std::size_t> fun_pos;
  unsigned degree = 2;
  bool fun_args = true;
  unsigned max_coeff = 3;
  std::vector<bool> required;  // coordinates that must be >= 1
  std::size_t coords = 0;

  TemplateShape(const PolyContext& context, const SearchConfig& cfg)
      : ctx(context),
        degree(cfg.degree),
        fun_args(cfg.allow_fun_args),
        max_coeff(cfg.max_coeff) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      (ctx[i].is_fun() ? fun_pos : base_pos).push_back(i);
    }
    coords = 1 + base_pos.size();
    std::vector<std::size_t> fun_coeff_at;
    if (fun_args) {
      for (std::size_t j : fun_pos) {
        fun_coeff_at.push_back(coords);
        coords += 1 + ctx[j].arity * (1 + base_pos.size());
      }
    }
    if (degree >= 2) {
      coords += base_pos.size() * (base_pos.size() + 1) / 2;
      if (fun_args) coords += fun_pos.size() * base_pos.size();
    }
    required.assign(coords, false);
    for (std::size_t b = 0; b < base_pos.size(); ++b) required[1 + b] = true;
    for (std::size_t c : fun_coeff_at) required[c] = true;
  }

  // No strongly monotone candidate exists at all?
  bool empty_family() const {
    if (!fun_args && !fun_pos.empty()) return true;
    if (max_coeff == 0) {
      for (bool r : required) {
        if (r) return true;  // needs >= 1 but only 0 is available
      }
    }
    return false;
  }

  HOPoly build(const std::vector<unsigned>& v) const {
    std::vector<Monomial> ms;
    std::size_t at = 0;
    if (v[at]) ms.push_back(Monomial{v[at], {}});
    ++at;
    for (std::size_t b : base_pos) {
      if (v[at]) ms.push_back(Monomial{v[at], {Factor{b, {}}}});
      ++at;
    }
    std::vector<Factor> fun_factor;  // F_j(L_j) per function argument
    if (fun_args) {
      for (std::size_t j : fun_pos) {
        unsigned d = v[at++];
        std::vector<HOPoly> slots;
        for (std::size_t r = 0; r < ctx[j].arity; ++r) {
          std::vector<Monomial> lin;
          unsigned e0 = v[at++];
          if (e0) lin.push_back(Monomial{e0, {}});
          for (std::size_t b : base_pos) {
            unsigned eb = v[at++];
            if (eb) lin.push_back(Monomial{eb, {Factor{b, {}}}});
          }
          slots.push_back(normalize_poly(ctx, std::move(lin)));
        }
        Factor f{j, std::move(slots)};
        if (d) ms.push_back(Monomial{d, {f}});
        fun_factor.push_back(std::move(f));
      }
    }
    if (degree >= 2) {
      for (std::size_t i = 0; i < base_pos.size(); ++i) {
        for (std::size_t k = i; k < base_pos.size(); ++k) {
          unsigned c = v[at++];
          if (c) {
            ms.push_back(Monomial{
                c, {Factor{base_pos[i], {}}, Factor{base_pos[k], {}}}});
          }
        }
      }
      if (fun_args) {
        for (std::size_t jj = 0; jj < fun_pos.size(); ++jj) {
          for (std::size_t b : base_pos) {
            unsigned g = v[at++];
            if (g) {
              ms.push_back(Monomial{g, {Factor{b, {}}, fun_factor[jj]}});
            }
          }
        }
      }
    }
    return normalize_poly(ctx, std::move(ms));
  }
};

// Enumerates exactly the strongly monotone coefficient vectors in
// lexicographic order.
class CandidateEnum {
 public:
  explicit CandidateEnum(const TemplateShape& shape)
      : shape_(&shape), fresh_(true), done_(shape.empty_family()) {
    v_.assign(shape.coords, 0);
  }

  const std::vector<unsigned>& current() const { return v_; }

  bool next() {
    if (done_) return false;
    if (fresh_) {
      fresh_ = false;
      if (fix_up()) return true;
      done_ = true;
      return false;
    }
    std::size_t i = v_.size();
    while (i > 0) {
      --i;
      if (v_[i] < shape_->max_coeff) {
        ++v_[i];
        for (std::size_t k = i + 1; k < v_.size(); ++k) v_[k] = 0;
        if (fix_up()) return true;
        done_ = true;
        return false;
      }
    }
    done_ = true;
    return false;
  }

 private:
  // Raise the vector to the least strongly monotone one >= the current
  // value: bump the first violated required coordinate to 1 and reset the
  // tail to its least passing values.
  bool fix_up() {
    if (shape_->empty_family()) return false;
    for (std::size_t p = 0; p < v_.size(); ++p) {
      if (shape_->required[p] && v_[p] == 0) {
        if (shape_->max_coeff == 0) return false;
        v_[p] = 1;
        for (std::size_t q = p + 1; q < v_.size(); ++q) {
          v_[q] = shape_->required[q] ? 1 : 0;
        }
        return true;
      }
    }
    return true;
  }

  const TemplateShape* shape_;
  std::vector<unsigned> v_;
  bool fresh_;
  bool done_;
};

std::set<std::string> symbols_of_term(const Term& t) {
  std::set<std::string> out;
  switch (t.kind()) {
    case TermKind::Sym:
      out.insert(t.sym_name());
      break;
    case TermKind::Var:
      break;
    case TermKind::Lam:
      out = symbols_of_term(t.lam_body());
      break;
    case TermKind::App: {
      out = symbols_of_term(t.app_fn());
      auto rhs = symbols_of_term(t.app_arg());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
  }
  return out;
}

struct Shared {
  std::atomic<bool> expired{false};
  std::atomic<std::size_t> next_top{0};
  std::atomic<std::size_t> best_top{SIZE_MAX};
  std::mutex mu;
  std::vector<std::vector<std::vector<unsigned>>> solutions;  // guarded by mu
  std::atomic<unsigned long long> candidates{0};
  std::atomic<unsigned long long> rule_checks{0};
  std::set<std::size_t> hard_rules;  // guarded by mu
};

int lex_cmp(const std::vector<std::vector<unsigned>>& a,
            const std::vector<std::vector<unsigned>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

struct Searcher {
  const Afs& afs;
  const std::vector<std::string>& searched;
  const std::vector<TemplateShape>& shapes;
  const std::vector<std::vector<std::size_t>>& rules_at_level;
  std::chrono::steady_clock::time_point deadline;
  Shared& shared;
  std::size_t worker;
  std::size_t stride;

  Algebra current;
  std::vector<std::vector<unsigned>> assignment;
  std::set<std::size_t> local_hard;
  unsigned long long local_candidates = 0;
  unsigned long long local_checks = 0;
  std::size_t top_ordinal = SIZE_MAX;

  bool out_of_time() {
    if (shared.expired.load(std::memory_order_relaxed)) return true;
    if (std::chrono::steady_clock::now() >= deadline) {
      shared.expired.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  bool level_ok(std::size_t level) {
    for (std::size_t r : rules_at_level[level]) {
      ++local_checks;
      if (check_rule_oriented(current, afs.sig, afs.rules[r]) !=
          Orientation::Oriented) {
        local_hard.insert(r);
        return false;
      }
    }
    return true;
  }

  // Returns true when this subtree produced a solution (the subtree's
  // lexicographically least).
  bool dfs(std::size_t level) {
    CandidateEnum en(shapes[level]);
    while (en.next()) {
      if (out_of_time()) return false;
      if (top_ordinal > shared.best_top.load(std::memory_order_relaxed)) {
        return false;  // a lexicographically smaller subtree already won
      }
      ++local_candidates;
      assignment[level] = en.current();
      current.interp[searched[level]] = shapes[level].build(en.current());
      if (!level_ok(level)) continue;
      if (level + 1 == searched.size()) {
        record_solution();
        return true;
      }
      if (dfs(level + 1)) return true;
    }
    return false;
  }

  void record_solution() {
    std::lock_guard<std::mutex> lock(shared.mu);
    shared.solutions.push_back(assignment);
    std::size_t cur = shared.best_top.load(std::memory_order_relaxed);
    if (top_ordinal < cur) {
      shared.best_top.store(top_ordinal, std::memory_order_relaxed);
    }
  }

  void run() {
    CandidateEnum top(shapes[0]);
    std::size_t ordinal = 0;
    while (top.next()) {
      if (out_of_time()) break;
      if (ordinal % stride == worker) {
        top_ordinal = ordinal;
        if (top_ordinal > shared.best_top.load(std::memory_order_relaxed)) {
          break;
        }
        ++local_candidates;
        assignment[0] = top.current();
        current.interp[searched[0]] = shapes[0].build(top.current());
        if (level_ok(0)) {
          if (searched.size() == 1) {
            record_solution();
            break;
          }
          if (dfs(1)) break;
        }
      }
      ++ordinal;
    }
    shared.candidates.fetch_add(local_candidates, std::memory_order_relaxed);
    shared.rule_checks.fetch_add(local_checks, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(shared.mu);
    shared.hard_rules.insert(local_hard.begin(), local_hard.end());
  }
};

std::string expected_params(const PolyContext& ctx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) os << ", ";
    os << (ctx[i].is_fun() ? 'F' : 'x') << i;
  }
  return os.str();
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

Certificate make_certificate(const Afs& afs, const Algebra& alg,
                             const SearchConfig& cfg) {
  Certificate cert;
  cert.degree = cfg.degree;
  cert.max_coeff = cfg.max_coeff;
  cert.tool = "hoterm 0.1.0";
  for (const auto& f : afs.sig.symbols()) {
    PolyContext ctx = symbol_context(afs.sig.symbol_type(f));
    cert.entries.push_back(Certificate::Entry{
        f, expected_params(ctx), poly_to_string(alg.of(f))});
  }
  return cert;
}

}  // namespace

std::vector<HOPoly> templates_for_symbol(const Signature& sig,
                                         const std::string& symbol,
                                         const SearchConfig& cfg) {
  TemplateShape shape(symbol_context(sig.symbol_type(symbol)), cfg);
  std::vector<HOPoly> out;
  CandidateEnum en(shape);
  while (en.next()) out.push_back(shape.build(en.current()));
  return out;
}

HOPoly minimal_interpretation(const Signature& sig,
                              const std::string& symbol) {
  PolyContext ctx = symbol_context(sig.symbol_type(symbol));
  std::vector<Monomial> base_sum;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!ctx[i].is_fun()) base_sum.push_back(Monomial{1, {Factor{i, {}}}});
  }
  HOPoly sum = normalize_poly(ctx, base_sum);
  HOPoly out = sum;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!ctx[i].is_fun()) continue;
    std::vector<HOPoly> slots(ctx[i].arity, sum);
    out = add(out, fun_var_poly(ctx, i, std::move(slots)));
  }
  return out;
}

SearchOutcome find_interpretation(const Afs& afs, const SearchConfig& cfg) {
  if (!check_afs(afs).empty()) {
    throw Error("find_interpretation: system fails check_afs");
  }
  SearchOutcome outcome;

  std::set<std::string> in_rules;
  for (const auto& rule : afs.rules) {
    auto l = symbols_of_term(rule.lhs);
    auto r = symbols_of_term(rule.rhs);
    in_rules.insert(l.begin(), l.end());
    in_rules.insert(r.begin(), r.end());
  }

  Algebra pinned;
  std::vector<std::string> searched;
  std::map<std::string, std::size_t> ordinal;
  for (const auto& f : afs.sig.symbols()) {
    if (in_rules.count(f)) {
      ordinal[f] = searched.size();
      searched.push_back(f);
    } else {
      pinned.interp[f] = minimal_interpretation(afs.sig, f);
    }
  }

  std::vector<TemplateShape> shapes;
  shapes.reserve(searched.size());
  for (const auto& f : searched) {
    shapes.emplace_back(symbol_context(afs.sig.symbol_type(f)), cfg);
  }

  // A symbol without any strongly monotone candidate dooms every branch.
  for (const auto& shape : shapes) {
    if (shape.empty_family()) {
      outcome.failure = SearchFailure::Exhausted;
      return outcome;
    }
  }

  std::vector<std::vector<std::size_t>> rules_at_level(searched.size());
  std::vector<std::size_t> fixed_rules;
  for (std::size_t r = 0; r < afs.rules.size(); ++r) {
    auto syms = symbols_of_term(afs.rules[r].lhs);
    auto rs = symbols_of_term(afs.rules[r].rhs);
    syms.insert(rs.begin(), rs.end());
    std::size_t level = SIZE_MAX;
    for (const auto& s : syms) {
      auto it = ordinal.find(s);
      if (it != ordinal.end()) {
        level = level == SIZE_MAX ? it->second : std::max(level, it->second);
      }
    }
    if (level == SIZE_MAX) {
      fixed_rules.push_back(r);
    } else {
      rules_at_level[level].push_back(r);
    }
  }

  // Rules over pinned symbols only cannot be influenced by the search.
  for (std::size_t r : fixed_rules) {
    ++outcome.stats.rule_checks;
    if (check_rule_oriented(pinned, afs.sig, afs.rules[r]) !=
        Orientation::Oriented) {
      outcome.hard_rules.push_back(r);
    }
  }
  if (!outcome.hard_rules.empty()) {
    outcome.failure = SearchFailure::Exhausted;
    return outcome;
  }

  if (searched.empty()) {
    Algebra alg = pinned;
    outcome.certificate = make_certificate(afs, alg, cfg);
    return outcome;
  }

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(cfg.timeout_seconds));

  std::size_t workers = cfg.parallelism
                            ? cfg.parallelism
                            : std::max(1u, std::thread::hardware_concurrency());

  Shared shared;
  auto make_searcher = [&](std::size_t w) {
    Searcher s{afs,    searched, shapes, rules_at_level,
               deadline, shared,   w,      workers};
    s.current = pinned;
    s.assignment.resize(searched.size());
    return s;
  };

  if (workers == 1) {
    Searcher s = make_searcher(0);
    s.run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { make_searcher(w).run(); });
    }
    for (auto& t : pool) t.join();
  }

  outcome.stats.candidates_tried += shared.candidates.load();
  outcome.stats.rule_checks += shared.rule_checks.load();
  outcome.hard_rules.assign(shared.hard_rules.begin(),
                            shared.hard_rules.end());

  if (!shared.solutions.empty()) {
    const std::vector<std::vector<unsigned>>* best = &shared.solutions[0];
    for (const auto& s : shared.solutions) {
      if (lex_cmp(s, *best) < 0) best = &s;
    }
    Algebra alg = pinned;
    for (std::size_t i = 0; i < searched.size(); ++i) {
      alg.interp[searched[i]] = shapes[i].build((*best)[i]);
    }
    outcome.certificate = make_certificate(afs, alg, cfg);
    return outcome;
  }

  outcome.failure = shared.expired.load() ? SearchFailure::Timeout
                                          : SearchFailure::Exhausted;
  return outcome;
}

std::string certificate_to_string(const Certificate& cert) {
  std::ostringstream os;
  os << "CERT v1\n";
  if (!cert.tool.empty()) os << "tool " << cert.tool << "\n";
  os << "config degree=" << cert.degree << " max_coeff=" << cert.max_coeff
     << "\n";
  for (const auto& e : cert.entries) {
    os << "symbol " << e.symbol;
    if (!e.params_text.empty()) os << "(" << e.params_text << ")";
    os << " = " << e.poly_text << "\n";
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  Certificate cert;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;
  bool saw_config = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "CERT v1") {
        throw SyntaxError(lineno, 1, "expected 'CERT v1'");
      }
      saw_header = true;
      continue;
    }
    if (line.rfind("tool ", 0) == 0) {
      cert.tool = trim(line.substr(5));
      continue;
    }
    if (line.rfind("config ", 0) == 0) {
      unsigned degree = 0, max_coeff = 0;
      if (std::sscanf(line.c_str(), "config degree=%u max_coeff=%u", &degree,
                      &max_coeff) != 2) {
        throw SyntaxError(lineno, 1, "bad config line");
      }
      cert.degree = degree;
      cert.max_coeff = max_coeff;
      saw_config = true;
      continue;
    }
    if (line.rfind("symbol ", 0) == 0) {
      std::string rest = line.substr(7);
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        throw SyntaxError(lineno, 1, "symbol line needs '='");
      }
      std::string head = trim(rest.substr(0, eq));
      std::string poly = trim(rest.substr(eq + 1));
      if (poly.empty()) throw SyntaxError(lineno, 1, "empty polynomial");
      Certificate::Entry e;
      std::size_t paren = head.find('(');
      if (paren == std::string::npos) {
        e.symbol = head;
      } else {
        if (head.back() != ')') {
          throw SyntaxError(lineno, 1, "unbalanced parameter list");
        }
        e.symbol = trim(head.substr(0, paren));
        e.params_text = trim(head.substr(paren + 1,
                                         head.size() - paren - 2));
      }
      if (e.symbol.empty()) throw SyntaxError(lineno, 1, "missing symbol");
      e.poly_text = poly;
      cert.entries.push_back(std::move(e));
      continue;
    }
    throw SyntaxError(lineno, 1, "unrecognized line: " + line);
  }
  if (!saw_header) throw SyntaxError(1, 1, "empty certificate");
  if (!saw_config) throw SyntaxError(lineno, 1, "missing config line");
  return cert;
}

Algebra certificate_algebra(const Signature& sig, const Certificate& cert) {
  Algebra alg;
  for (const auto& e : cert.entries) {
    if (!sig.has_symbol(e.symbol)) {
      throw Error("certificate names unknown symbol " + e.symbol);
    }
    PolyContext ctx = symbol_context(sig.symbol_type(e.symbol));
    alg.interp[e.symbol] = parse_poly(e.poly_text, ctx);
  }
  return alg;
}

VerifyResult verify_certificate(const Afs& afs, const std::string& cert_text) {
  Certificate cert;
  try {
    cert = parse_certificate(cert_text);
  } catch (const SyntaxError& e) {
    return VerifyResult{VerifyStatus::ParseError, e.what()};
  }

  std::set<std::string> seen;
  for (const auto& e : cert.entries) {
    if (!afs.sig.has_symbol(e.symbol)) {
      return VerifyResult{VerifyStatus::SignatureMismatch,
                          "unknown symbol " + e.symbol};
    }
    if (!seen.insert(e.symbol).second) {
      return VerifyResult{VerifyStatus::SignatureMismatch,
                          "duplicate symbol " + e.symbol};
    }
    PolyContext ctx = symbol_context(afs.sig.symbol_type(e.symbol));
    if (strip_spaces(e.params_text) != strip_spaces(expected_params(ctx))) {
      return VerifyResult{VerifyStatus::SignatureMismatch,
                          "parameter list of " + e.symbol +
                              " does not match its type"};
    }
  }
  for (const auto& f : afs.sig.symbols()) {
    if (!seen.count(f)) {
      return VerifyResult{VerifyStatus::SignatureMismatch,
                          "no interpretation for " + f};
    }
  }

  Algebra alg;
  try {
    alg = certificate_algebra(afs.sig, cert);
  } catch (const PolyError& e) {
    return VerifyResult{VerifyStatus::ParseError, e.what()};
  }

  std::vector<std::string> why;
  if (!algebra_strongly_monotone(afs.sig, alg, &why)) {
    return VerifyResult{VerifyStatus::NotStronglyMonotone,
                        why.empty() ? "" : why.front()};
  }

  for (std::size_t r = 0; r < afs.rules.size(); ++r) {
    if (check_rule_oriented(alg, afs.sig, afs.rules[r]) !=
        Orientation::Oriented) {
      return VerifyResult{VerifyStatus::RuleNotOriented,
                          "rule " + std::to_string(r) + " is not oriented"};
    }
  }
  return VerifyResult{VerifyStatus::Accept, ""};
}

}  // namespace hoterm
