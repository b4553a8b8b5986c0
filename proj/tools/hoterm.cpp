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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hoterm/parser.hpp"
#include "hoterm/printer.hpp"
#include "hoterm/search.hpp"

namespace {

constexpr const char* kVersion = "hoterm 0.1.0";

// Exit codes: 0 = YES / ACCEPT / success, 1 = MAYBE / REJECT / fuel
// exhausted, 2 = unusable input.
constexpr int kExitYes = 0;
constexpr int kExitMaybe = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hoterm::Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_check(const std::string& path, const hoterm::SearchConfig& cfg,
              const std::string& cert_out) {
  hoterm::AfsFile file = hoterm::parse_afs(read_file(path));
  hoterm::SearchOutcome outcome =
      hoterm::find_interpretation(file.afs, cfg);
  if (outcome.certificate) {
    std::string cert = hoterm::certificate_to_string(*outcome.certificate);
    std::cout << "YES\n" << cert;
    if (!cert_out.empty()) {
      std::ofstream out(cert_out, std::ios::binary);
      if (!out) throw hoterm::Error("cannot write " + cert_out);
      out << cert;
    }
    return kExitYes;
  }
  std::cout << "MAYBE\n";
  std::cout << (outcome.failure == hoterm::SearchFailure::Timeout
                    ? "search timed out"
                    : "search space exhausted")
            << " after " << outcome.stats.candidates_tried
            << " candidates and " << outcome.stats.rule_checks
            << " rule checks\n";
  for (std::size_t r : outcome.hard_rules) {
    const auto& rule = file.afs.rules[r];
    std::cout << "unoriented rule " << r << ": "
              << hoterm::print_term(rule.lhs, rule.var_names) << " => "
              << hoterm::print_term(rule.rhs, rule.var_names) << "\n";
  }
  return kExitMaybe;
}

int run_verify(const std::string& path, const std::string& cert_path) {
  hoterm::AfsFile file = hoterm::parse_afs(read_file(path));
  hoterm::VerifyResult res =
      hoterm::verify_certificate(file.afs, read_file(cert_path));
  if (res.accepted()) {
    std::cout << "ACCEPT\n";
    return kExitYes;
  }
  const char* kind = "";
  switch (res.status) {
    case hoterm::VerifyStatus::ParseError: kind = "parse error"; break;
    case hoterm::VerifyStatus::SignatureMismatch:
      kind = "signature mismatch";
      break;
    case hoterm::VerifyStatus::NotStronglyMonotone:
      kind = "not strongly monotone";
      break;
    case hoterm::VerifyStatus::RuleNotOriented:
      kind = "rule not oriented";
      break;
    case hoterm::VerifyStatus::Accept: break;
  }
  std::cout << "REJECT " << kind;
  if (!res.detail.empty()) std::cout << ": " << res.detail;
  std::cout << "\n";
  return kExitMaybe;
}

int run_normalize(const std::string& path, const std::string& term_text,
                  std::size_t fuel) {
  hoterm::AfsFile file = hoterm::parse_afs(read_file(path));
  hoterm::Term t = hoterm::parse_term(term_text, file.afs.sig);
  hoterm::infer(file.afs.sig, {}, t);  // reject ill-typed input up front
  hoterm::NormalizeResult res = hoterm::normalize(file.afs, t, fuel);
  if (res.fuel_exhausted) {
    std::cout << "FUEL EXHAUSTED\n";
  } else {
    std::cout << hoterm::print_term(res.term) << "\n";
  }
  std::cout << "steps: " << res.trace.size() << "\n";
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const auto& step = res.trace[i];
    std::cout << "  [" << i << "] ";
    if (std::holds_alternative<hoterm::RuleStep>(step.kind)) {
      std::cout << "rule "
                << std::get<hoterm::RuleStep>(step.kind).rule_index;
    } else {
      std::cout << "beta";
    }
    std::cout << " at " << hoterm::path_to_string(step.position) << "\n";
  }
  if (res.fuel_exhausted) {
    std::cout << "stuck at: " << hoterm::print_term(res.term) << "\n";
    return kExitMaybe;
  }
  return kExitYes;
}

int run_typecheck(const std::string& path) {
  hoterm::AfsFile file = hoterm::parse_afs(read_file(path));
  std::cout << "ok\n";
  for (const auto& f : file.afs.sig.symbols()) {
    std::cout << "symbol " << f << " : "
              << file.afs.sig.symbol_type(f).to_string() << "\n";
  }
  for (std::size_t r = 0; r < file.afs.rules.size(); ++r) {
    std::cout << "rule " << r << " : " << file.afs.rules[r].type.to_string()
              << "\n";
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Termination checking for higher-order rewrite systems "
               "via polynomial interpretations"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string file;
  std::string cert_out;
  std::string cert_in;
  std::string term_text;
  std::size_t fuel = 10000;
  hoterm::SearchConfig cfg;
  bool no_fun_args = false;

  CLI::App* check = app.add_subcommand("check", "Search for a termination "
                                                "certificate");
  check->add_option("file", file, "system file")->required();
  check->add_option("--degree", cfg.degree, "template degree (1 or 2)");
  check->add_option("--max-coeff", cfg.max_coeff, "largest coefficient");
  check->add_option("--timeout", cfg.timeout_seconds, "seconds");
  check->add_option("--threads", cfg.parallelism, "search workers");
  check->add_flag("--no-fun-args", no_fun_args,
                  "templates without F(...) atoms");
  check->add_option("--cert", cert_out, "write the certificate here");

  CLI::App* verify = app.add_subcommand("verify", "Check a certificate "
                                                  "against a system");
  verify->add_option("file", file, "system file")->required();
  verify->add_option("--cert", cert_in, "certificate file")->required();

  CLI::App* normalize = app.add_subcommand("normalize",
                                           "Normalize a closed term");
  normalize->add_option("file", file, "system file")->required();
  normalize->add_option("--term", term_text, "term to normalize")->required();
  normalize->add_option("--fuel", fuel, "step limit");

  CLI::App* typecheck = app.add_subcommand("typecheck",
                                           "Parse and typecheck a system");
  typecheck->add_option("file", file, "system file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      cfg.allow_fun_args = !no_fun_args;
      return run_check(file, cfg, cert_out);
    }
    if (*verify) return run_verify(file, cert_in);
    if (*normalize) return run_normalize(file, term_text, fuel);
    if (*typecheck) return run_typecheck(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
