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

#ifndef HOTERM_PRINTER_HPP
#define HOTERM_PRINTER_HPP

#include <string>
#include <vector>

#include "hoterm/parser.hpp"

namespace hoterm {

// Surface syntax of a term, with minimal parentheses. Free variable i is
// printed as free_names[i]; binders get fresh names v0, v1, ... skipping
// collisions. parse_term/parse_afs read the output back.
std::string print_term(const Term& t,
                       const std::vector<std::string>& free_names = {});

// The SIG/VARS/RULES document; parse_afs(print_afs(f)) reproduces f.
std::string print_afs(const AfsFile& file);

}  // namespace hoterm

#endif  // HOTERM_PRINTER_HPP
