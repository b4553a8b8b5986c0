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

#ifndef HOTERM_ORDER_HPP
#define HOTERM_ORDER_HPP

#include <string>
#include <vector>

#include "hoterm/poly.hpp"
#include "hoterm/types.hpp"

namespace hoterm {

// An element of the interpretation of a type: a natural at base types, a
// weakly monotone functional at arrow types, represented by a polynomial
// over the uncurried argument context of the type.
class SemValue {
 public:
  static SemValue number(Nat n);
  static SemValue functional(SimpleType type, HOPoly body);

  bool is_number() const { return number_; }
  const Nat& value() const;
  const SimpleType& type() const;  // functionals only
  const HOPoly& body() const;      // functionals only

 private:
  SemValue() : type_(SimpleType::base("")) {}
  bool number_ = true;
  Nat value_;
  SimpleType type_;
  HOPoly body_;
};

// One semantic value per context variable, matching sorts: numeric
// variables get numbers, function variables get functionals of matching
// arity over base arguments.
using Valuation = std::vector<SemValue>;

// Exact evaluation over the naturals. Throws PolyError when the valuation
// does not fit the polynomial's context.
Nat eval(const HOPoly& p, const Valuation& theta);

// Full application of a value to arguments (empty for numbers).
Nat apply_value(const SemValue& f, const Valuation& args);

// Least representable value of a type: 0, or the constant-zero functional.
SemValue bottom(const SimpleType& t);

// Flatten to a natural: numbers are themselves, functionals evaluate at
// the bottoms of their argument types.
Nat nu(const SemValue& v);

// Argument tuples used to compare functionals pointwise. Ignored for
// numbers. A comparison over a probe set is a sound approximation of the
// pointwise order: a reported "greater" may still fail off-probe, so
// probe-based results are for testing and diagnostics, never verdicts.
struct ProbeSet {
  std::vector<Valuation> tuples;
};

bool sem_ge(const SemValue& a, const SemValue& b, const ProbeSet& probes);
bool sem_gt(const SemValue& a, const SemValue& b, const ProbeSet& probes);

struct OrderAxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Extended well-founded set laws on a finite sample, with the probe-based
// relations: ge reflexive and transitive, gt irreflexive, gt subset of
// ge, and both compatibilities gt.ge and ge.gt landing in gt.
OrderAxiomReport check_order_axioms(const std::vector<SemValue>& samples,
                                    const ProbeSet& probes);

}  // namespace hoterm

#endif  // HOTERM_ORDER_HPP
