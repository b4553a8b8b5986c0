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

#ifndef HOTERM_TYPES_HPP
#define HOTERM_TYPES_HPP

#include <memory>
#include <string>
#include <vector>

namespace hoterm {

// Simple types over named base sorts, closed under the arrow. Immutable,
// cheap to copy (shared nodes). `a -> b -> c` associates to the right.
class SimpleType {
 public:
  static SimpleType base(std::string name);
  static SimpleType fun(SimpleType dom, SimpleType cod);

  bool is_base() const { return node_->base; }
  bool is_fun() const { return !node_->base; }
  const std::string& base_name() const;
  SimpleType dom() const;
  SimpleType cod() const;

  // 0 for base sorts, max(order(dom)+1, order(cod)) for arrows. Order 1
  // means "functions over base data"; symbols of the supported fragment
  // have order at most 2.
  int order() const;

  std::string to_string() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b);
  friend bool operator!=(const SimpleType& a, const SimpleType& b) {
    return !(a == b);
  }

 private:
  struct Node {
    bool base;
    std::string name;                    // base only
    std::shared_ptr<const Node> dom_n;   // fun only
    std::shared_ptr<const Node> cod_n;   // fun only
  };
  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static SimpleType wrap(std::shared_ptr<const Node> n) {
    return SimpleType(std::move(n));
  }
  std::shared_ptr<const Node> node_;
};

// A1 -> ... -> An -> b  split into ([A1..An], b). args is empty for base
// types; head is always a base sort name.
struct TypeDecomp {
  std::vector<SimpleType> args;
  std::string head;
};

TypeDecomp arity_decompose(const SimpleType& t);

// Inverse of arity_decompose.
SimpleType compose_type(const std::vector<SimpleType>& args,
                        const std::string& head);

}  // namespace hoterm

#endif  // HOTERM_TYPES_HPP
