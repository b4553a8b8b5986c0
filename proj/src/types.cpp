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

#include "hoterm/types.hpp"

#include <algorithm>

#include "hoterm/error.hpp"

namespace hoterm {

SimpleType SimpleType::base(std::string name) {
  auto n = std::make_shared<Node>();
  n->base = true;
  n->name = std::move(name);
  return wrap(std::move(n));
}

SimpleType SimpleType::fun(SimpleType dom, SimpleType cod) {
  auto n = std::make_shared<Node>();
  n->base = false;
  n->dom_n = std::move(dom.node_);
  n->cod_n = std::move(cod.node_);
  return wrap(std::move(n));
}

const std::string& SimpleType::base_name() const {
  if (!node_->base) throw Error("base_name on arrow type");
  return node_->name;
}

SimpleType SimpleType::dom() const {
  if (node_->base) throw Error("dom on base type");
  return wrap(node_->dom_n);
}

SimpleType SimpleType::cod() const {
  if (node_->base) throw Error("cod on base type");
  return wrap(node_->cod_n);
}

int SimpleType::order() const {
  if (is_base()) return 0;
  int d = wrap(node_->dom_n).order();
  int c = wrap(node_->cod_n).order();
  return std::max(d + 1, c);
}

std::string SimpleType::to_string() const {
  if (is_base()) return node_->name;
  SimpleType d = wrap(node_->dom_n);
  SimpleType c = wrap(node_->cod_n);
  std::string left = d.to_string();
  if (d.is_fun()) left = "(" + left + ")";
  return left + " -> " + c.to_string();
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->base != b.node_->base) return false;
  if (a.node_->base) return a.node_->name == b.node_->name;
  return SimpleType::wrap(a.node_->dom_n) == SimpleType::wrap(b.node_->dom_n) &&
         SimpleType::wrap(a.node_->cod_n) == SimpleType::wrap(b.node_->cod_n);
}

TypeDecomp arity_decompose(const SimpleType& t) {
  TypeDecomp d;
  SimpleType cur = t;
  while (cur.is_fun()) {
    d.args.push_back(cur.dom());
    cur = cur.cod();
  }
  d.head = cur.base_name();
  return d;
}

SimpleType compose_type(const std::vector<SimpleType>& args,
                        const std::string& head) {
  SimpleType t = SimpleType::base(head);
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    t = SimpleType::fun(*it, t);
  }
  return t;
}

}  // namespace hoterm
