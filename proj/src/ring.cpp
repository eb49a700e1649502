/*
   Copyright 2026 The apolar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "apolar/ring.hpp"

#include <algorithm>

namespace apolar {

int Ring::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

std::string Ring::to_string() const {
  std::string s = "ring ";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i];
  }
  s += " over " + field.to_string();
  return s;
}

RingPtr make_ring(const Field& field, std::vector<std::string> vars, const MonomialOrder& order) {
  if (vars.empty() || vars.size() > kMaxVars)
    throw std::invalid_argument("variable count must be between 1 and " + std::to_string(kMaxVars));
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name: " + vars[i]);
  return std::make_shared<Ring>(field, std::move(vars), order);
}

RingPtr ring_with_order(const RingPtr& ring, const MonomialOrder& order) {
  if (ring->order == order) return ring;
  return make_ring(ring->field, ring->vars, order);
}

RingPtr ternary_ring(const Field& field) { return make_ring(field, {"x", "y", "z"}); }

RingPtr dual_ring(const RingPtr& ring) {
  if (ring->vars == std::vector<std::string>{"x", "y", "z"})
    return make_ring(ring->field, {"u", "v", "w"}, ring->order);
  if (ring->vars == std::vector<std::string>{"u", "v", "w"})
    return make_ring(ring->field, {"x", "y", "z"}, ring->order);
  std::vector<std::string> dual;
  dual.reserve(ring->vars.size());
  for (const auto& v : ring->vars) dual.push_back("d" + v);
  return make_ring(ring->field, std::move(dual), ring->order);
}

void check_compatible(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_structure(*b))
    throw RingMismatchError("polynomials from incompatible rings");
}

}  // namespace apolar
