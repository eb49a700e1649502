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

#ifndef APOLAR_RING_HPP
#define APOLAR_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

struct RingMismatchError : std::runtime_error {
  explicit RingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable polynomial-ring descriptor: coefficient field, named variables,
/// and the order terms are kept sorted in.
struct Ring {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order;

  Ring(Field field, std::vector<std::string> vars, MonomialOrder order)
      : field(field), vars(std::move(vars)), order(order) {}

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const;  // -1 if absent

  /// Same field and variables; the order may differ.
  bool same_structure(const Ring& o) const { return field == o.field && vars == o.vars; }

  std::string to_string() const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const Field& field, std::vector<std::string> vars,
                  const MonomialOrder& order = MonomialOrder::degrevlex());

/// Same ring with a different comparison order.
RingPtr ring_with_order(const RingPtr& ring, const MonomialOrder& order);

/// The ternary ring k[x,y,z].
RingPtr ternary_ring(const Field& field);
/// The dual ternary ring k[u,v,w] acting on k[x,y,z] by differentiation.
RingPtr dual_ring(const RingPtr& ring);

void check_compatible(const RingPtr& a, const RingPtr& b);

}  // namespace apolar

#endif  // APOLAR_RING_HPP
