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

#include "apolar/ring_map.hpp"

namespace apolar {

RingMap::RingMap(RingPtr source_ring, RingPtr target_ring, std::vector<Polynomial> images_in)
    : source(std::move(source_ring)), target(std::move(target_ring)), images(std::move(images_in)) {
  if (static_cast<int>(images.size()) != source->nvars())
    throw RingMismatchError("ring map needs one image per source variable");
  for (const auto& img : images) check_compatible(img.ring(), target);
  if (source->field != target->field) throw FieldMismatchError("ring map across fields");
}

Polynomial RingMap::apply(const Polynomial& f) const {
  check_compatible(f.ring(), source);
  Polynomial result = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < source->nvars(); ++i) {
      int e = t.monomial.exponent(i);
      if (e > 0) term = term * images[i].pow(e);
    }
    result = result + term;
  }
  return result;
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (int i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
  return RingMap(ring, ring, std::move(images));
}

}  // namespace apolar
