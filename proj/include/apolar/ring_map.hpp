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

#ifndef APOLAR_RING_MAP_HPP
#define APOLAR_RING_MAP_HPP

#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

/// Ring homomorphism determined by one target-ring image per source variable.
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;

  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  /// Simultaneous substitution of the variable images into f.
  Polynomial apply(const Polynomial& f) const;

  static RingMap identity(const RingPtr& ring);
};

}  // namespace apolar

#endif  // APOLAR_RING_MAP_HPP
