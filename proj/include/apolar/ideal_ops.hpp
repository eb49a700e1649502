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

#ifndef APOLAR_IDEAL_OPS_HPP
#define APOLAR_IDEAL_OPS_HPP

#include <optional>

#include "apolar/hilbert.hpp"
#include "apolar/ring_map.hpp"

namespace apolar {

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// I ∩ J through the auxiliary-variable ideal t·I + (1-t)·J.
Ideal intersect_ideals(const Ideal& a, const Ideal& b);

/// Colon ideal I : ⟨g⟩ = (1/g)(I ∩ ⟨g⟩).
Ideal quotient_by_element(const Ideal& ideal, const Polynomial& g);

/// Colon ideal I : J, the intersection of the single-element colons over the
/// generators of J.
Ideal quotient(const Ideal& ideal, const Ideal& divisor);

Ideal irrelevant_ideal(const RingPtr& ring);

/// I : J^∞ by iterating the colon to a fixpoint.
Ideal saturate(const Ideal& ideal, const Ideal& divisor);
/// Saturation with respect to the irrelevant maximal ideal.
Ideal saturate(const Ideal& ideal);

/// Kernel of a ring map via its graph ideal: adjoin one variable per source
/// variable, add variable - image, and eliminate the target block.
Ideal kernel_of_map(const RingMap& map);

/// Points of the map's source projective line/space over the locus of q,
/// computed from the graph ideal. With a constraint ideal the result is
/// lifted by variable name into the constraint's ring, combined with it and
/// saturated there; otherwise the saturated ideal is returned in the map's
/// target ring. The empty fiber yields the unit ideal.
Ideal map_fiber(const RingMap& map, const Ideal& q, const std::optional<Ideal>& constraint);

/// Saturated ideal of the singular locus of a plane curve (the curve plus its
/// partial derivatives); input must be principal.
Ideal singular_locus(const Ideal& curve);

struct DimDegree {
  int dim;      // Krull dimension of the graded quotient (a point set has 1)
  long degree;  // stabilized value of the Hilbert profile
};

DimDegree dim_degree(const Ideal& ideal);

/// Radical test for a zero-dimensional subscheme of the line L = 0: the
/// restriction of the ideal to the line is a binary form, squarefree exactly
/// when the scheme is reduced.
bool is_radical_collinear(const Ideal& ideal, const Polynomial& line);

/// Vector-space basis of the degree-d part of the ideal, row reduced to a
/// canonical echelon basis over the degree-d monomials.
std::vector<Polynomial> degree_basis(const Ideal& ideal, int d);

/// dim_k I_d without materializing the basis.
long degree_dimension(const Ideal& ideal, int d);

/// Binary-form gcd (two variables, homogeneous), monic.
Polynomial binary_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace apolar

#endif  // APOLAR_IDEAL_OPS_HPP
