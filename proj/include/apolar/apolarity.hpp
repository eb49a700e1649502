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

#ifndef APOLAR_APOLARITY_HPP
#define APOLAR_APOLARITY_HPP

#include "apolar/points.hpp"

namespace apolar {

/// Matrix of the contraction R_e -> S_{d-e}, g -> g acting on f. Rows are
/// indexed by the degree d-e monomials of f's ring, columns by the degree-e
/// monomials of the dual ring, both sorted descending.
struct CatalecticantMatrix {
  int e = 0;
  int d = 0;
  ExactMatrix matrix;
  std::vector<Monomial> row_monomials;
  std::vector<Monomial> col_monomials;
};

CatalecticantMatrix catalecticant(const Polynomial& f, int e);

long catalecticant_rank(const Polynomial& f, int e);

/// Annihilator of f under the differentiation action, generated degreewise by
/// the catalecticant kernels for e = 1..deg f plus everything in degree
/// deg f + 1. Lives in the dual ring.
Ideal apolar_ideal(const Polynomial& f);

/// True exactly when every generator of the ideal kills f, i.e. the ideal is
/// contained in the annihilator. Generators may be tagged in f's ring or its
/// dual; variables pair positionally.
bool is_apolar(const Ideal& ideal, const Polynomial& f);

/// Dimension of the span intersection of the degree-d images of two point
/// sets: |A meet B| - 1 + h1 of the union at d. -1 encodes an empty
/// intersection.
long span_intersection_dim(const PointSet& a, const PointSet& b, int d);

/// Kernel of the pairing between (I1)_d + (I2)_d and the degree-d monomial
/// basis. A one-dimensional kernel pins down the unique common annihilated
/// form.
struct SpanKernel {
  int dim = 0;
  std::vector<Polynomial> basis;  // canonical echelon representatives, lead coeff 1
};

SpanKernel common_apolar_form(const Ideal& i1, const Ideal& i2, int d);

/// Exact coefficients a_i with f = sum a_i l_i^d over the points of A, or
/// nothing when f is outside the span. Free coordinates resolve to zero.
std::optional<std::vector<FieldElement>> decompose_on_points(const Polynomial& f,
                                                             const PointSet& a);

}  // namespace apolar

#endif  // APOLAR_APOLARITY_HPP
