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

#ifndef APOLAR_LIAISON_HPP
#define APOLAR_LIAISON_HPP

#include "apolar/apolarity.hpp"

namespace apolar {

/// First difference of a complete intersection of type (d1, d2):
/// 1, 2, ..., min, plateau, ..., 2, 1 of length d1 + d2 - 1.
HilbertProfile ci_profile(int d1, int d2);

/// Ideal of two random forms of the given degrees through the scheme of
/// base_ideal, re-drawn until the pair cuts out a complete intersection
/// (dimension 1 and degree d1*d2).
Ideal ci_through(const Ideal& base_ideal, int d1, int d2, const RandomConfig& cfg, Rng& rng);

struct LinkOptions {
  bool check_containment = true;
  bool check_length = true;
  bool check_dh = true;
  bool check_disjoint = false;  // union of residue and base has empty locus
};

/// Residue of the linked scheme: ci : base. Verifies the requested liaison
/// identities and throws GenericityError when the sample fails them.
Ideal link(const Ideal& ci, const Ideal& base, const LinkOptions& opts = {});

/// First-difference identity between linked point sets through a complete
/// intersection of type (d1, d2).
bool verify_linkage_dh(const HilbertProfile& dh_a, const HilbertProfile& dh_b, int d1, int d2);

/// True when every degree-d form vanishing on all but one point of Z also
/// vanishes at the remaining point, for every choice of the omitted point.
bool cb_check(const PointSet& z, int d);

/// Partial-sum inequalities a profile of such a point set must satisfy:
/// for all i in 0..d+1, sum of dh(0..i) <= sum of dh(d+1-i..d+1).
bool cb_inequalities(const HilbertProfile& p, int d);

struct RankCertificate {
  long bound = 0;
  std::vector<long> witness_profile;  // a feasible union profile attaining the bound
  long constraints_checked = 0;       // complete candidate profiles tested
};

/// Certified lower bound on the cardinality of any second non-redundant
/// point set annihilating the same degree-d form: the minimum total of a
/// union profile dominating dh_z1, capped by min(i+1, d+2-i) columnwise
/// (the plane staircase and its mirror), non-increasing once below its
/// index, and satisfying the partial-sum inequalities in degree d -- minus
/// the cardinality of the first set.
RankCertificate rank_lower_bound_cb(const HilbertProfile& dh_z1, int d);

}  // namespace apolar

#endif  // APOLAR_LIAISON_HPP
