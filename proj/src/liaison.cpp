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

#include "apolar/liaison.hpp"

#include <algorithm>

namespace apolar {

HilbertProfile ci_profile(int d1, int d2) {
  std::vector<long> dh;
  for (int i = 0; i <= d1 + d2 - 2; ++i)
    dh.push_back(std::min({static_cast<long>(i) + 1, static_cast<long>(d1),
                           static_cast<long>(d2), static_cast<long>(d1 + d2 - 1 - i)}));
  return HilbertProfile::from_dh(std::move(dh));
}

Ideal ci_through(const Ideal& base_ideal, int d1, int d2, const RandomConfig& cfg, Rng& rng) {
  if (d1 > d2) std::swap(d1, d2);
  std::vector<Polynomial> basis1 = degree_basis(base_ideal, d1);
  std::vector<Polynomial> basis2 = degree_basis(base_ideal, d2);
  if (basis1.empty() || basis2.empty())
    throw std::invalid_argument("no forms of the requested degree pass through the scheme");

  const Field& field = base_ideal.ring()->field;
  auto random_combo = [&](const std::vector<Polynomial>& basis) {
    Polynomial f = Polynomial::zero(base_ideal.ring());
    for (const auto& b : basis)
      f = f + b.scale(field.from_int(rng.uniform(-cfg.coordinate_bound, cfg.coordinate_bound)));
    return f;
  };

  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Polynomial f1 = random_combo(basis1);
    Polynomial f2 = random_combo(basis2);
    if (f1.is_zero() || f2.is_zero()) continue;
    Ideal ci(base_ideal.ring(), {f1, f2});
    DimDegree dd = dim_degree(ci);
    if (dd.dim == 1 && dd.degree == static_cast<long>(d1) * d2) return ci;
  }
  throw GenericityError("no complete intersection of type (" + std::to_string(d1) + "," +
                        std::to_string(d2) + ") found within the retry budget");
}

namespace {

std::pair<int, int> ci_degrees(const Ideal& ci) {
  if (ci.generators().size() != 2)
    throw std::invalid_argument("complete intersection must have two generators");
  int d1 = ci.generators()[0].degree();
  int d2 = ci.generators()[1].degree();
  if (d1 > d2) std::swap(d1, d2);
  return {d1, d2};
}

}  // namespace

Ideal link(const Ideal& ci, const Ideal& base, const LinkOptions& opts) {
  check_compatible(ci.ring(), base.ring());
  auto [d1, d2] = ci_degrees(ci);
  if (opts.check_containment && !is_subset(ci, base))
    throw std::invalid_argument("complete intersection does not contain the linked scheme");

  Ideal residue = quotient(ci, base);

  if (opts.check_length || opts.check_dh) {
    HilbertProfile pa = point_profile(base);
    HilbertProfile pb = point_profile(residue);
    if (opts.check_length && pb.length() != static_cast<long>(d1) * d2 - pa.length())
      throw GenericityError("residue length disagrees with the linkage count");
    if (opts.check_dh && !verify_linkage_dh(pa, pb, d1, d2))
      throw GenericityError("residue first difference disagrees with the linkage identity");
  }
  if (opts.check_disjoint && !is_unit_ideal(saturate(ideal_sum(base, residue))))
    throw GenericityError("residue meets the linked scheme");
  return residue;
}

bool verify_linkage_dh(const HilbertProfile& dh_a, const HilbertProfile& dh_b, int d1, int d2) {
  HilbertProfile z = ci_profile(d1, d2);
  int top = d1 + d2 - 2;
  int span = std::max({top, static_cast<int>(dh_a.dh().size()) - 1,
                       static_cast<int>(dh_b.dh().size()) - 1});
  for (int i = 0; i <= span; ++i) {
    if (dh_b.dh_at(i) + dh_a.dh_at(top - i) != z.dh_at(i)) return false;
  }
  return true;
}

bool cb_check(const PointSet& z, int d) {
  if (z.size() == 0) return true;
  long full = points_hilbert_at(z, d);
  for (std::size_t i = 0; i < z.points().size(); ++i) {
    if (points_hilbert_at(z.without(i), d) != full) return false;
  }
  return true;
}

bool cb_inequalities(const HilbertProfile& p, int d) {
  for (int i = 0; i <= d + 1; ++i) {
    long lhs = 0, rhs = 0;
    for (int j = 0; j <= i; ++j) {
      lhs += p.dh_at(j);
      rhs += p.dh_at(d + 1 - j);
    }
    if (lhs > rhs) return false;
  }
  return true;
}

namespace {

struct BoundSearch {
  int n;  // profile positions 0..n-1
  int d;
  std::vector<long> lower;
  std::vector<long> lower_tail;  // suffix sums of lower
  std::vector<long> profile;
  long best_sum = -1;
  std::vector<long> best_profile;
  long leaves = 0;

  bool satisfies_partial_sums() const {
    for (int i = 0; i <= d + 1; ++i) {
      long lhs = 0, rhs = 0;
      for (int j = 0; j <= i; ++j) {
        lhs += profile[j];
        int k = d + 1 - j;
        rhs += k >= 0 && k < n ? profile[k] : 0;
      }
      if (lhs > rhs) return false;
    }
    return true;
  }

  void dfs(int pos, long sum) {
    if (best_sum >= 0 && sum + lower_tail[pos] >= best_sum) return;
    if (pos == n) {
      ++leaves;
      if (satisfies_partial_sums() && (best_sum < 0 || sum < best_sum)) {
        best_sum = sum;
        best_profile = profile;
      }
      return;
    }
    long hi = std::min<long>(pos + 1, d + 2 - pos);
    if (pos > 0 && profile[pos - 1] < pos - 1) hi = std::min(hi, profile[pos - 1]);
    for (long v = lower[pos]; v <= hi; ++v) {
      profile[pos] = v;
      dfs(pos + 1, sum + v);
    }
    profile[pos] = 0;
  }
};

}  // namespace

RankCertificate rank_lower_bound_cb(const HilbertProfile& dh_z1, int d) {
  const int n = d + 2;
  if (static_cast<int>(dh_z1.dh().size()) > n)
    throw std::invalid_argument("profile support exceeds degree+1: constraints are infeasible");

  BoundSearch search;
  search.n = n;
  search.d = d;
  search.lower.resize(n, 0);
  for (int i = 0; i < n; ++i) search.lower[i] = dh_z1.dh_at(i);
  search.lower_tail.assign(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) search.lower_tail[i] = search.lower_tail[i + 1] + search.lower[i];
  search.profile.assign(n, 0);
  search.dfs(0, 0);

  if (search.best_sum < 0)
    throw std::invalid_argument("no feasible union profile: constraints are infeasible");
  RankCertificate cert;
  cert.bound = search.best_sum - dh_z1.length();
  cert.witness_profile = search.best_profile;
  while (!cert.witness_profile.empty() && cert.witness_profile.back() == 0)
    cert.witness_profile.pop_back();
  cert.constraints_checked = search.leaves;
  return cert;
}

}  // namespace apolar
