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

#include "apolar/hilbert.hpp"

#include <algorithm>

namespace apolar {

std::vector<long> hilbert_function(const Ideal& ideal, int max_degree) {
  const RingPtr& ring = ideal.ring();
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::degrevlex()))
    leads.push_back(g.leading_monomial());

  std::vector<long> h;
  h.reserve(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    long count = 0;
    for (const auto& m : monomials_of_degree(ring->nvars(), d, ring->order)) {
      bool standard = true;
      for (const auto& lt : leads) {
        if (lt.divides(m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
    }
    h.push_back(count);
  }
  return h;
}

HilbertProfile::HilbertProfile(std::vector<long> dh) : dh_(std::move(dh)) {
  while (!dh_.empty() && dh_.back() == 0) dh_.pop_back();
  for (long v : dh_) length_ += v;
  validate();
}

void HilbertProfile::validate() const {
  if (dh_.empty()) return;
  if (dh_[0] != 1) throw ProfileError("first difference must start with 1 in degree 0");
  for (std::size_t i = 0; i < dh_.size(); ++i) {
    long v = dh_[i];
    long idx = static_cast<long>(i);
    if (v < 0) throw ProfileError("first difference entries must be non-negative");
    if (v > idx + 1)
      throw ProfileError("plane first difference cannot exceed degree+1 at degree " +
                         std::to_string(i));
    if (i + 1 < dh_.size() && v < idx && dh_[i + 1] > v)
      throw ProfileError("first difference must be non-increasing once below its degree (degree " +
                         std::to_string(i) + ")");
  }
}

HilbertProfile HilbertProfile::from_hilbert(const std::vector<long>& h) {
  std::vector<long> dh;
  dh.reserve(h.size());
  long prev = 0;
  for (long v : h) {
    if (v < prev) throw ProfileError("Hilbert function must be non-decreasing");
    dh.push_back(v - prev);
    prev = v;
  }
  return HilbertProfile(std::move(dh));
}

HilbertProfile HilbertProfile::from_dh(std::vector<long> dh) {
  return HilbertProfile(std::move(dh));
}

int HilbertProfile::regularity() const {
  if (dh_.empty()) return 0;
  return static_cast<int>(dh_.size()) - 1;
}

long HilbertProfile::h1(int d) const {
  long tail = 0;
  for (int i = d + 1; i < static_cast<int>(dh_.size()); ++i) tail += dh_[i];
  return tail;
}

long HilbertProfile::hilbert(int d) const {
  long s = 0;
  for (int i = 0; i <= d && i < static_cast<int>(dh_.size()); ++i) s += dh_[i];
  return s;
}

HilbertProfile point_profile(const Ideal& ideal, int degree_hint) {
  for (int d = std::max(degree_hint, 4); d <= 256; d *= 2) {
    std::vector<long> h = hilbert_function(ideal, d);
    if (h.size() >= 2 && h[h.size() - 1] == h[h.size() - 2])
      return HilbertProfile::from_hilbert(h);
  }
  throw ProfileError("Hilbert function did not stabilize: not a finite point set");
}

std::string profile_to_string(const HilbertProfile& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.dh().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.dh()[i]);
  }
  return s + "]";
}

}  // namespace apolar
