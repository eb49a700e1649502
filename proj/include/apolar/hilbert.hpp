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

#ifndef APOLAR_HILBERT_HPP
#define APOLAR_HILBERT_HPP

#include <vector>

#include "apolar/groebner.hpp"

namespace apolar {

struct ProfileError : std::runtime_error {
  explicit ProfileError(const std::string& what) : std::runtime_error(what) {}
};

/// Values h(0..max_degree) of the Hilbert function of ring/ideal, counted as
/// the standard monomials of each degree outside the lead-term ideal.
std::vector<long> hilbert_function(const Ideal& ideal, int max_degree);

/// First-difference sequence of the Hilbert function of a graded quotient,
/// trailing zeros trimmed. For a plane point set: nonnegative entries,
/// leading 1, entries capped by i+1, and once an entry drops below its index
/// the sequence is non-increasing. Violations are rejected by name.
class HilbertProfile {
 public:
  /// From the cumulative Hilbert function h(0), h(1), ...
  static HilbertProfile from_hilbert(const std::vector<long>& h);
  /// From the difference sequence itself.
  static HilbertProfile from_dh(std::vector<long> dh);

  const std::vector<long>& dh() const { return dh_; }
  long dh_at(int i) const { return i >= 0 && i < static_cast<int>(dh_.size()) ? dh_[i] : 0; }

  /// Total length: sum of the differences (point count for point sets).
  long length() const { return length_; }

  bool empty() const { return dh_.empty(); }

  /// Index of the last nonzero difference: the smallest r with h(r) = length.
  int regularity() const;

  /// Tail sum past degree d: length - h(d).
  long h1(int d) const;

  /// Cumulative value h(d).
  long hilbert(int d) const;

  bool operator==(const HilbertProfile& o) const { return dh_ == o.dh_; }
  bool operator!=(const HilbertProfile& o) const { return !(*this == o); }

 private:
  explicit HilbertProfile(std::vector<long> dh);
  void validate() const;

  std::vector<long> dh_;
  long length_ = 0;
};

/// Profile of a finite-length ideal computed out to stabilization.
HilbertProfile point_profile(const Ideal& ideal, int degree_hint = 0);

std::string profile_to_string(const HilbertProfile& p);

}  // namespace apolar

#endif  // APOLAR_HILBERT_HPP
